#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "binmach/machine.hpp"
#include "binmach/sequence.hpp"

namespace binmach {

// One run of a machine: the state visited at each step and the output bit
// (stage 0) read from it.  states.size() == output_bits.size() == step count.
struct SimulationTrace {
  std::vector<std::uint32_t> states;
  std::vector<std::uint8_t> output_bits;

  std::size_t steps() const noexcept { return states.size(); }
};

// Runs `steps` transitions starting from `start`, recording each state
// before it is advanced.
SimulationTrace run(const BinaryMachine& m, std::uint32_t start, std::size_t steps);

// True iff an a.size()-step run from the initial state outputs exactly `a`
// and the state reached after the final step is the initial state again
// (i.e. the machine regenerates `a` periodically).
bool verify_generates(const BinaryMachine& m, const BinarySequence& a);

// Smallest t >= 1 such that t transitions from `start` return to `start`,
// searching at most 2^k steps; nullopt if `start` never recurs (it feeds
// into a cycle it does not belong to, which zero-sink machines allow).
std::optional<std::size_t> cycle_length(const BinaryMachine& m, std::uint32_t start);

// Human-readable table: one line per step, "<step> <state bits MSB-first>
// <output bit>".
std::string format_trace(const SimulationTrace& trace, int k);

}  // namespace binmach
