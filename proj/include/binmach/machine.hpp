#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "binmach/state_assignment.hpp"

namespace binmach {

// Where the 2^k - n states off the generation cycle transition to.
enum class RemainingStatePolicy {
  zero_sink,  // all of them go to state 0
  cycle,      // they form their own cycle, making the step map a permutation
};

std::string_view to_string(RemainingStatePolicy p) noexcept;
std::optional<RemainingStatePolicy> parse_policy(std::string_view s) noexcept;

/// A register of k stages, each stage driven by its own next-state function
/// given as a support set. Stage j holds bit j of the state; stage 0 is the
/// output. Immutable after construction.
class BinaryMachine {
public:
  BinaryMachine(int k, std::vector<std::vector<std::uint32_t>> supports,
                RemainingStatePolicy policy, std::uint32_t initial_state);

  int stages() const noexcept { return k_; }
  std::uint32_t state_count() const noexcept { return 1u << k_; }
  RemainingStatePolicy policy() const noexcept { return policy_; }
  std::uint32_t initial_state() const noexcept { return initial_state_; }

  // Support of f_j, ascending.
  const std::vector<std::uint32_t>& support(int j) const { return supports_.at(j); }
  const std::vector<std::vector<std::uint32_t>>& supports() const noexcept { return supports_; }

  // One step: bit j of the result is 1 iff x is in the support of f_j.
  std::uint32_t transition(std::uint32_t x) const;

  // States on the generation cycle through initial_state, ascending.
  // Throws non_cyclic_reachability if stepping never returns to initial_state.
  std::vector<std::uint32_t> used_states() const;

private:
  int k_;
  std::vector<std::vector<std::uint32_t>> supports_;
  RemainingStatePolicy policy_;
  std::uint32_t initial_state_;
};

// Wire s_i -> s_{(i+1) mod n} into per-stage supports. Zero-sink leaves the
// remaining states out of every support; cycle chains them in ascending
// order into their own loop. O(n*k) plus the policy's unused-state scan.
BinaryMachine build_machine(const StateSequence& s, RemainingStatePolicy policy);

}  // namespace binmach
