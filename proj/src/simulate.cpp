#include "binmach/simulate.hpp"

namespace binmach {

SimulationTrace run(const BinaryMachine& m, std::uint32_t start, std::size_t steps) {
  SimulationTrace trace;
  trace.states.reserve(steps);
  trace.output_bits.reserve(steps);
  std::uint32_t x = start;
  for (std::size_t i = 0; i < steps; ++i) {
    trace.states.push_back(x);
    trace.output_bits.push_back(static_cast<std::uint8_t>(x & 1u));
    x = m.transition(x);
  }
  if (steps == 0) (void)m.transition(start);  // still range-check the start state
  return trace;
}

bool verify_generates(const BinaryMachine& m, const BinarySequence& a) {
  std::uint32_t x = m.initial_state();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if ((x & 1u) != a.bits()[i]) return false;
    x = m.transition(x);
  }
  return x == m.initial_state();
}

std::optional<std::size_t> cycle_length(const BinaryMachine& m, std::uint32_t start) {
  std::uint32_t x = m.transition(start);
  for (std::size_t t = 1; t <= m.state_count(); ++t) {
    if (x == start) return t;
    x = m.transition(x);
  }
  return std::nullopt;  // 2^k distinct steps without recurrence: start is off-cycle
}

std::string format_trace(const SimulationTrace& trace, int k) {
  std::string out;
  for (std::size_t i = 0; i < trace.states.size(); ++i) {
    out += std::to_string(i);
    out += ' ';
    for (int j = k - 1; j >= 0; --j)
      out += static_cast<char>('0' + ((trace.states[i] >> j) & 1u));
    out += ' ';
    out += static_cast<char>('0' + trace.output_bits[i]);
    out += '\n';
  }
  return out;
}

}  // namespace binmach
