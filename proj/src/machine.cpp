#include "binmach/machine.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace binmach {

std::string_view to_string(RemainingStatePolicy p) noexcept {
  return p == RemainingStatePolicy::zero_sink ? "zero-sink" : "cycle";
}

std::optional<RemainingStatePolicy> parse_policy(std::string_view s) noexcept {
  if (s == "zero-sink") return RemainingStatePolicy::zero_sink;
  if (s == "cycle") return RemainingStatePolicy::cycle;
  return std::nullopt;
}

BinaryMachine::BinaryMachine(int k, std::vector<std::vector<std::uint32_t>> supports,
                             RemainingStatePolicy policy, std::uint32_t initial_state)
    : k_(k), supports_(std::move(supports)), policy_(policy), initial_state_(initial_state) {
  if (k_ < 1 || k_ > 31) throw std::invalid_argument("stage count must be in [1, 31]");
  if (supports_.size() != static_cast<std::size_t>(k_))
    throw std::invalid_argument("expected one support per stage");
  const std::uint32_t limit = 1u << k_;
  if (initial_state_ >= limit) throw std::invalid_argument("initial state out of range");
  for (auto& sup : supports_) {
    std::sort(sup.begin(), sup.end());
    if (std::adjacent_find(sup.begin(), sup.end()) != sup.end())
      throw std::invalid_argument("support contains duplicate states");
    if (!sup.empty() && sup.back() >= limit)
      throw std::invalid_argument("support state out of range");
  }
}

std::uint32_t BinaryMachine::transition(std::uint32_t x) const {
  if (x >= state_count())
    throw Error(Errc::state_out_of_range,
                "state " + std::to_string(x) + " out of range for k=" + std::to_string(k_));
  std::uint32_t next = 0;
  for (int j = 0; j < k_; ++j) {
    if (std::binary_search(supports_[j].begin(), supports_[j].end(), x)) next |= 1u << j;
  }
  return next;
}

std::vector<std::uint32_t> BinaryMachine::used_states() const {
  std::vector<std::uint32_t> cycle{initial_state_};
  std::uint32_t x = initial_state_;
  for (std::uint64_t steps = 0; steps < state_count(); ++steps) {
    x = transition(x);
    if (x == initial_state_) {
      std::sort(cycle.begin(), cycle.end());
      return cycle;
    }
    cycle.push_back(x);
  }
  throw Error(Errc::non_cyclic_reachability,
              "initial state " + std::to_string(initial_state_) + " is not on a cycle");
}

BinaryMachine build_machine(const StateSequence& s, RemainingStatePolicy policy) {
  const int k = s.width();
  const auto& states = s.states();
  const std::size_t n = states.size();
  std::vector<std::vector<std::uint32_t>> supports(k);

  auto add_edge = [&](std::uint32_t from, std::uint32_t to) {
    for (int j = 0; j < k; ++j)
      if ((to >> j) & 1u) supports[j].push_back(from);
  };

  for (std::size_t i = 0; i < n; ++i) add_edge(states[i], states[(i + 1) % n]);

  if (policy == RemainingStatePolicy::cycle) {
    const std::uint32_t limit = 1u << k;
    std::vector<bool> used(limit, false);
    for (std::uint32_t st : states) used[st] = true;
    std::vector<std::uint32_t> unused;
    for (std::uint32_t x = 0; x < limit; ++x)
      if (!used[x]) unused.push_back(x);
    // Ascending chain u_0 -> u_1 -> ... -> u_{m-1} -> u_0; a single leftover
    // state maps to itself.
    for (std::size_t i = 0; i < unused.size(); ++i)
      add_edge(unused[i], unused[(i + 1) % unused.size()]);
  }

  return BinaryMachine(k, std::move(supports), policy, states.front());
}

}  // namespace binmach
