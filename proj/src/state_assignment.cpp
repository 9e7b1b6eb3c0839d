#include "binmach/state_assignment.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace binmach {

PoolPermutation PoolPermutation::identity(std::size_t n, std::size_t wt) {
  PoolPermutation p;
  p.even_order.resize(n - wt);
  p.odd_order.resize(wt);
  for (std::size_t i = 0; i < p.even_order.size(); ++i)
    p.even_order[i] = static_cast<std::uint32_t>(2 * i);
  for (std::size_t i = 0; i < p.odd_order.size(); ++i)
    p.odd_order[i] = static_cast<std::uint32_t>(2 * i + 1);
  return p;
}

StateSequence::StateSequence(std::vector<std::uint32_t> states) : states_(std::move(states)) {
  if (states_.empty()) throw std::invalid_argument("state sequence must be nonempty");
  std::vector<std::uint32_t> sorted(states_);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("state sequence must have pairwise distinct states");
  width_ = std::max(1, static_cast<int>(std::bit_width(sorted.back())));
}

namespace {

void require_nonconstant(const BinarySequence& a) {
  if (a.weight() == 0 || a.weight() == a.size())
    throw Error(Errc::constant_sequence, "constant sequence: state assignment requires 0 < wt < n");
}

// perm slot must hold exactly {first, first+2, ..., first+2(count-1)}.
bool covers_pool(const std::vector<std::uint32_t>& order, std::size_t count, std::uint32_t first) {
  if (order.size() != count) return false;
  std::vector<std::uint32_t> sorted(order);
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < count; ++i)
    if (sorted[i] != first + 2 * i) return false;
  return true;
}

}  // namespace

StateSequence assign_states(const BinarySequence& a) {
  require_nonconstant(a);
  std::vector<std::uint32_t> states;
  states.reserve(a.size());
  std::uint32_t zeros_seen = 0, ones_seen = 0;
  for (std::uint8_t bit : a.bits()) {
    if (bit == 0)
      states.push_back(2 * zeros_seen++);
    else
      states.push_back(2 * ones_seen++ + 1);
  }
  return StateSequence(std::move(states));
}

StateSequence assign_states_permuted(const BinarySequence& a, const PoolPermutation& perm) {
  require_nonconstant(a);
  const std::size_t wt = a.weight();
  if (!covers_pool(perm.even_order, a.size() - wt, 0) || !covers_pool(perm.odd_order, wt, 1))
    throw Error(Errc::permutation_mismatch,
                "pool permutation does not match the even/odd pools for n=" +
                    std::to_string(a.size()) + " wt=" + std::to_string(wt));
  std::vector<std::uint32_t> states;
  states.reserve(a.size());
  std::size_t zeros_seen = 0, ones_seen = 0;
  for (std::uint8_t bit : a.bits()) {
    if (bit == 0)
      states.push_back(perm.even_order[zeros_seen++]);
    else
      states.push_back(perm.odd_order[ones_seen++]);
  }
  return StateSequence(std::move(states));
}

}  // namespace binmach
