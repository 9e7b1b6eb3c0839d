#pragma once

#include <cstdint>
#include <vector>

#include "binmach/sequence.hpp"

namespace binmach {

// Draw orders for the two value pools used by state assignment: even_order
// permutes {0, 2, ..., 2(n-wt)-2}, odd_order permutes {1, 3, ..., 2wt-1}.
struct PoolPermutation {
  std::vector<std::uint32_t> even_order;
  std::vector<std::uint32_t> odd_order;

  static PoolPermutation identity(std::size_t n, std::size_t wt);
};

/// Distinct machine states s_0..s_{n-1}; the LSB of s_i traces the source bit a_i.
class StateSequence {
public:
  explicit StateSequence(std::vector<std::uint32_t> states);

  const std::vector<std::uint32_t>& states() const noexcept { return states_; }
  std::size_t size() const noexcept { return states_.size(); }

  // Bits needed to hold the largest state; at least 1.
  int width() const noexcept { return width_; }

private:
  std::vector<std::uint32_t> states_;
  int width_ = 1;
};

// The i-th 0 of the sequence receives the i-th even value, the i-th 1 the
// i-th odd value. O(n). Requires 0 < wt < n.
StateSequence assign_states(const BinarySequence& a);

// Same, but values are drawn in the order given by perm; the identity
// permutation reproduces assign_states. Throws permutation_mismatch when
// perm does not cover exactly the two pools implied by (n, wt).
StateSequence assign_states_permuted(const BinarySequence& a, const PoolPermutation& perm);

}  // namespace binmach
