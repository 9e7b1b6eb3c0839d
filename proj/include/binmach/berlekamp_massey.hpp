#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "binmach/sequence.hpp"

namespace binmach {

// Shortest LFSR that generates a finite binary sequence.
// connection holds c_1..c_L: for all t >= L,
//   s_t = c_1*s_{t-1} XOR c_2*s_{t-2} XOR ... XOR c_L*s_{t-L}.
// L == 0 (empty connection) iff the sequence is all zeros.
struct LinearComplexityResult {
  std::size_t linear_complexity = 0;
  std::vector<std::uint8_t> connection;
};

LinearComplexityResult berlekamp_massey(const BinarySequence& a);

// Side-by-side cost of the two generator families for the same sequence:
// shortest LFSR length vs. stage count of the nonlinear machine bound.
struct ComplexityComparison {
  std::size_t linear_complexity = 0;
  int machine_stages = 0;
};

ComplexityComparison compare_complexities(const BinarySequence& a);

}  // namespace binmach
