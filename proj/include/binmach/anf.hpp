#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "binmach/error.hpp"

namespace binmach {

// Largest variable count for which 2^k truth tables are materialized.
inline constexpr int kMaxAnfVariables = 24;

/// GF(2) polynomial over k variables. Each monomial is a k-bit mask of the
/// variables it multiplies; mask 0 is the constant-1 term.
class AnfPoly {
public:
  AnfPoly(int k, std::vector<std::uint32_t> monomials);

  int variables() const noexcept { return k_; }

  // Ascending, no duplicates.
  const std::vector<std::uint32_t>& monomials() const noexcept { return monomials_; }

  // XOR over monomials of the AND of their variables.
  int eval(std::uint32_t x) const;

  // "1 ⊕ x0x2" style; ascii swaps the XOR sign for '+'. Empty polynomial is "0".
  std::string to_string(bool ascii = false) const;

private:
  int k_;
  std::vector<std::uint32_t> monomials_;
};

// Unique ANF whose evaluation is the indicator of `support` on [0, 2^k).
// In-place GF(2) Moebius butterfly, O(k * 2^k).
AnfPoly support_to_anf(std::span<const std::uint32_t> support, int k);

// Truth table of p indexed by input, length 2^k.
std::vector<std::uint8_t> anf_to_truth_table(const AnfPoly& p);

struct CostReport {
  std::uint64_t monomial_count = 0;
  std::uint64_t literal_count = 0;     // sum of monomial degrees
  std::uint64_t max_degree = 0;
  std::uint64_t gate_upper_bound = 0;  // two-input AND/XOR count of the flat form
};

// Size metrics of the flat XOR-of-ANDs form:
// gate_upper_bound = sum over monomials of (degree - 1, degree >= 1)
//                  + max(monomial_count - 1, 0).
CostReport cost(const AnfPoly& p);

}  // namespace binmach
