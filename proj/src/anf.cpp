#include "binmach/anf.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace binmach {

namespace {

// XOR subset-sum butterfly over the subset lattice; self-inverse over GF(2),
// so it maps truth table -> ANF coefficients and back.
void moebius_inplace(std::vector<std::uint8_t>& f, int k) {
  for (int d = 0; d < k; ++d) {
    const std::size_t bit = std::size_t{1} << d;
    for (std::size_t x = 0; x < f.size(); ++x)
      if (x & bit) f[x] ^= f[x ^ bit];
  }
}

void check_variable_count(int k) {
  if (k < 0) throw std::invalid_argument("variable count must be non-negative");
  if (k > kMaxAnfVariables)
    throw Error(Errc::variable_count_too_large,
                "k=" + std::to_string(k) + " exceeds the table limit of " +
                    std::to_string(kMaxAnfVariables) + " variables");
}

}  // namespace

AnfPoly::AnfPoly(int k, std::vector<std::uint32_t> monomials)
    : k_(k), monomials_(std::move(monomials)) {
  if (k_ < 0 || k_ > 31) throw std::invalid_argument("variable count must be in [0, 31]");
  std::sort(monomials_.begin(), monomials_.end());
  if (std::adjacent_find(monomials_.begin(), monomials_.end()) != monomials_.end())
    throw std::invalid_argument("duplicate monomial");
  const std::uint64_t limit = std::uint64_t{1} << k_;
  if (!monomials_.empty() && monomials_.back() >= limit)
    throw std::invalid_argument("monomial mask out of range");
}

int AnfPoly::eval(std::uint32_t x) const {
  if (x >= (std::uint64_t{1} << k_))
    throw Error(Errc::state_out_of_range,
                "input " + std::to_string(x) + " out of range for k=" + std::to_string(k_));
  int v = 0;
  for (std::uint32_t m : monomials_)
    if ((x & m) == m) v ^= 1;
  return v;
}

std::string AnfPoly::to_string(bool ascii) const {
  if (monomials_.empty()) return "0";
  std::string out;
  const char* joiner = ascii ? " + " : " ⊕ ";
  for (std::size_t t = 0; t < monomials_.size(); ++t) {
    if (t) out += joiner;
    const std::uint32_t m = monomials_[t];
    if (m == 0) {
      out += "1";
      continue;
    }
    for (int j = 0; j < k_; ++j)
      if ((m >> j) & 1u) out += "x" + std::to_string(j);
  }
  return out;
}

AnfPoly support_to_anf(std::span<const std::uint32_t> support, int k) {
  check_variable_count(k);
  std::vector<std::uint8_t> table(std::size_t{1} << k, 0);
  for (std::uint32_t x : support) {
    if (x >= table.size())
      throw Error(Errc::state_out_of_range,
                  "support state " + std::to_string(x) + " out of range for k=" + std::to_string(k));
    table[x] = 1;
  }
  moebius_inplace(table, k);
  std::vector<std::uint32_t> monomials;
  for (std::size_t m = 0; m < table.size(); ++m)
    if (table[m]) monomials.push_back(static_cast<std::uint32_t>(m));
  return AnfPoly(k, std::move(monomials));
}

std::vector<std::uint8_t> anf_to_truth_table(const AnfPoly& p) {
  check_variable_count(p.variables());
  std::vector<std::uint8_t> table(std::size_t{1} << p.variables(), 0);
  for (std::uint32_t m : p.monomials()) table[m] = 1;
  moebius_inplace(table, p.variables());
  return table;
}

CostReport cost(const AnfPoly& p) {
  CostReport r;
  r.monomial_count = p.monomials().size();
  for (std::uint32_t m : p.monomials()) {
    const std::uint64_t deg = static_cast<std::uint64_t>(std::popcount(m));
    r.literal_count += deg;
    r.max_degree = std::max(r.max_degree, deg);
    if (deg >= 1) r.gate_upper_bound += deg - 1;
  }
  if (r.monomial_count > 0) r.gate_upper_bound += r.monomial_count - 1;
  return r;
}

}  // namespace binmach
