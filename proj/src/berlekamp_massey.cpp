#include "binmach/berlekamp_massey.hpp"

namespace binmach {

LinearComplexityResult berlekamp_massey(const BinarySequence& a) {
  const auto& s = a.bits();
  const std::size_t n = s.size();

  // c and b are connection polynomials over GF(2), constant term index 0.
  std::vector<std::uint8_t> c(n + 1, 0), b(n + 1, 0);
  c[0] = b[0] = 1;
  std::size_t L = 0;
  std::size_t m = 1;  // steps since b was last updated

  for (std::size_t t = 0; t < n; ++t) {
    std::uint8_t d = s[t];
    for (std::size_t i = 1; i <= L && i <= t; ++i) d ^= static_cast<std::uint8_t>(c[i] & s[t - i]);
    if (d == 0) {
      ++m;
      continue;
    }
    if (2 * L <= t) {
      std::vector<std::uint8_t> prev = c;
      for (std::size_t i = 0; i + m <= n; ++i) c[i + m] ^= b[i];
      L = t + 1 - L;
      b = std::move(prev);
      m = 1;
    } else {
      for (std::size_t i = 0; i + m <= n; ++i) c[i + m] ^= b[i];
      ++m;
    }
  }

  LinearComplexityResult r;
  r.linear_complexity = L;
  r.connection.assign(c.begin() + 1, c.begin() + 1 + static_cast<std::ptrdiff_t>(L));
  return r;
}

ComplexityComparison compare_complexities(const BinarySequence& a) {
  ComplexityComparison cmp;
  cmp.machine_stages = min_stages(a).k;  // throws ConstantSequence first
  cmp.linear_complexity = berlekamp_massey(a).linear_complexity;
  return cmp;
}

}  // namespace binmach
