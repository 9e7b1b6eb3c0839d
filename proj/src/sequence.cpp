#include "binmach/sequence.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

namespace binmach {

int ceil_log2(std::uint64_t x) noexcept {
  return x <= 1 ? 0 : std::bit_width(x - 1);
}

BinarySequence::BinarySequence(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  if (bits_.empty()) throw Error(Errc::empty_sequence, "sequence must contain at least one bit");
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] > 1)
      throw Error(Errc::invalid_character, "bit values must be 0 or 1", i);
    weight_ += bits_[i];
  }
}

BinarySequence BinarySequence::parse(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '0' || c == '1') {
      bits.push_back(static_cast<std::uint8_t>(c - '0'));
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      throw Error(Errc::invalid_character,
                  "invalid character '" + std::string(1, c) + "' at offset " + std::to_string(i),
                  i);
    }
  }
  if (bits.empty()) throw Error(Errc::empty_sequence, "no binary digits in input");
  return BinarySequence(std::move(bits));
}

std::optional<std::size_t> BinarySequence::proper_period() const {
  // Invariance under a cyclic shift by p implies invariance under
  // gcd(p, n), so the smallest period divides n; checking divisors is enough.
  const std::size_t n = bits_.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool ok = true;
    for (std::size_t i = 0; i + p < n && ok; ++i) ok = bits_[i + p] == bits_[i];
    if (ok) return p;
  }
  return std::nullopt;
}

std::string BinarySequence::to_string() const {
  std::string s(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) s[i] += bits_[i];
  return s;
}

StageBound min_stages(const BinarySequence& a) {
  const std::size_t wt = a.weight();
  if (wt == 0 || wt == a.size())
    throw Error(Errc::constant_sequence, "constant sequence: stage bound requires 0 < wt < n");
  StageBound b;
  b.wt_term = ceil_log2(wt);
  b.zero_term = ceil_log2(a.size() - wt);
  b.k = std::max(b.wt_term, b.zero_term) + 1;
  return b;
}

}  // namespace binmach
