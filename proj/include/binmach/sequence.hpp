#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "binmach/error.hpp"

namespace binmach {

// ceil(log2 x) for x >= 1, with ceil_log2(1) = 0.
int ceil_log2(std::uint64_t x) noexcept;

/// Immutable 0/1 sequence with cached Hamming weight.
class BinarySequence {
public:
  explicit BinarySequence(std::vector<std::uint8_t> bits);

  // Accepts '0', '1' and whitespace; anything else is invalid_character with
  // its byte offset. Whitespace-only text is empty_sequence.
  static BinarySequence parse(std::string_view text);

  const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }
  std::size_t size() const noexcept { return bits_.size(); }
  std::size_t weight() const noexcept { return weight_; }
  bool is_balanced() const noexcept { return 2 * weight_ == size(); }

  // Smallest p in [1, n) with a[(i+p) mod n] == a[i] for all i. Such a p
  // always divides n. Absent means the sequence is treated as aperiodic.
  std::optional<std::size_t> proper_period() const;

  std::string to_string() const;

private:
  std::vector<std::uint8_t> bits_;
  std::size_t weight_ = 0;
};

struct StageBound {
  int k;
  int wt_term;    // ceil(log2 wt)
  int zero_term;  // ceil(log2 (n - wt))
};

// Stage count needed to follow the sequence: max of the two terms plus one.
// Requires 0 < wt < n; constant sequences are rejected.
StageBound min_stages(const BinarySequence& a);

}  // namespace binmach
