#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace binmach {

enum class Errc {
  empty_sequence,
  invalid_character,
  constant_sequence,
  permutation_mismatch,
  state_out_of_range,
  non_cyclic_reachability,
  variable_count_too_large,
  document_error,
  io_error,
};

const char* errc_name(Errc c) noexcept;

class Error : public std::runtime_error {
public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Error(Errc code, const std::string& what, std::size_t position = npos)
      : std::runtime_error(what), code_(code), position_(position) {}

  Errc code() const noexcept { return code_; }

  // Byte offset of the offending character; npos unless code is invalid_character.
  std::size_t position() const noexcept { return position_; }

private:
  Errc code_;
  std::size_t position_;
};

}  // namespace binmach
