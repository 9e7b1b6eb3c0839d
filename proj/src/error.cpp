#include "binmach/error.hpp"

namespace binmach {

const char* errc_name(Errc c) noexcept {
  switch (c) {
    case Errc::empty_sequence: return "EmptySequence";
    case Errc::invalid_character: return "InvalidCharacter";
    case Errc::constant_sequence: return "ConstantSequence";
    case Errc::permutation_mismatch: return "PermutationMismatch";
    case Errc::state_out_of_range: return "StateOutOfRange";
    case Errc::non_cyclic_reachability: return "NonCyclicReachability";
    case Errc::variable_count_too_large: return "VariableCountTooLarge";
    case Errc::document_error: return "DocumentError";
    case Errc::io_error: return "IoError";
  }
  return "UnknownError";
}

}  // namespace binmach
