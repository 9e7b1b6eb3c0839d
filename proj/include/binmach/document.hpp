#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "binmach/machine.hpp"
#include "binmach/sequence.hpp"

namespace binmach {

// On-disk description of a machine together with the sequence it was built
// for. Serialization is canonical (fixed key order, ascending lists, stable
// formatting), so equal machines produce byte-identical documents.
struct MachineDocument {
  int format_version = 1;
  int k = 0;
  std::uint64_t n = 0;
  RemainingStatePolicy policy = RemainingStatePolicy::zero_sink;
  std::uint32_t initial_state = 0;
  std::vector<std::vector<std::uint32_t>> supports;
  std::optional<std::vector<std::vector<std::uint32_t>>> anf;
  std::string sequence;

  bool operator==(const MachineDocument&) const = default;
};

// Bundles a machine with its target sequence; include_anf adds the per-stage
// polynomial masks.
MachineDocument make_document(const BinaryMachine& m, const BinarySequence& a, bool include_anf);

std::string serialize(const MachineDocument& doc);

// Parses and fully validates; any structural or consistency defect (bad JSON,
// missing/unknown/ill-typed fields, out-of-range states, unsorted lists, an
// anf block that disagrees with the supports, n != sequence length) throws
// Error(Errc::document_error).
MachineDocument deserialize(const std::string& text);

BinaryMachine to_machine(const MachineDocument& doc);
BinarySequence target_sequence(const MachineDocument& doc);

}  // namespace binmach
