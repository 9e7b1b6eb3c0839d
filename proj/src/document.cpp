#include "binmach/document.hpp"

#include <algorithm>
#include <json.hpp>

#include "binmach/anf.hpp"

namespace binmach {

namespace {

using ordered_json = nlohmann::ordered_json;

[[noreturn]] void bad_document(const std::string& why) {
  throw Error(Errc::document_error, why);
}

std::uint64_t require_uint(const ordered_json& j, const char* key, std::uint64_t max) {
  if (!j.contains(key)) bad_document(std::string("missing field '") + key + "'");
  const auto& v = j.at(key);
  if (!v.is_number_unsigned()) bad_document(std::string("field '") + key + "' must be a non-negative integer");
  const auto u = v.get<std::uint64_t>();
  if (u > max) bad_document(std::string("field '") + key + "' out of range");
  return u;
}

std::vector<std::vector<std::uint32_t>> require_mask_lists(const ordered_json& j, const char* key,
                                                           std::size_t count, std::uint64_t limit) {
  if (!j.contains(key)) bad_document(std::string("missing field '") + key + "'");
  const auto& outer = j.at(key);
  if (!outer.is_array() || outer.size() != count)
    bad_document(std::string("field '") + key + "' must be an array of " + std::to_string(count) + " arrays");
  std::vector<std::vector<std::uint32_t>> lists(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto& inner = outer.at(i);
    if (!inner.is_array()) bad_document(std::string("field '") + key + "' entries must be arrays");
    auto& list = lists[i];
    list.reserve(inner.size());
    for (const auto& e : inner) {
      if (!e.is_number_unsigned() || e.get<std::uint64_t>() >= limit)
        bad_document(std::string("field '") + key + "' values must be integers below 2^k");
      list.push_back(e.get<std::uint32_t>());
    }
    if (!std::is_sorted(list.begin(), list.end()) ||
        std::adjacent_find(list.begin(), list.end()) != list.end())
      bad_document(std::string("field '") + key + "' lists must be strictly ascending");
  }
  return lists;
}

}  // namespace

MachineDocument make_document(const BinaryMachine& m, const BinarySequence& a, bool include_anf) {
  MachineDocument doc;
  doc.k = m.stages();
  doc.n = a.size();
  doc.policy = m.policy();
  doc.initial_state = m.initial_state();
  doc.supports = m.supports();
  doc.sequence = a.to_string();
  if (include_anf) {
    std::vector<std::vector<std::uint32_t>> anf;
    anf.reserve(static_cast<std::size_t>(m.stages()));
    for (int j = 0; j < m.stages(); ++j)
      anf.push_back(support_to_anf(m.support(j), m.stages()).monomials());
    doc.anf = std::move(anf);
  }
  return doc;
}

std::string serialize(const MachineDocument& doc) {
  ordered_json j;
  j["format_version"] = doc.format_version;
  j["k"] = doc.k;
  j["n"] = doc.n;
  j["policy"] = std::string(to_string(doc.policy));
  j["initial_state"] = doc.initial_state;
  j["supports"] = doc.supports;
  if (doc.anf) j["anf"] = *doc.anf;
  j["sequence"] = doc.sequence;
  return j.dump(2) + "\n";
}

MachineDocument deserialize(const std::string& text) {
  ordered_json j = ordered_json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) bad_document("not valid JSON");
  if (!j.is_object()) bad_document("top level must be an object");

  for (const auto& [key, value] : j.items()) {
    (void)value;
    static const char* known[] = {"format_version", "k",        "n",  "policy",
                                  "initial_state",  "supports", "anf", "sequence"};
    if (std::find_if(std::begin(known), std::end(known),
                     [&](const char* s) { return key == s; }) == std::end(known))
      bad_document("unknown field '" + key + "'");
  }

  MachineDocument doc;
  doc.format_version = static_cast<int>(require_uint(j, "format_version", 1));
  if (doc.format_version != 1) bad_document("unsupported format_version");
  doc.k = static_cast<int>(require_uint(j, "k", 31));
  if (doc.k < 1) bad_document("field 'k' must be at least 1");
  const std::uint64_t state_limit = std::uint64_t{1} << doc.k;

  doc.n = require_uint(j, "n", std::uint64_t{1} << 40);
  if (doc.n < 1) bad_document("field 'n' must be positive");

  if (!j.contains("policy") || !j.at("policy").is_string()) bad_document("missing or ill-typed field 'policy'");
  const auto policy = parse_policy(j.at("policy").get<std::string>());
  if (!policy) bad_document("field 'policy' must be \"zero-sink\" or \"cycle\"");
  doc.policy = *policy;

  doc.initial_state = static_cast<std::uint32_t>(require_uint(j, "initial_state", state_limit - 1));
  doc.supports = require_mask_lists(j, "supports", static_cast<std::size_t>(doc.k), state_limit);

  if (!j.contains("sequence") || !j.at("sequence").is_string()) bad_document("missing or ill-typed field 'sequence'");
  doc.sequence = j.at("sequence").get<std::string>();
  if (doc.sequence.size() != doc.n) bad_document("field 'n' must equal the sequence length");
  for (char ch : doc.sequence)
    if (ch != '0' && ch != '1') bad_document("field 'sequence' must contain only '0' and '1'");

  if (j.contains("anf")) {
    doc.anf = require_mask_lists(j, "anf", static_cast<std::size_t>(doc.k), state_limit);
    // The anf block is redundant with the supports; reject documents where
    // the two disagree instead of silently trusting one side.
    try {
      for (int s = 0; s < doc.k; ++s)
        if (support_to_anf(doc.supports[static_cast<std::size_t>(s)], doc.k).monomials() !=
            (*doc.anf)[static_cast<std::size_t>(s)])
          bad_document("anf entry " + std::to_string(s) + " does not match its support");
    } catch (const Error& e) {
      if (e.code() == Errc::document_error) throw;
      bad_document(std::string("anf block cannot be checked: ") + e.what());
    }
  }

  return doc;
}

BinaryMachine to_machine(const MachineDocument& doc) {
  return BinaryMachine(doc.k, doc.supports, doc.policy, doc.initial_state);
}

BinarySequence target_sequence(const MachineDocument& doc) {
  return BinarySequence::parse(doc.sequence);
}

}  // namespace binmach
