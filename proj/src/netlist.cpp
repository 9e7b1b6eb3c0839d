#include "binmach/netlist.hpp"

#include <stdexcept>
#include <vector>

namespace binmach {

std::string emit_netlist(const BinaryMachine& m, std::span<const AnfPoly> stage_anf) {
  const int k = m.stages();
  if (stage_anf.size() != static_cast<std::size_t>(k))
    throw std::invalid_argument("need one polynomial per stage");
  for (const AnfPoly& p : stage_anf)
    if (p.variables() != k) throw std::invalid_argument("polynomial variable count must equal k");

  std::string out;
  for (int j = 0; j < k; ++j) out += "reg x" + std::to_string(j) + "\n";

  std::size_t next_gate = 0;
  auto new_gate = [&](const char* op, const std::string& a, const std::string& b) {
    std::string name = "g" + std::to_string(next_gate++);
    out += name + " = " + op + "(" + a + ", " + b + ")\n";
    return name;
  };

  for (int j = 0; j < k; ++j) {
    std::string stage_signal = "0";
    bool first_term = true;
    for (std::uint32_t mask : stage_anf[static_cast<std::size_t>(j)].monomials()) {
      // AND-chain the monomial's variables in ascending order.
      std::string term = "1";
      bool first_var = true;
      for (int v = 0; v < k; ++v) {
        if (!((mask >> v) & 1u)) continue;
        std::string var = "x" + std::to_string(v);
        term = first_var ? var : new_gate("AND", term, var);
        first_var = false;
      }
      // XOR-chain the terms in monomial order.
      stage_signal = first_term ? term : new_gate("XOR", stage_signal, term);
      first_term = false;
    }
    out += "next x" + std::to_string(j) + " = " + stage_signal + "\n";
  }

  out += "output x0\n";
  return out;
}

std::string emit_netlist(const BinaryMachine& m) {
  std::vector<AnfPoly> stage_anf;
  stage_anf.reserve(static_cast<std::size_t>(m.stages()));
  for (int j = 0; j < m.stages(); ++j)
    stage_anf.push_back(support_to_anf(m.support(j), m.stages()));
  return emit_netlist(m, stage_anf);
}

}  // namespace binmach
