#pragma once

#include <span>
#include <string>

#include "binmach/anf.hpp"
#include "binmach/machine.hpp"

namespace binmach {

// Structural two-input-gate description of the next-state logic. Line
// grammar: "reg x<j>", "g<i> = AND(a, b)", "g<i> = XOR(a, b)",
// "next x<j> = <signal>", "output x0". Signals are "0", "1", "x<j>" or
// "g<i>"; gate names are global and sequential, so the emitted gate count
// equals the summed CostReport gate_upper_bound.
std::string emit_netlist(const BinaryMachine& m, std::span<const AnfPoly> stage_anf);

// Convenience overload that derives each stage's polynomial first.
std::string emit_netlist(const BinaryMachine& m);

}  // namespace binmach
