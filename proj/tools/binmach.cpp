// Command-line front end: synthesize, verify, bound, baseline, optimize.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "binmach/berlekamp_massey.hpp"
#include "binmach/document.hpp"
#include "binmach/error.hpp"
#include "binmach/machine.hpp"
#include "binmach/netlist.hpp"
#include "binmach/optimize.hpp"
#include "binmach/sequence.hpp"
#include "binmach/simulate.hpp"
#include "binmach/state_assignment.hpp"

namespace {

using namespace binmach;

std::string read_text(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
    if (std::cin.bad()) throw Error(Errc::io_error, "failed to read standard input");
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::io_error, "cannot open '" + path + "' for reading");
    ss << in.rdbuf();
    if (in.bad()) throw Error(Errc::io_error, "failed while reading '" + path + "'");
  }
  return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::io_error, "cannot open '" + path + "' for writing");
  out << text;
  out.flush();
  if (!out) throw Error(Errc::io_error, "failed while writing '" + path + "'");
}

BinarySequence load_sequence(const std::string& path) {
  return BinarySequence::parse(read_text(path));
}

void warn_if_periodic(const BinarySequence& a) {
  if (auto p = a.proper_period())
    std::cerr << "warning: sequence repeats with period " << *p
              << "; a machine for the length-" << *p << " block would be smaller\n";
}

void print_cost_summary(std::ostream& os, const BinaryMachine& m, bool with_anf) {
  for (int j = 0; j < m.stages(); ++j) {
    const AnfPoly p = support_to_anf(m.support(j), m.stages());
    const CostReport r = cost(p);
    os << "stage " << j << ": monomials=" << r.monomial_count << " literals=" << r.literal_count
       << " max_degree=" << r.max_degree << " gates=" << r.gate_upper_bound << "\n";
    if (with_anf) os << "  f" << j << " = " << p.to_string(/*ascii=*/true) << "\n";
  }
  const CostReport t = total_cost_report(m);
  os << "total: monomials=" << t.monomial_count << " literals=" << t.literal_count
     << " gates=" << t.gate_upper_bound << "\n";
}

int exit_code_for(const Error& e) {
  return (e.code() == Errc::document_error || e.code() == Errc::io_error) ? 2 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Synthesize, check and optimize binary k-stage machines"};
  app.require_subcommand(1);
  int exit_code = 0;

  // --- synth -------------------------------------------------------------
  auto* synth = app.add_subcommand("synth", "Build a machine for a 0/1 sequence");
  std::string synth_in, synth_out = "-", synth_policy = "zero-sink", synth_netlist;
  bool synth_anf = false;
  synth->add_option("--input", synth_in, "sequence file, or - for standard input")->required();
  synth->add_option("--policy", synth_policy, "remaining-state policy")
      ->check(CLI::IsMember({"zero-sink", "cycle"}));
  synth->add_flag("--emit-anf", synth_anf, "embed per-stage polynomials in the document");
  synth->add_option("--out", synth_out, "machine document path, - for standard output");
  synth->add_option("--netlist", synth_netlist, "also write a gate-level netlist here");
  synth->callback([&] {
    const BinarySequence a = load_sequence(synth_in);
    warn_if_periodic(a);
    const BinaryMachine m = build_machine(assign_states(a), *parse_policy(synth_policy));
    write_text(synth_out, serialize(make_document(m, a, synth_anf)));
    if (!synth_netlist.empty()) write_text(synth_netlist, emit_netlist(m));
    // Keep the summary off standard output when the document itself goes there.
    std::ostream& os = synth_out == "-" ? std::cerr : std::cout;
    os << "k=" << m.stages() << " n=" << a.size() << " wt=" << a.weight() << "\n";
    print_cost_summary(os, m, synth_anf);
  });

  // --- verify ------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "Check that a machine regenerates its sequence");
  std::string ver_machine, ver_sequence, ver_trace;
  verify->add_option("--machine", ver_machine, "machine document path, or -")->required();
  verify->add_option("--sequence", ver_sequence,
                     "sequence file (defaults to the one embedded in the document)");
  verify->add_option("--trace", ver_trace, "write the state/output trace here (- for stdout)");
  verify->callback([&] {
    const MachineDocument doc = deserialize(read_text(ver_machine));
    const BinaryMachine m = to_machine(doc);
    const BinarySequence a =
        ver_sequence.empty() ? target_sequence(doc) : load_sequence(ver_sequence);
    if (!ver_trace.empty())
      write_text(ver_trace, format_trace(run(m, m.initial_state(), a.size()), m.stages()));
    if (verify_generates(m, a)) {
      const auto period = cycle_length(m, m.initial_state());
      std::cout << "verified: period=" << (period ? std::to_string(*period) : "absent")
                << " steps=" << a.size() << "\n";
    } else {
      std::cerr << "verification failed: machine does not regenerate the sequence\n";
      exit_code = 1;
    }
  });

  // --- bound -------------------------------------------------------------
  auto* bound = app.add_subcommand("bound", "Print the minimum stage count for a sequence");
  std::string bound_in;
  bound->add_option("--input", bound_in, "sequence file, or -")->required();
  bound->callback([&] {
    const BinarySequence a = load_sequence(bound_in);
    warn_if_periodic(a);
    const StageBound b = min_stages(a);
    std::cout << "k=" << b.k << " wt=" << a.weight() << " n=" << a.size() << "\n";
    if (a.is_balanced())
      std::cout << "note: balanced sequence, so k = ceil(log2 n) = " << b.k << "\n";
  });

  // --- baseline ----------------------------------------------------------
  auto* baseline = app.add_subcommand("baseline", "Compare linear complexity with the stage bound");
  std::string base_in;
  baseline->add_option("--input", base_in, "sequence file, or -")->required();
  baseline->callback([&] {
    const BinarySequence a = load_sequence(base_in);
    const LinearComplexityResult lc = berlekamp_massey(a);
    if (a.weight() == 0 || a.weight() == a.size()) {
      std::cout << "L=" << lc.linear_complexity << "\n";
      std::cerr << "warning: constant sequence; the stage bound is undefined, reporting linear"
                   " complexity only\n";
    } else {
      std::cout << "L=" << lc.linear_complexity << " k=" << min_stages(a).k << "\n";
    }
    if (lc.linear_complexity > 0) {
      std::cout << "connection c_1..c_L = ";
      for (std::uint8_t c : lc.connection) std::cout << int(c);
      std::cout << "  (recurrence: s_t = XOR of c_i * s_{t-i})\n";
    }
  });

  // --- optimize ----------------------------------------------------------
  auto* opt = app.add_subcommand("optimize", "Search permutations/policies for a cheaper machine");
  std::string opt_in, opt_out = "-", opt_objective = "monomials", opt_netlist;
  OptimizationConfig cfg;
  bool opt_anf = false;
  opt->add_option("--input", opt_in, "sequence file, or -")->required();
  opt->add_option("--iterations", cfg.iterations, "moves proposed per chain")
      ->check(CLI::PositiveNumber);
  opt->add_option("--restarts", cfg.restarts, "random-start chains besides the identity chain");
  opt->add_option("--seed", cfg.seed, "search seed");
  opt->add_option("--objective", opt_objective, "cost to minimize")
      ->check(CLI::IsMember({"monomials", "literals", "gate_upper_bound"}));
  opt->add_flag("--emit-anf", opt_anf, "embed per-stage polynomials in the document");
  opt->add_option("--out", opt_out, "machine document path, - for standard output");
  opt->add_option("--netlist", opt_netlist, "also write a gate-level netlist here");
  opt->callback([&] {
    const BinarySequence a = load_sequence(opt_in);
    cfg.objective = *parse_objective(opt_objective);
    const OptimizationResult res = optimize(a, cfg);
    write_text(opt_out, serialize(make_document(res.machine, a, opt_anf)));
    if (!opt_netlist.empty()) write_text(opt_netlist, emit_netlist(res.machine));
    std::ostream& os = opt_out == "-" ? std::cerr : std::cout;
    os << "objective=" << to_string(cfg.objective) << " policy="
       << to_string(res.machine.policy()) << "\n";
    for (const auto& [iteration, cost] : res.history)
      os << "iter=" << iteration << " cost=" << cost << "\n";
    print_cost_summary(os, res.machine, false);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const Error& e) {
    std::cerr << "error: " << errc_name(e.code()) << ": " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
