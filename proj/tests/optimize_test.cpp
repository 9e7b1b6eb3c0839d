#include <doctest.h>

#include <algorithm>

#include "binmach/document.hpp"
#include "binmach/optimize.hpp"
#include "binmach/simulate.hpp"

using namespace binmach;

namespace {

const char* kExampleBits = "0011011100101110110";

BinaryMachine canonical_machine(const BinarySequence& a) {
  return build_machine(assign_states(a), RemainingStatePolicy::zero_sink);
}

}  // namespace

TEST_CASE("total_cost sums the chosen field over stages") {
  const BinaryMachine toggle = canonical_machine(BinarySequence::parse("01"));
  CHECK(total_cost(toggle, Objective::monomials) == 2);  // f0 = 1 + x0
  CHECK(total_cost(toggle, Objective::literals) == 1);
  CHECK(total_cost(toggle, Objective::gate_upper_bound) == 1);

  const BinaryMachine empty(2, {{}, {}}, RemainingStatePolicy::zero_sink, 0);
  CHECK(total_cost(empty, Objective::monomials) == 0);
  CHECK(total_cost(empty, Objective::gate_upper_bound) == 0);

  const BinaryMachine paper = canonical_machine(BinarySequence::parse(kExampleBits));
  CHECK(total_cost(paper, Objective::monomials) == 76);
  CHECK(total_cost(paper, Objective::literals) == 200);
  CHECK(total_cost(paper, Objective::gate_upper_bound) == 196);

  const CostReport report = total_cost_report(paper);
  CHECK(report.monomial_count == 76);
  CHECK(report.literal_count == 200);
  CHECK(report.gate_upper_bound == 196);
}

TEST_CASE("objective names round-trip") {
  CHECK(parse_objective("monomials") == Objective::monomials);
  CHECK(parse_objective("literals") == Objective::literals);
  CHECK(parse_objective("gate_upper_bound") == Objective::gate_upper_bound);
  CHECK_FALSE(parse_objective("area").has_value());
  CHECK(to_string(Objective::literals) == "literals");
}

TEST_CASE("degenerate search spaces return the canonical machine") {
  const BinarySequence a = BinarySequence::parse("01");

  // k = 1 leaves no permutation freedom and zero-sink-only removes the
  // policy toggle: no moves exist at all.
  OptimizationConfig cfg;
  cfg.iterations = 50;
  cfg.restarts = 2;
  cfg.policy_choices = {RemainingStatePolicy::zero_sink};
  const OptimizationResult res = optimize(a, cfg);
  CHECK(res.history == std::vector<std::pair<std::uint64_t, std::uint64_t>>{{0, 2}});
  CHECK(res.machine.supports() == canonical_machine(a).supports());
  CHECK(res.total_cost.monomial_count == 2);

  // With both policies allowed the toggle move exists, but for n = 2^k the
  // two policies coincide, so nothing strictly improves.
  OptimizationConfig cfg2;
  cfg2.iterations = 50;
  const OptimizationResult res2 = optimize(a, cfg2);
  CHECK(res2.history.back().second == 2);
  CHECK(res2.machine.supports() == canonical_machine(a).supports());

  // Seed 1 proposes one non-improving move on the worked example: an empty
  // search, so the canonical machine comes back unchanged.
  const BinarySequence paper = BinarySequence::parse(kExampleBits);
  OptimizationConfig cfg3;
  cfg3.iterations = 1;
  cfg3.restarts = 0;
  cfg3.seed = 1;
  const OptimizationResult res3 = optimize(paper, cfg3);
  CHECK(res3.history == std::vector<std::pair<std::uint64_t, std::uint64_t>>{{0, 76}});
  CHECK(res3.machine.supports() == canonical_machine(paper).supports());
  CHECK(res3.perm.even_order == PoolPermutation::identity(19, 11).even_order);
  CHECK(res3.perm.odd_order == PoolPermutation::identity(19, 11).odd_order);
}

TEST_CASE("search improves monotonically, stays valid, and is deterministic") {
  const BinarySequence a = BinarySequence::parse(kExampleBits);
  OptimizationConfig cfg;
  cfg.iterations = 300;
  cfg.restarts = 2;
  cfg.seed = 7;

  std::size_t seen = 0;
  bool all_valid = true;
  const OptimizationResult res = optimize(a, cfg, [&](const BinaryMachine& m) {
    ++seen;
    all_valid = all_valid && verify_generates(m, a);
  });

  CHECK(seen == 3 * 301);  // 3 chains, initial evaluation plus 300 proposals
  CHECK(all_valid);
  CHECK(verify_generates(res.machine, a));
  CHECK(res.history.front().first == 0);
  CHECK(std::is_sorted(res.history.begin(), res.history.end()));
  for (std::size_t i = 1; i < res.history.size(); ++i)
    CHECK(res.history[i].second < res.history[i - 1].second);
  CHECK(res.history.back().second <= 76);
  CHECK(res.history.back().second == total_cost(res.machine, cfg.objective));
  CHECK(res.total_cost.monomial_count == total_cost(res.machine, Objective::monomials));

  // Same inputs, same outputs — including the serialized document.
  const OptimizationResult rerun = optimize(a, cfg);
  CHECK(rerun.history == res.history);
  CHECK(serialize(make_document(rerun.machine, a, true)) ==
        serialize(make_document(res.machine, a, true)));
  CHECK(rerun.perm.even_order == res.perm.even_order);
  CHECK(rerun.perm.odd_order == res.perm.odd_order);
}

TEST_CASE("the winning permutation reproduces the winning machine") {
  const BinarySequence a = BinarySequence::parse(kExampleBits);
  OptimizationConfig cfg;
  cfg.iterations = 200;
  cfg.restarts = 1;
  cfg.seed = 3;
  const OptimizationResult res = optimize(a, cfg);
  const BinaryMachine rebuilt =
      build_machine(assign_states_permuted(a, res.perm), res.machine.policy());
  CHECK(rebuilt.supports() == res.machine.supports());
  CHECK(rebuilt.initial_state() == res.machine.initial_state());
}

TEST_CASE("policy choices are honored") {
  const BinarySequence a = BinarySequence::parse(kExampleBits);
  OptimizationConfig cfg;
  cfg.iterations = 60;
  cfg.restarts = 0;
  cfg.policy_choices = {RemainingStatePolicy::cycle};
  const OptimizationResult res = optimize(a, cfg);
  CHECK(res.machine.policy() == RemainingStatePolicy::cycle);
  CHECK(verify_generates(res.machine, a));
}

TEST_CASE("configuration and input validation") {
  const BinarySequence a = BinarySequence::parse(kExampleBits);
  OptimizationConfig bad;
  bad.iterations = 0;
  CHECK_THROWS_AS(optimize(a, bad), std::invalid_argument);

  OptimizationConfig no_policy;
  no_policy.policy_choices = {};
  CHECK_THROWS_AS(optimize(a, no_policy), std::invalid_argument);

  OptimizationConfig cfg;
  try {
    optimize(BinarySequence::parse("1111"), cfg);
    FAIL("expected a constant_sequence error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::constant_sequence);
  }
}
