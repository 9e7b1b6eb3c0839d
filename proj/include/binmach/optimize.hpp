#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "binmach/anf.hpp"
#include "binmach/machine.hpp"
#include "binmach/sequence.hpp"
#include "binmach/state_assignment.hpp"

namespace binmach {

// What the search minimizes: a single CostReport field summed over stages.
enum class Objective { monomials, literals, gate_upper_bound };

std::string_view to_string(Objective o) noexcept;
std::optional<Objective> parse_objective(std::string_view s) noexcept;

struct OptimizationConfig {
  std::uint64_t iterations = 2000;  // moves proposed per chain; must be >= 1
  std::uint64_t restarts = 4;       // random-start chains besides the identity chain
  std::uint64_t seed = 1;
  std::vector<RemainingStatePolicy> policy_choices = {RemainingStatePolicy::zero_sink,
                                                      RemainingStatePolicy::cycle};
  Objective objective = Objective::monomials;
};

struct OptimizationResult {
  BinaryMachine machine;
  PoolPermutation perm;
  CostReport total_cost;  // field-wise sum over all stages
  // Accepted costs of the winning chain under the objective: entry 0 is the
  // chain's starting cost, later entries are strict improvements.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> history;
};

// Selected CostReport field of each stage's polynomial, summed.
std::uint64_t total_cost(const BinaryMachine& m, Objective objective);

// All four cost fields summed over stages.
CostReport total_cost_report(const BinaryMachine& m);

// Hill-climbing over pool permutations (swaps stay within one parity pool,
// so every candidate still generates `a`) plus, when both policies are
// allowed, policy toggles. Strictly improving moves only. Runs the identity
// chain plus cfg.restarts seeded random chains; the best result wins, ties
// broken by the lexicographically smallest serialized machine so the output
// is deterministic for a given (a, cfg). When zero-sink is among the policy
// choices the identity chain starts at the canonical machine, so the result
// never costs more than it. `observer`, when set, sees every candidate
// machine the search evaluates.
OptimizationResult optimize(const BinarySequence& a, const OptimizationConfig& cfg,
                            const std::function<void(const BinaryMachine&)>& observer = {});

}  // namespace binmach
