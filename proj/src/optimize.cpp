#include "binmach/optimize.hpp"

#include <algorithm>
#include <stdexcept>

#include "binmach/document.hpp"

namespace binmach {

namespace {

// Deterministic across platforms, unlike <random> distributions.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform-enough value in [0, n); n is tiny here, so multiply-shift bias
  // is negligible and, more importantly, reproducible.
  std::uint64_t bounded(std::uint64_t n) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next()) * n) >> 64);
  }
};

void fisher_yates(std::vector<std::uint32_t>& v, SplitMix64& rng) {
  for (std::size_t i = v.size(); i > 1; --i)
    std::swap(v[i - 1], v[rng.bounded(i)]);
}

enum class Move { swap_even, swap_odd, toggle_policy };

struct ChainState {
  PoolPermutation perm;
  RemainingStatePolicy policy;
  std::uint64_t cost;
  BinaryMachine machine;
};

std::string canonical_bytes(const BinaryMachine& m, const BinarySequence& a) {
  return serialize(make_document(m, a, /*include_anf=*/false));
}

}  // namespace

std::string_view to_string(Objective o) noexcept {
  switch (o) {
    case Objective::monomials: return "monomials";
    case Objective::literals: return "literals";
    case Objective::gate_upper_bound: return "gate_upper_bound";
  }
  return "?";
}

std::optional<Objective> parse_objective(std::string_view s) noexcept {
  if (s == "monomials") return Objective::monomials;
  if (s == "literals") return Objective::literals;
  if (s == "gate_upper_bound") return Objective::gate_upper_bound;
  return std::nullopt;
}

std::uint64_t total_cost(const BinaryMachine& m, Objective objective) {
  std::uint64_t sum = 0;
  for (int j = 0; j < m.stages(); ++j) {
    const CostReport r = cost(support_to_anf(m.support(j), m.stages()));
    switch (objective) {
      case Objective::monomials: sum += r.monomial_count; break;
      case Objective::literals: sum += r.literal_count; break;
      case Objective::gate_upper_bound: sum += r.gate_upper_bound; break;
    }
  }
  return sum;
}

CostReport total_cost_report(const BinaryMachine& m) {
  CostReport sum;
  for (int j = 0; j < m.stages(); ++j) {
    const CostReport r = cost(support_to_anf(m.support(j), m.stages()));
    sum.monomial_count += r.monomial_count;
    sum.literal_count += r.literal_count;
    sum.max_degree += r.max_degree;
    sum.gate_upper_bound += r.gate_upper_bound;
  }
  return sum;
}

OptimizationResult optimize(const BinarySequence& a, const OptimizationConfig& cfg,
                            const std::function<void(const BinaryMachine&)>& observer) {
  if (cfg.iterations < 1) throw std::invalid_argument("iterations must be at least 1");
  if (cfg.policy_choices.empty()) throw std::invalid_argument("policy_choices must not be empty");

  bool allow_sink = false, allow_cycle = false;
  for (RemainingStatePolicy p : cfg.policy_choices)
    (p == RemainingStatePolicy::zero_sink ? allow_sink : allow_cycle) = true;
  const RemainingStatePolicy start_policy =
      allow_sink ? RemainingStatePolicy::zero_sink : RemainingStatePolicy::cycle;

  const std::size_t n = a.size();
  const std::size_t wt = a.weight();  // assign_states rejects constant input below

  auto evaluate = [&](const PoolPermutation& perm, RemainingStatePolicy policy) {
    BinaryMachine machine = build_machine(assign_states_permuted(a, perm), policy);
    if (observer) observer(machine);
    const std::uint64_t c = total_cost(machine, cfg.objective);
    return std::pair<BinaryMachine, std::uint64_t>(std::move(machine), c);
  };

  // Chain seeds are drawn up front so each chain's stream is independent of
  // how many moves the others consume.
  SplitMix64 master(cfg.seed);
  const std::uint64_t chains = cfg.restarts + 1;
  std::vector<std::uint64_t> chain_seed(chains);
  for (auto& s : chain_seed) s = master.next();

  std::optional<OptimizationResult> best;
  std::string best_bytes;

  for (std::uint64_t chain = 0; chain < chains; ++chain) {
    SplitMix64 rng(chain_seed[chain]);

    PoolPermutation perm = PoolPermutation::identity(n, wt);
    if (chain > 0) {
      fisher_yates(perm.even_order, rng);
      fisher_yates(perm.odd_order, rng);
    }

    auto [machine, start_cost] = evaluate(perm, start_policy);
    ChainState cur{std::move(perm), start_policy, start_cost, std::move(machine)};
    std::vector<std::pair<std::uint64_t, std::uint64_t>> history{{0, cur.cost}};

    std::vector<Move> moves;
    if (cur.perm.even_order.size() >= 2) moves.push_back(Move::swap_even);
    if (cur.perm.odd_order.size() >= 2) moves.push_back(Move::swap_odd);
    if (allow_sink && allow_cycle) moves.push_back(Move::toggle_policy);

    if (!moves.empty()) {
      for (std::uint64_t it = 1; it <= cfg.iterations; ++it) {
        PoolPermutation cand_perm = cur.perm;
        RemainingStatePolicy cand_policy = cur.policy;
        switch (moves[rng.bounded(moves.size())]) {
          case Move::swap_even: {
            auto& v = cand_perm.even_order;
            const std::size_t i = rng.bounded(v.size());
            const std::size_t j = (i + 1 + rng.bounded(v.size() - 1)) % v.size();
            std::swap(v[i], v[j]);
            break;
          }
          case Move::swap_odd: {
            auto& v = cand_perm.odd_order;
            const std::size_t i = rng.bounded(v.size());
            const std::size_t j = (i + 1 + rng.bounded(v.size() - 1)) % v.size();
            std::swap(v[i], v[j]);
            break;
          }
          case Move::toggle_policy:
            cand_policy = cand_policy == RemainingStatePolicy::zero_sink
                              ? RemainingStatePolicy::cycle
                              : RemainingStatePolicy::zero_sink;
            break;
        }

        auto [cand_machine, cand_cost] = evaluate(cand_perm, cand_policy);
        if (cand_cost < cur.cost) {
          cur = ChainState{std::move(cand_perm), cand_policy, cand_cost, std::move(cand_machine)};
          history.emplace_back(it, cand_cost);
        }
      }
    }

    std::string bytes = canonical_bytes(cur.machine, a);
    const bool better = !best || cur.cost < best->history.back().second ||
                        (cur.cost == best->history.back().second && bytes < best_bytes);
    if (better) {
      best = OptimizationResult{std::move(cur.machine), std::move(cur.perm),
                                CostReport{}, std::move(history)};
      best_bytes = std::move(bytes);
    }
  }

  best->total_cost = total_cost_report(best->machine);
  return *best;
}

}  // namespace binmach
