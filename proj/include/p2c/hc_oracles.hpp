#pragma once

#include <optional>
#include <random>
#include <vector>

#include "p2c/error.hpp"
#include "p2c/graph.hpp"
#include "p2c/hc_engine.hpp"

namespace p2c {

// Enumeration-backed policies refuse graphs with more vertices than this;
// large instances must use the planted policy.
inline constexpr int kDefaultHcGuard = 9;

// All Hamiltonian cycles of g, one representative per edge set, sorted by
// their sorted edge-id vectors. Cycles are canonical: the order starts at the
// least vertex and runs toward the lesser of the two incident cycle edges.
// A single vertex yields the one degenerate cycle; self-loops never appear
// on cycles of larger graphs.
std::vector<HamiltonianCycle> enumerate_hamiltonian_cycles(
    const MultiGraph& g, int guard = kDefaultHcGuard);

// The subset of enumerate_hamiltonian_cycles(g) passing cycle_consistent
// against ctx.
std::vector<HamiltonianCycle> enumerate_consistent_cycles(
    const MultiGraph& g, const LeftRightContext& ctx,
    int guard = kDefaultHcGuard);

enum class HcPolicyKind {
  HonestLex,
  AdversarialMinFreedom,
  SeededRandom,
  Planted,
  ContextFree,
};

const char* to_string(HcPolicyKind kind);

struct HcOraclePolicy {
  HcPolicyKind kind = HcPolicyKind::HonestLex;
  unsigned seed = 0;
  int guard = kDefaultHcGuard;
  // Required for Planted; must be a valid Hamiltonian cycle of the graph the
  // run starts on.
  HamiltonianCycle planted;
};

// Answer rules, all over the queried (contracted) graph:
//   honest: least edge id of the least consistent cycle.
//   adversarial: an edge lying on the fewest consistent cycles (at least
//     one), seeded uniform tie-break.
//   random: seeded uniform pick among edges lying on some consistent cycle.
//   planted: least live edge id of the planted cycle; the first call
//     validates the cycle against the queried graph. Raises
//     planted-violation when no live non-loop planted edge remains.
//   context-free: ignores ctx; seeded uniform pick among edges lying on some
//     Hamiltonian cycle. Deliberately weaker than the engine's contract;
//     excluded from soundness suites.
// Enumeration finding no consistent cycle raises no-witness.
class PolicyHcOracle : public HcOracle {
 public:
  explicit PolicyHcOracle(HcOraclePolicy policy);

  EdgeId answer(const MultiGraph& g, const LeftRightContext& ctx) override;

 private:
  EdgeId answer_planted(const MultiGraph& g);

  HcOraclePolicy policy_;
  std::mt19937 rng_;
  bool first_call_ = true;
};

}  // namespace p2c
