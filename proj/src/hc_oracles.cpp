#include "p2c/hc_oracles.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace p2c {

namespace {

struct CycleSearch {
  const MultiGraph* g;
  // adjacency by ascending edge id: vertex -> [(edge, other endpoint)]
  std::map<VertexId, std::vector<std::pair<EdgeId, VertexId>>> adj;
  VertexId start;
  int n = 0;
  std::map<std::vector<EdgeId>, HamiltonianCycle> found;  // key: sorted ids

  std::vector<VertexId> path;
  std::vector<EdgeId> edges;
  std::set<VertexId> used;

  void record() {
    std::vector<EdgeId> key = edges;
    std::sort(key.begin(), key.end());
    auto [it, fresh] = found.try_emplace(std::move(key));
    if (!fresh) return;
    HamiltonianCycle c{path, edges};
    // Canonical direction: the lesser of the two cycle edges at the start
    // vertex comes first.
    if (c.edges.back() < c.edges.front()) {
      std::reverse(c.order.begin() + 1, c.order.end());
      std::reverse(c.edges.begin(), c.edges.end());
    }
    it->second = std::move(c);
  }

  void dfs(VertexId cur) {
    for (const auto& [e, other] : adj.at(cur)) {
      if (other == cur) continue;
      if (static_cast<int>(path.size()) == n) {
        // Closing hop. Only at n = 2 can the closer collide with an edge
        // already on the path (a parallel copy is required there).
        if (other == start &&
            std::find(edges.begin(), edges.end(), e) == edges.end()) {
          edges.push_back(e);
          record();
          edges.pop_back();
        }
        continue;
      }
      if (used.count(other)) continue;
      path.push_back(other);
      edges.push_back(e);
      used.insert(other);
      dfs(other);
      used.erase(other);
      edges.pop_back();
      path.pop_back();
    }
  }
};

}  // namespace

std::vector<HamiltonianCycle> enumerate_hamiltonian_cycles(const MultiGraph& g,
                                                           int guard) {
  const int n = g.order();
  if (n > guard)
    raise(ErrorKind::InstanceTooLarge,
          "cycle enumeration guard exceeded: " + std::to_string(n) + " > " +
              std::to_string(guard));
  if (n == 0) return {};
  auto vs = g.vertex_set();
  if (n == 1) return {HamiltonianCycle{{*vs.begin()}, {}}};

  CycleSearch s;
  s.g = &g;
  s.n = n;
  s.start = *vs.begin();
  for (VertexId v : vs) {
    auto& lst = s.adj[v];
    for (EdgeId e : g.incident(v)) {
      auto [a, b] = g.endpoints(e);
      lst.push_back({e, (a == v) ? b : a});
    }
    std::sort(lst.begin(), lst.end());
  }
  s.path.push_back(s.start);
  s.used.insert(s.start);
  s.dfs(s.start);

  std::vector<HamiltonianCycle> out;
  out.reserve(s.found.size());
  for (auto& [_, c] : s.found) out.push_back(std::move(c));
  return out;
}

std::vector<HamiltonianCycle> enumerate_consistent_cycles(
    const MultiGraph& g, const LeftRightContext& ctx, int guard) {
  std::vector<HamiltonianCycle> out;
  for (auto& c : enumerate_hamiltonian_cycles(g, guard))
    if (cycle_consistent(c, ctx)) out.push_back(std::move(c));
  return out;
}

const char* to_string(HcPolicyKind kind) {
  switch (kind) {
    case HcPolicyKind::HonestLex: return "honest";
    case HcPolicyKind::AdversarialMinFreedom: return "adversarial";
    case HcPolicyKind::SeededRandom: return "random";
    case HcPolicyKind::Planted: return "planted";
    case HcPolicyKind::ContextFree: return "context-free";
  }
  return "?";
}

PolicyHcOracle::PolicyHcOracle(HcOraclePolicy policy)
    : policy_(std::move(policy)), rng_(policy_.seed) {}

EdgeId PolicyHcOracle::answer_planted(const MultiGraph& g) {
  if (first_call_) {
    first_call_ = false;
    if (!validate_hamiltonian_cycle(g, policy_.planted))
      raise(ErrorKind::PlantedViolation,
            "planted cycle is not a Hamiltonian cycle of the input");
  }
  std::vector<EdgeId> sorted = policy_.planted.edges;
  std::sort(sorted.begin(), sorted.end());
  for (EdgeId e : sorted)
    if (g.has_edge(e) && !g.is_self_loop(e)) return e;
  raise(ErrorKind::PlantedViolation,
        "no live planted edge remains; the run left the planted cycle");
}

EdgeId PolicyHcOracle::answer(const MultiGraph& g,
                              const LeftRightContext& ctx) {
  if (policy_.kind == HcPolicyKind::Planted) return answer_planted(g);
  first_call_ = false;

  std::vector<HamiltonianCycle> cycles =
      (policy_.kind == HcPolicyKind::ContextFree)
          ? enumerate_hamiltonian_cycles(g, policy_.guard)
          : enumerate_consistent_cycles(g, ctx, policy_.guard);
  if (cycles.empty())
    raise(ErrorKind::NoWitness,
          policy_.kind == HcPolicyKind::ContextFree
              ? "graph has no Hamiltonian cycle"
              : "no Hamiltonian cycle is consistent with the context");

  switch (policy_.kind) {
    case HcPolicyKind::HonestLex: {
      const HamiltonianCycle& c = cycles.front();
      return *std::min_element(c.edges.begin(), c.edges.end());
    }
    case HcPolicyKind::AdversarialMinFreedom: {
      std::map<EdgeId, long long> count;
      for (const auto& c : cycles)
        for (EdgeId e : c.edges) ++count[e];
      long long best = -1;
      for (const auto& [e, k] : count)
        if (best < 0 || k < best) best = k;
      std::vector<EdgeId> ties;
      for (const auto& [e, k] : count)
        if (k == best) ties.push_back(e);
      std::uniform_int_distribution<std::size_t> pick(0, ties.size() - 1);
      return ties[pick(rng_)];
    }
    case HcPolicyKind::SeededRandom:
    case HcPolicyKind::ContextFree: {
      std::set<EdgeId> on_some;
      for (const auto& c : cycles) on_some.insert(c.edges.begin(), c.edges.end());
      std::vector<EdgeId> all(on_some.begin(), on_some.end());
      std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
      return all[pick(rng_)];
    }
    case HcPolicyKind::Planted: break;
  }
  raise(ErrorKind::InternalInvariantFailure, "unhandled oracle policy");
}

}  // namespace p2c
