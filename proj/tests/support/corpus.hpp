#pragma once

// Test corpora: exhaustive labeled simple graphs, their isomorphic ordered
// pairs, and Hamiltonian multigraph families (exhaustive up to isomorphism
// at small n, seeded random at larger n).

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "p2c/graph.hpp"

namespace p2c::corpus {

inline std::vector<std::pair<int, int>> vertex_pairs(int n) {
  std::vector<std::pair<int, int>> ps;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) ps.push_back({a, b});
  return ps;
}

inline SimpleGraph graph_from_mask(int n, unsigned long long mask) {
  SimpleGraph g(n);
  auto ps = vertex_pairs(n);
  for (std::size_t k = 0; k < ps.size(); ++k)
    if (mask >> k & 1ULL)
      g.add_edge(VertexId{ps[k].first}, VertexId{ps[k].second});
  return g;
}

inline std::vector<SimpleGraph> all_labeled_graphs(int n) {
  std::vector<SimpleGraph> out;
  const int bits = n * (n - 1) / 2;
  for (unsigned long long mask = 0; mask < (1ULL << bits); ++mask)
    out.push_back(graph_from_mask(n, mask));
  return out;
}

// Canonical form of a labeled simple graph: the least edge mask over all
// relabelings. Graphs share the form exactly when isomorphic.
inline unsigned long long canonical_mask(const SimpleGraph& g) {
  const int n = g.order();
  auto ps = vertex_pairs(n);
  std::vector<int> perm(n);
  for (int k = 0; k < n; ++k) perm[k] = k + 1;
  unsigned long long best = ~0ULL;
  do {
    unsigned long long mask = 0;
    for (std::size_t k = 0; k < ps.size(); ++k) {
      VertexId a{perm[ps[k].first - 1]}, b{perm[ps[k].second - 1]};
      if (g.has_edge(a, b)) mask |= 1ULL << k;
    }
    best = std::min(best, mask);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// All ordered pairs (G, H) of isomorphic labeled graphs on vertices 1..n,
// grouped via canonical forms.
inline std::vector<std::pair<SimpleGraph, SimpleGraph>> isomorphic_pairs(
    int n) {
  auto graphs = all_labeled_graphs(n);
  std::map<unsigned long long, std::vector<std::size_t>> classes;
  for (std::size_t k = 0; k < graphs.size(); ++k)
    classes[canonical_mask(graphs[k])].push_back(k);
  std::vector<std::pair<SimpleGraph, SimpleGraph>> out;
  for (const auto& [_, members] : classes)
    for (std::size_t a : members)
      for (std::size_t b : members) out.push_back({graphs[a], graphs[b]});
  return out;
}

// --- Hamiltonian multigraph corpus -----------------------------------------

// A multigraph as an edge multiset for canonicalization.
using EdgeList = std::vector<std::pair<int, int>>;

inline EdgeList canonical_multigraph(int n, const EdgeList& edges) {
  std::vector<int> perm(n);
  for (int k = 0; k < n; ++k) perm[k] = k + 1;
  EdgeList best;
  bool have = false;
  do {
    EdgeList img;
    img.reserve(edges.size());
    for (auto [a, b] : edges) {
      int pa = perm[a - 1], pb = perm[b - 1];
      img.push_back({std::min(pa, pb), std::max(pa, pb)});
    }
    std::sort(img.begin(), img.end());
    if (!have || img < best) {
      best = std::move(img);
      have = true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline MultiGraph multigraph_from_edges(int n, const EdgeList& edges) {
  MultiGraph g(n);
  for (auto [a, b] : edges) g.add_edge(VertexId{a}, VertexId{b});
  return g;
}

// Every loop-free connected multigraph with a Hamiltonian cycle, n vertices,
// at most max_edges edges, one representative per isomorphism class. Built
// as the cycle 1..n plus every multiset of extra non-loop edges; the cycle
// edges get ids 0..n-1, so the planted cycle is the vertex order 1..n.
// Includes n = 1 (vertex, no edges) and n = 2 (parallel pairs).
inline std::vector<MultiGraph> hamiltonian_corpus_at(int n, int max_edges) {
  std::vector<MultiGraph> out;
  if (n < 1) return out;

  EdgeList base;
  if (n == 2) {
    base = {{1, 2}, {1, 2}};
  } else if (n >= 3) {
    for (int v = 1; v <= n; ++v) base.push_back({v, v == n ? 1 : v + 1});
    for (auto& [a, b] : base)
      if (a > b) std::swap(a, b);
  }
  if (static_cast<int>(base.size()) > max_edges) return out;

  auto pairs = vertex_pairs(n);
  const int room = max_edges - static_cast<int>(base.size());
  std::set<EdgeList> seen;

  // Multisets over `pairs` of size 0..room, by nondecreasing pair index.
  std::vector<int> extras;
  auto emit = [&]() {
    EdgeList edges = base;
    for (int idx : extras) edges.push_back(pairs[idx]);
    EdgeList key = canonical_multigraph(n, edges);
    if (seen.insert(std::move(key)).second)
      out.push_back(multigraph_from_edges(n, edges));
  };
  // Iterative multiset enumeration.
  std::vector<std::vector<int>> stack = {{}};
  while (!stack.empty()) {
    extras = std::move(stack.back());
    stack.pop_back();
    emit();
    if (static_cast<int>(extras.size()) == room || pairs.empty()) continue;
    int lo = extras.empty() ? 0 : extras.back();
    for (int idx = static_cast<int>(pairs.size()) - 1; idx >= lo; --idx) {
      auto next = extras;
      next.push_back(idx);
      stack.push_back(std::move(next));
    }
  }
  return out;
}

inline std::vector<MultiGraph> hamiltonian_corpus_upto(int max_n,
                                                       int max_edges) {
  std::vector<MultiGraph> out;
  for (int n = 1; n <= max_n; ++n)
    for (auto& g : hamiltonian_corpus_at(n, max_edges))
      out.push_back(std::move(g));
  return out;
}

// Random Hamiltonian multigraph: a cycle through a shuffled vertex order
// plus a few random extra edges, edges inserted in random order. Returns the
// graph and the planted cycle's vertex order.
inline std::pair<MultiGraph, std::vector<VertexId>> random_hamiltonian(
    int n, std::mt19937& rng, int max_extra = 3) {
  std::vector<int> order(n);
  for (int k = 0; k < n; ++k) order[k] = k + 1;
  std::shuffle(order.begin(), order.end(), rng);

  EdgeList edges;
  for (int k = 0; k < n; ++k) {
    int a = order[k], b = order[(k + 1) % n];
    edges.push_back({std::min(a, b), std::max(a, b)});
  }
  std::uniform_int_distribution<int> extra_count(0, max_extra);
  std::uniform_int_distribution<int> vpick(1, n);
  int extras = n >= 3 ? extra_count(rng) : 0;
  for (int k = 0; k < extras; ++k) {
    int a = vpick(rng), b = vpick(rng);
    while (b == a) b = vpick(rng);
    edges.push_back({std::min(a, b), std::max(a, b)});
  }
  std::shuffle(edges.begin(), edges.end(), rng);

  std::vector<VertexId> planted;
  for (int v : order) planted.push_back(VertexId{v});
  return {multigraph_from_edges(n, edges), std::move(planted)};
}

}  // namespace p2c::corpus
