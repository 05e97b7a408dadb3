#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <set>
#include <utility>
#include <vector>

#include "p2c/error.hpp"

namespace p2c {

// Vertex and edge handles are distinct types on purpose: the Hamiltonian-cycle
// machinery keeps per-vertex sets of edge ids, and mixing the two id spaces is
// the easiest bug to write.
struct VertexId {
  std::int32_t value = -1;
  friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

struct EdgeId {
  std::int32_t value = -1;
  friend auto operator<=>(const EdgeId&, const EdgeId&) = default;
};

inline std::ostream& operator<<(std::ostream& os, VertexId v) {
  return os << v.value;
}
inline std::ostream& operator<<(std::ostream& os, EdgeId e) {
  return os << e.value;
}

// Undirected simple graph: no self-loops, no parallel edges. Vertex ids are
// arbitrary non-negative integers and are never reused within one instance;
// fresh_vertex() hands out ids above everything seen so far.
class SimpleGraph {
 public:
  SimpleGraph() = default;

  // Builds the graph on vertices 1..n with no edges.
  explicit SimpleGraph(int n);

  void add_vertex(VertexId v);
  VertexId fresh_vertex();
  void add_edge(VertexId u, VertexId v);
  void remove_vertex(VertexId v);  // drops incident edges too

  bool has_vertex(VertexId v) const { return adj_.count(v) != 0; }
  bool has_edge(VertexId u, VertexId v) const;
  const std::set<VertexId>& neighbors(VertexId v) const;

  int order() const { return static_cast<int>(adj_.size()); }
  long long size() const { return edge_count_; }
  bool empty() const { return adj_.empty(); }
  int degree(VertexId v) const;

  std::vector<VertexId> vertices() const;
  // Each edge once, as (min, max), ascending.
  std::vector<std::pair<VertexId, VertexId>> edges() const;

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  std::map<VertexId, std::set<VertexId>> adj_;
  long long edge_count_ = 0;
  std::int32_t next_id_ = 1;
};

// Undirected multigraph with persistent edge identity. Parallel edges and
// self-loops are allowed. Contraction never invents ids: the surviving vertex
// keeps the smaller endpoint id, the absorbed one is tombstoned, and every
// edge keeps its EdgeId while its endpoints are rewritten. origin() always
// reports the endpoints an edge had at construction time.
class MultiGraph {
 public:
  MultiGraph() = default;
  explicit MultiGraph(int n);  // vertices 1..n, no edges

  void add_vertex(VertexId v);
  EdgeId add_edge(VertexId u, VertexId v);  // ids assigned 0,1,2,... in order

  bool has_vertex(VertexId v) const { return vertices_.count(v) != 0; }
  bool has_edge(EdgeId e) const { return endpoints_.count(e) != 0; }

  // Current endpoints, in stored order (first, second). For self-loops both
  // coincide.
  std::pair<VertexId, VertexId> endpoints(EdgeId e) const;
  std::pair<VertexId, VertexId> origin(EdgeId e) const;
  bool is_self_loop(EdgeId e) const;

  // Alias set: the original vertex ids merged into v. Initially {v}.
  const std::set<VertexId>& aliases(VertexId v) const;

  const std::set<EdgeId>& incident(VertexId v) const;

  // Merges the endpoints of e and removes e itself. Parallel copies of e
  // become self-loops at the survivor. Self-loops cannot be contracted.
  // Returns the surviving vertex id.
  VertexId contract(EdgeId e);

  int order() const { return static_cast<int>(vertices_.size()); }
  int size() const { return static_cast<int>(endpoints_.size()); }

  const std::set<VertexId>& vertex_set() const { return vertices_; }
  std::vector<EdgeId> edge_ids() const;

 private:
  std::set<VertexId> vertices_;
  std::map<VertexId, std::set<VertexId>> aliases_;
  std::map<EdgeId, std::pair<VertexId, VertexId>> endpoints_;
  std::map<EdgeId, std::pair<VertexId, VertexId>> origin_;
  std::map<VertexId, std::set<EdgeId>> incident_;
  std::int32_t next_edge_ = 0;
};

// contract_edge as a value-returning operation; the engine uses the in-place
// member for the hot path.
MultiGraph contract_edge(const MultiGraph& g, EdgeId e);

// A Hamiltonian cycle as a vertex sequence plus the edge realizing each hop:
// edges[k] joins order[k] and order[(k+1) % n]. A one-vertex graph gets the
// degenerate cycle (order = {v}, edges empty).
struct HamiltonianCycle {
  std::vector<VertexId> order;
  std::vector<EdgeId> edges;

  friend bool operator==(const HamiltonianCycle&,
                         const HamiltonianCycle&) = default;
};

using Isomorphism = std::map<VertexId, VertexId>;

// True iff phi is a bijection V(g) -> V(h) with u~v in g exactly when
// phi(u)~phi(v) in h. Never throws; any structural defect just yields false.
bool validate_isomorphism(const SimpleGraph& g, const SimpleGraph& h,
                          const Isomorphism& phi);

// True iff c visits every vertex of g exactly once and each hop (including
// the closing one) uses a live edge of g with the right endpoints, all edge
// ids distinct. Self-loops never qualify as hops once the graph has >= 2
// vertices. A one-vertex graph accepts the degenerate cycle, with either no
// edge or a single self-loop.
bool validate_hamiltonian_cycle(const MultiGraph& g,
                                const HamiltonianCycle& c);

}  // namespace p2c
