#include "p2c/graph.hpp"

#include <algorithm>

namespace p2c {

SimpleGraph::SimpleGraph(int n) {
  for (int v = 1; v <= n; ++v) add_vertex(VertexId{v});
}

void SimpleGraph::add_vertex(VertexId v) {
  if (v.value < 0)
    raise(ErrorKind::InternalInvariantFailure, "negative vertex id");
  if (!adj_.emplace(v, std::set<VertexId>{}).second)
    raise(ErrorKind::InternalInvariantFailure, "vertex id reused");
  next_id_ = std::max(next_id_, v.value + 1);
}

VertexId SimpleGraph::fresh_vertex() {
  VertexId v{next_id_};
  add_vertex(v);
  return v;
}

void SimpleGraph::add_edge(VertexId u, VertexId v) {
  if (u == v)
    raise(ErrorKind::InternalInvariantFailure, "self-loop in simple graph");
  auto iu = adj_.find(u);
  auto iv = adj_.find(v);
  if (iu == adj_.end() || iv == adj_.end())
    raise(ErrorKind::InternalInvariantFailure, "edge endpoint not present");
  if (iu->second.insert(v).second) {
    iv->second.insert(u);
    ++edge_count_;
  }
}

void SimpleGraph::remove_vertex(VertexId v) {
  auto it = adj_.find(v);
  if (it == adj_.end())
    raise(ErrorKind::InternalInvariantFailure, "removing unknown vertex");
  edge_count_ -= static_cast<long long>(it->second.size());
  for (VertexId w : it->second) adj_.at(w).erase(v);
  adj_.erase(it);
}

bool SimpleGraph::has_edge(VertexId u, VertexId v) const {
  auto it = adj_.find(u);
  return it != adj_.end() && it->second.count(v) != 0;
}

const std::set<VertexId>& SimpleGraph::neighbors(VertexId v) const {
  auto it = adj_.find(v);
  if (it == adj_.end())
    raise(ErrorKind::InternalInvariantFailure, "neighbors of unknown vertex");
  return it->second;
}

int SimpleGraph::degree(VertexId v) const {
  return static_cast<int>(neighbors(v).size());
}

std::vector<VertexId> SimpleGraph::vertices() const {
  std::vector<VertexId> out;
  out.reserve(adj_.size());
  for (const auto& [v, _] : adj_) out.push_back(v);
  return out;
}

std::vector<std::pair<VertexId, VertexId>> SimpleGraph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (const auto& [v, nbrs] : adj_)
    for (VertexId w : nbrs)
      if (v < w) out.emplace_back(v, w);
  return out;
}

MultiGraph::MultiGraph(int n) {
  for (int v = 1; v <= n; ++v) add_vertex(VertexId{v});
}

void MultiGraph::add_vertex(VertexId v) {
  if (v.value < 0)
    raise(ErrorKind::InternalInvariantFailure, "negative vertex id");
  if (!vertices_.insert(v).second)
    raise(ErrorKind::InternalInvariantFailure, "vertex id reused");
  aliases_[v] = {v};
  incident_[v];
}

EdgeId MultiGraph::add_edge(VertexId u, VertexId v) {
  if (!has_vertex(u) || !has_vertex(v))
    raise(ErrorKind::InternalInvariantFailure, "edge endpoint not present");
  EdgeId e{next_edge_++};
  endpoints_[e] = {u, v};
  origin_[e] = {u, v};
  incident_[u].insert(e);
  incident_[v].insert(e);
  return e;
}

std::pair<VertexId, VertexId> MultiGraph::endpoints(EdgeId e) const {
  auto it = endpoints_.find(e);
  if (it == endpoints_.end())
    raise(ErrorKind::InternalInvariantFailure, "endpoints of unknown edge");
  return it->second;
}

std::pair<VertexId, VertexId> MultiGraph::origin(EdgeId e) const {
  auto it = origin_.find(e);
  if (it == origin_.end())
    raise(ErrorKind::InternalInvariantFailure, "origin of unknown edge");
  return it->second;
}

bool MultiGraph::is_self_loop(EdgeId e) const {
  auto [u, v] = endpoints(e);
  return u == v;
}

const std::set<VertexId>& MultiGraph::aliases(VertexId v) const {
  auto it = aliases_.find(v);
  if (it == aliases_.end())
    raise(ErrorKind::InternalInvariantFailure, "aliases of unknown vertex");
  return it->second;
}

const std::set<EdgeId>& MultiGraph::incident(VertexId v) const {
  auto it = incident_.find(v);
  if (it == incident_.end())
    raise(ErrorKind::InternalInvariantFailure, "incidence of unknown vertex");
  return it->second;
}

VertexId MultiGraph::contract(EdgeId e) {
  auto it = endpoints_.find(e);
  if (it == endpoints_.end())
    raise(ErrorKind::ContractionError, "contracting unknown or dead edge");
  auto [u, v] = it->second;
  if (u == v) raise(ErrorKind::ContractionError, "contracting a self-loop");

  VertexId s = std::min(u, v);
  VertexId t = std::max(u, v);

  endpoints_.erase(e);
  origin_.erase(e);  // origins of live edges only; e is gone
  incident_[u].erase(e);
  incident_[v].erase(e);

  for (EdgeId f : incident_[t]) {
    auto& ep = endpoints_.at(f);
    if (ep.first == t) ep.first = s;
    if (ep.second == t) ep.second = s;
    incident_[s].insert(f);
  }
  incident_.erase(t);

  auto& sa = aliases_[s];
  auto& ta = aliases_[t];
  sa.insert(ta.begin(), ta.end());
  aliases_.erase(t);
  vertices_.erase(t);
  return s;
}

std::vector<EdgeId> MultiGraph::edge_ids() const {
  std::vector<EdgeId> out;
  out.reserve(endpoints_.size());
  for (const auto& [e, _] : endpoints_) out.push_back(e);
  return out;
}

MultiGraph contract_edge(const MultiGraph& g, EdgeId e) {
  MultiGraph out = g;
  out.contract(e);
  return out;
}

bool validate_isomorphism(const SimpleGraph& g, const SimpleGraph& h,
                          const Isomorphism& phi) {
  if (g.order() != h.order()) return false;
  if (static_cast<int>(phi.size()) != g.order()) return false;

  std::set<VertexId> images;
  for (const auto& [x, y] : phi) {
    if (!g.has_vertex(x) || !h.has_vertex(y)) return false;
    if (!images.insert(y).second) return false;
  }

  const auto verts = g.vertices();
  for (std::size_t a = 0; a < verts.size(); ++a)
    for (std::size_t b = a + 1; b < verts.size(); ++b) {
      bool in_g = g.has_edge(verts[a], verts[b]);
      bool in_h = h.has_edge(phi.at(verts[a]), phi.at(verts[b]));
      if (in_g != in_h) return false;
    }
  return true;
}

bool validate_hamiltonian_cycle(const MultiGraph& g,
                                const HamiltonianCycle& c) {
  const int n = g.order();
  if (static_cast<int>(c.order.size()) != n || n == 0) return false;

  std::set<VertexId> seen;
  for (VertexId v : c.order) {
    if (!g.has_vertex(v)) return false;
    if (!seen.insert(v).second) return false;
  }

  if (n == 1) {
    if (c.edges.empty()) return true;
    if (c.edges.size() != 1 || !g.has_edge(c.edges[0])) return false;
    auto [u, v] = g.endpoints(c.edges[0]);
    return u == c.order[0] && v == c.order[0];
  }

  if (static_cast<int>(c.edges.size()) != n) return false;
  std::set<EdgeId> used;
  for (int k = 0; k < n; ++k) {
    EdgeId e = c.edges[k];
    if (!g.has_edge(e)) return false;
    if (!used.insert(e).second) return false;
    auto [u, v] = g.endpoints(e);
    VertexId a = c.order[k];
    VertexId b = c.order[(k + 1) % n];
    if (!((u == a && v == b) || (u == b && v == a))) return false;
  }
  return true;
}

}  // namespace p2c
