#include "p2c/hc_engine.hpp"

#include <algorithm>
#include <sstream>

namespace p2c {

const LeftRightContext::Sides& LeftRightContext::at(VertexId v) const {
  auto it = entries_.find(v);
  if (it == entries_.end())
    raise(ErrorKind::InternalInvariantFailure,
          "context lookup for untracked vertex");
  return it->second;
}

std::vector<VertexId> LeftRightContext::domain() const {
  std::vector<VertexId> out;
  out.reserve(entries_.size());
  for (const auto& [v, _] : entries_) out.push_back(v);
  return out;
}

bool LeftRightContext::well_formed(const MultiGraph& g,
                                   std::string* why) const {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  for (const auto& [v, sides] : entries_) {
    if (!g.has_vertex(v)) return fail("tracked vertex is not live");
    const auto& inc = g.incident(v);
    for (EdgeId e : sides.first)
      if (!inc.count(e)) return fail("left side holds a non-incident edge");
    for (EdgeId e : sides.second) {
      if (!inc.count(e)) return fail("right side holds a non-incident edge");
      if (sides.first.count(e)) return fail("sides are not disjoint");
    }
  }
  return true;
}

bool cycle_consistent(const HamiltonianCycle& c, const LeftRightContext& ctx) {
  std::set<EdgeId> on_cycle(c.edges.begin(), c.edges.end());
  for (const auto& [v, sides] : ctx.entries()) {
    int left = 0, right = 0;
    for (EdgeId e : sides.first) left += on_cycle.count(e);
    for (EdgeId e : sides.second) right += on_cycle.count(e);
    if (left != 1 || right != 1) return false;
  }
  return true;
}

HcEngineState make_hc_state(const MultiGraph& g) {
  HcEngineState st;
  st.original = g;
  st.graph = g;
  st.n = g.order();
  return st;
}

namespace {

// Edges of w whose endpoint opposite w is not x. Parallel edges between w
// and x are excluded; a self-loop at w points away from x and passes this
// filter (looped entries are pruned right after the contraction).
std::set<EdgeId> edges_away(const MultiGraph& g, VertexId w, VertexId x) {
  std::set<EdgeId> out;
  for (EdgeId f : g.incident(w)) {
    auto [a, b] = g.endpoints(f);
    VertexId other = (a == w) ? b : a;
    if (other != x) out.insert(f);
  }
  return out;
}

}  // namespace

void contract_and_update(HcEngineState& st, EdgeId e) {
  MultiGraph& g = st.graph;
  if (!g.has_edge(e))
    raise(ErrorKind::ContractionError,
          "edge " + std::to_string(e.value) + " is not live");
  auto [u, v] = g.endpoints(e);
  if (u == v)
    raise(ErrorKind::ContractionError, "cannot contract a self-loop");

  HcStepRecord rec;
  rec.step = st.step + 1;
  rec.answer = e;
  rec.merged_u = u;
  rec.merged_v = v;
  if (st.keep_trace) {
    for (EdgeId f : g.edge_ids()) rec.query_edges.push_back({f, g.endpoints(f)});
    for (const auto& [w, sides] : st.ctx.entries())
      rec.query_ctx[w] = {
          std::vector<EdgeId>(sides.first.begin(), sides.first.end()),
          std::vector<EdgeId>(sides.second.begin(), sides.second.end())};
  }

  std::set<EdgeId> partner;  // all edges joining u and v, e included
  for (EdgeId f : g.incident(u)) {
    auto [a, b] = g.endpoints(f);
    if ((a == u && b == v) || (a == v && b == u)) partner.insert(f);
  }
  auto minus_partner = [&](std::set<EdgeId> s) {
    for (EdgeId p : partner) s.erase(p);
    return s;
  };

  const bool tu = st.ctx.contains(u);
  const bool tv = st.ctx.contains(v);
  LeftRightContext::Sides sides;
  std::string label;

  if (!tu && !tv) {
    std::set<EdgeId> left = g.incident(u);
    left.erase(e);
    sides = {std::move(left), edges_away(g, v, u)};
    label = "1";
  } else if (tu != tv) {
    const VertexId x = tu ? u : v;
    const VertexId w = tu ? v : u;
    const auto& [lx, rx] = st.ctx.at(x);
    const bool in_left = lx.count(e) != 0;
    const bool in_right = rx.count(e) != 0;
    if (in_left && in_right)
      raise(ErrorKind::InternalInvariantFailure,
            "context sides lost disjointness");
    if (!in_left && !in_right)
      raise(ErrorKind::OracleViolation,
            "answered edge misses both context sides of its tracked "
            "endpoint");
    if (in_left) {
      sides = {edges_away(g, w, x), rx};
      label = "2-L";
    } else {
      sides = {lx, edges_away(g, w, x)};
      label = "2-R";
    }
  } else {
    const auto& [lu, ru] = st.ctx.at(u);
    const auto& [lv, rv] = st.ctx.at(v);
    const bool ul = lu.count(e) != 0, ur = ru.count(e) != 0;
    const bool vl = lv.count(e) != 0, vr = rv.count(e) != 0;
    if ((ul && ur) || (vl && vr))
      raise(ErrorKind::InternalInvariantFailure,
            "context sides lost disjointness");
    if ((!ul && !ur) || (!vl && !vr))
      raise(ErrorKind::OracleViolation,
            "answered edge misses both context sides of a tracked endpoint");
    if (ul && vr) {
      sides = {lv, minus_partner(ru)};
      label = "3-LR";
    } else if (ur && vl) {
      sides = {lu, minus_partner(rv)};
      label = "3-RL";
    } else if (ul && vl) {
      const auto& first = (u < v) ? ru : rv;
      const auto& second = (u < v) ? rv : ru;
      sides = {first, minus_partner(second)};
      label = "3-LL";
    } else {
      const auto& first = (u < v) ? lu : lv;
      const auto& second = (u < v) ? lv : lu;
      sides = {first, minus_partner(second)};
      label = "3-RR";
    }
  }

  std::set<EdgeId> pre_loops;
  for (const auto* side : {&sides.first, &sides.second})
    for (EdgeId f : *side)
      if (g.is_self_loop(f)) pre_loops.insert(f);

  VertexId survivor = g.contract(e);

  // A looped side entry survives only at the closing contraction, and only
  // if it arose there and pairs with the contracted edge into a cycle that
  // is consistent with the pre-contraction context; every other self-loop
  // lies on no cycle of any later state and leaves the sides.
  const bool closing_step = g.order() == 1;
  auto closes = [&](EdgeId f) {
    if (!closing_step || pre_loops.count(f)) return false;
    return cycle_consistent(HamiltonianCycle{{u, v}, {e, f}}, st.ctx);
  };
  for (auto* side : {&sides.first, &sides.second})
    for (auto it = side->begin(); it != side->end();)
      if (g.is_self_loop(*it) && !closes(*it))
        it = side->erase(it);
      else
        ++it;

  st.ctx.erase(u);
  st.ctx.erase(v);
  st.ctx.set(survivor, std::move(sides));
  st.chosen.push_back(e);
  st.step += 1;

  const auto& [left, right] = st.ctx.at(survivor);
  const auto& inc = g.incident(survivor);
  for (EdgeId f : left)
    if (!inc.count(f))
      raise(ErrorKind::InternalInvariantFailure,
            "left side holds a non-incident edge after contraction");
  for (EdgeId f : right)
    if (!inc.count(f) || left.count(f))
      raise(ErrorKind::InternalInvariantFailure,
            "right side broken after contraction");

  if (st.keep_trace) {
    rec.survivor = survivor;
    rec.case_label = label;
    st.trace.push_back(std::move(rec));
  }
}

HamiltonianCycle finalize(HcEngineState& st) {
  const int n = st.n;
  if (st.graph.order() != 1)
    raise(ErrorKind::InternalInvariantFailure,
          "finalize requires a fully contracted graph");
  VertexId z = *st.graph.vertex_set().begin();

  if (n == 1) return HamiltonianCycle{{z}, {}};

  if (!st.ctx.contains(z))
    raise(ErrorKind::InternalInvariantFailure,
          "merged vertex has no context entry");
  const auto& [left, right] = st.ctx.at(z);
  if (left.empty() == right.empty())
    raise(ErrorKind::InternalInvariantFailure,
          "expected exactly one empty context side at the last vertex");
  EdgeId last = left.empty() ? *right.begin() : *left.begin();

  std::vector<EdgeId> all = st.chosen;
  all.push_back(last);
  std::sort(all.begin(), all.end());

  std::map<VertexId, std::vector<std::pair<EdgeId, VertexId>>> adj;
  for (EdgeId f : all) {
    auto [a, b] = st.original.origin(f);
    adj[a].push_back({f, b});
    adj[b].push_back({f, a});
  }
  if (static_cast<int>(adj.size()) != n)
    raise(ErrorKind::InternalInvariantFailure,
          "chosen edges do not span the input");
  for (const auto& [v, lst] : adj)
    if (lst.size() != 2)
      raise(ErrorKind::InternalInvariantFailure,
            "chosen edges are not 2-regular on the input");

  HamiltonianCycle cycle;
  std::set<EdgeId> used;
  std::set<VertexId> visited;
  VertexId start = adj.begin()->first;
  VertexId cur = start;
  cycle.order.push_back(cur);
  visited.insert(cur);
  for (int k = 0; k < n; ++k) {
    const auto& lst = adj.at(cur);
    EdgeId f;
    VertexId next;
    if (!used.count(lst[0].first)) {
      f = lst[0].first;
      next = lst[0].second;
    } else if (!used.count(lst[1].first)) {
      f = lst[1].first;
      next = lst[1].second;
    } else {
      raise(ErrorKind::InternalInvariantFailure,
            "cycle walk ran out of edges");
    }
    used.insert(f);
    cycle.edges.push_back(f);
    cur = next;
    if (k < n - 1) {
      if (!visited.insert(cur).second)
        raise(ErrorKind::InternalInvariantFailure,
              "chosen edges close a short cycle");
      cycle.order.push_back(cur);
    }
  }
  if (cur != start)
    raise(ErrorKind::InternalInvariantFailure,
          "cycle walk did not return to its start");
  return cycle;
}

HcResult complete_hamiltonian_cycle(const MultiGraph& g, HcOracle& oracle,
                                    const HcRunOptions& options) {
  if (g.order() == 0)
    raise(ErrorKind::NoWitness, "the empty graph has no Hamiltonian cycle");

  HcEngineState st = make_hc_state(g);
  st.keep_trace = options.keep_trace;

  for (int step = 1; step <= st.n - 1; ++step) {
    if (options.step_observer) options.step_observer(st);
    EdgeId e = oracle.answer(st.graph, st.ctx);
    if (!st.graph.has_edge(e))
      raise(ErrorKind::OracleViolation,
            "oracle answered edge " + std::to_string(e.value) +
                ", which is not live");
    if (st.graph.is_self_loop(e))
      raise(ErrorKind::OracleViolation,
            "oracle answered a self-loop, which lies on no cycle");
    contract_and_update(st, e);
  }
  if (options.step_observer) options.step_observer(st);

  HcResult out;
  out.oracle_calls = st.step;
  if (out.oracle_calls != st.n - 1)
    raise(ErrorKind::InternalInvariantFailure, "oracle call count != n-1");

  HamiltonianCycle cycle = finalize(st);
  out.final_edge = EdgeId{-1};
  if (st.n >= 2) {
    std::set<EdgeId> from_steps(st.chosen.begin(), st.chosen.end());
    for (EdgeId f : cycle.edges)
      if (!from_steps.count(f)) out.final_edge = f;
  }
  out.cycle = std::move(cycle);
  out.trace = std::move(st.trace);
  if (!validate_hamiltonian_cycle(g, out.cycle))
    raise(ErrorKind::InternalInvariantFailure,
          "completed cycle failed validation");
  return out;
}

}  // namespace p2c
