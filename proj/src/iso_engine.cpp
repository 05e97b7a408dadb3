#include "p2c/iso_engine.hpp"

#include <algorithm>
#include <sstream>

#include "p2c/formats.hpp"

namespace p2c {

namespace {

const std::vector<CliqueRecord> kNoCliques;

std::string fmt_pair(VertexId x, VertexId y) {
  std::ostringstream ss;
  ss << "(" << x << ", " << y << ")";
  return ss.str();
}

}  // namespace

GadgetGraph::GadgetGraph(const SimpleGraph& base) : graph_(base) {
  for (VertexId v : base.vertices()) old_.insert(v);
}

std::vector<VertexId> GadgetGraph::old_neighbors(VertexId v) const {
  std::vector<VertexId> out;
  for (VertexId w : graph_.neighbors(v))
    if (is_old(w)) out.push_back(w);
  return out;
}

const std::vector<CliqueRecord>& GadgetGraph::cliques_at(
    VertexId anchor) const {
  auto it = cliques_.find(anchor);
  return it == cliques_.end() ? kNoCliques : it->second;
}

const CliqueMemberInfo* GadgetGraph::member_info(VertexId v) const {
  auto it = member_of_.find(v);
  return it == member_of_.end() ? nullptr : &it->second;
}

std::optional<VertexId> GadgetGraph::member_at(VertexId anchor, int size,
                                               int ordinal) const {
  for (const CliqueRecord& rec : cliques_at(anchor))
    if (rec.size == size) {
      if (ordinal < 0 || ordinal >= static_cast<int>(rec.members.size()))
        return std::nullopt;
      return rec.members[ordinal];
    }
  return std::nullopt;
}

const CliqueRecord& GadgetGraph::attach_clique(VertexId anchor, int size) {
  if (!is_old(anchor))
    raise(ErrorKind::InternalInvariantFailure,
          "clique anchored at a non-old vertex");
  for (const CliqueRecord& rec : cliques_at(anchor))
    if (rec.size == size)
      raise(ErrorKind::InternalInvariantFailure,
            "duplicate clique size at one anchor");

  CliqueRecord rec;
  rec.anchor = anchor;
  rec.size = size;
  for (int k = 0; k < size - 1; ++k) {
    VertexId m = graph_.fresh_vertex();
    rec.members.push_back(m);
    member_of_[m] = CliqueMemberInfo{anchor, size, k};
    graph_.add_edge(anchor, m);
    for (int p = 0; p < k; ++p) graph_.add_edge(rec.members[p], m);
  }
  auto& vec = cliques_[anchor];
  vec.push_back(std::move(rec));
  return vec.back();
}

std::vector<VertexId> GadgetGraph::delete_old_with_cliques(VertexId v) {
  if (!is_old(v))
    raise(ErrorKind::InternalInvariantFailure,
          "deleting a non-old vertex as old");
  std::vector<VertexId> doomed{v};
  for (const CliqueRecord& rec : cliques_at(v))
    doomed.insert(doomed.end(), rec.members.begin(), rec.members.end());
  std::sort(doomed.begin(), doomed.end());
  for (VertexId d : doomed) {
    graph_.remove_vertex(d);
    member_of_.erase(d);
  }
  old_.erase(v);
  cliques_.erase(v);
  return doomed;
}

bool GadgetGraph::check_invariants(std::string* why) const {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  for (VertexId v : graph_.vertices()) {
    bool o = is_old(v);
    bool m = member_of_.count(v) != 0;
    if (o == m) return fail("vertex is neither old xor clique member");
  }
  for (const auto& [anchor, recs] : cliques_) {
    if (!is_old(anchor)) return fail("anchor not old");
    for (const CliqueRecord& rec : recs) {
      if (static_cast<int>(rec.members.size()) != rec.size - 1)
        return fail("member count != size-1");
      for (std::size_t a = 0; a < rec.members.size(); ++a) {
        VertexId u = rec.members[a];
        if (!graph_.has_edge(anchor, u)) return fail("member not on anchor");
        for (std::size_t b = a + 1; b < rec.members.size(); ++b)
          if (!graph_.has_edge(u, rec.members[b]))
            return fail("members not pairwise adjacent");
        for (VertexId w : graph_.neighbors(u)) {
          if (w == anchor) continue;
          if (is_old(w)) return fail("member adjacent to a second old vertex");
          const CliqueMemberInfo* mi = member_info(w);
          if (!mi || mi->anchor != anchor || mi->size != rec.size)
            return fail("member adjacent to a foreign clique");
        }
      }
    }
  }
  return true;
}

bool PartialIsomorphism::extend(VertexId x, VertexId y, const SimpleGraph& G,
                                const SimpleGraph& H, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (forward_.count(x)) return fail("left vertex already mapped");
  if (used_images_.count(y)) return fail("right vertex already used");
  for (const auto& [px, py] : pairs_) {
    if (G.has_edge(x, px) != H.has_edge(y, py))
      return fail("adjacency disagreement with pair " + fmt_pair(px, py));
  }
  pairs_.emplace_back(x, y);
  forward_[x] = y;
  used_images_.insert(y);
  return true;
}

Isomorphism PartialIsomorphism::as_map() const {
  Isomorphism out;
  for (const auto& [x, y] : pairs_) out[x] = y;
  return out;
}

const char* to_string(IsoCase c) {
  switch (c) {
    case IsoCase::OldOld:
      return "old-old";
    case IsoCase::OldNew:
      return "old-new";
    case IsoCase::NewAny:
      return "new-any";
  }
  return "?";
}

IsoEngineState make_iso_state(const SimpleGraph& G, const SimpleGraph& H) {
  IsoEngineState st;
  st.G = G;
  st.H = H;
  st.gG = GadgetGraph(G);
  st.gH = GadgetGraph(H);
  st.n = G.order();
  st.i = st.n;
  return st;
}

namespace {

// A resolved vertex that was answered through a clique must sit in an
// isolated clique component: no old neighbors and exactly one attached
// clique of the stated size. This is forced by the oracle contract (degrees
// and neighborhoods must match across the claimed isomorphism), so failing
// it is a violation, not a legal corner case.
void require_isolated_component(const GadgetGraph& g, VertexId anchor,
                                int size, const char* side,
                                const char* role) {
  std::ostringstream ss;
  if (!g.old_neighbors(anchor).empty()) {
    ss << role << " " << anchor << " on side " << side
       << " still has old neighbors";
    raise(ErrorKind::OracleViolation, ss.str());
  }
  const auto& recs = g.cliques_at(anchor);
  if (recs.size() != 1) {
    ss << role << " " << anchor << " on side " << side << " anchors "
       << recs.size() << " cliques, expected exactly 1";
    raise(ErrorKind::OracleViolation, ss.str());
  }
  if (recs[0].size != size) {
    ss << role << " " << anchor << " on side " << side << " anchors a clique"
       << " of size " << recs[0].size << ", expected " << size;
    raise(ErrorKind::OracleViolation, ss.str());
  }
}

}  // namespace

ResolvedPair resolve_answer(const IsoEngineState& st, VertexId x, VertexId y) {
  if (!st.gG.graph().has_vertex(x))
    raise(ErrorKind::OracleViolation,
          "answer names a vertex not in the current G-side graph");
  if (!st.gH.graph().has_vertex(y))
    raise(ErrorKind::OracleViolation,
          "answer names a vertex not in the current H-side graph");

  const bool x_old = st.gG.is_old(x);
  const bool y_old = st.gH.is_old(y);

  if (x_old && y_old) return {IsoCase::OldOld, x, y};

  if (x_old) {
    // y is a clique member; both sides must be isolated components of the
    // same clique size.
    const CliqueMemberInfo* my = st.gH.member_info(y);
    require_isolated_component(st.gH, my->anchor, my->size, "H", "anchor");
    require_isolated_component(st.gG, x, my->size, "G", "matched old vertex");
    return {IsoCase::OldNew, x, my->anchor};
  }

  const CliqueMemberInfo* mx = st.gG.member_info(x);
  if (y_old) {
    require_isolated_component(st.gG, mx->anchor, mx->size, "G", "anchor");
    require_isolated_component(st.gH, y, mx->size, "H", "matched old vertex");
    return {IsoCase::NewAny, mx->anchor, y};
  }

  const CliqueMemberInfo* my = st.gH.member_info(y);
  if (mx->size != my->size) {
    std::ostringstream ss;
    ss << "clique sizes disagree: " << mx->size << " on G vs " << my->size
       << " on H";
    raise(ErrorKind::OracleViolation, ss.str());
  }
  return {IsoCase::NewAny, mx->anchor, my->anchor};
}

namespace {

long long clique_edge_count(int size) {
  // anchor-member edges plus member-member edges of a size-clique
  long long m = size - 1;
  return m + m * (m - 1) / 2;
}

void reduce_side(GadgetGraph& g, VertexId v, int i,
                 std::vector<CliqueAdded>& added, std::vector<VertexId>& gone,
                 IsoInstrumentation& stats) {
  std::vector<VertexId> anchors = g.old_neighbors(v);

  long long edges_before = g.graph().size();
  gone = g.delete_old_with_cliques(v);
  stats.vertices_deleted += static_cast<long long>(gone.size());
  stats.edges_deleted += edges_before - g.graph().size();

  for (VertexId a : anchors) {
    g.attach_clique(a, i);
    added.push_back({a, i});
    stats.vertices_created += i - 1;
    stats.edges_created += clique_edge_count(i);
  }
}

}  // namespace

void reduce_pair(IsoEngineState& st, const ResolvedPair& rp,
                 std::pair<VertexId, VertexId> raw_answer) {
  IsoLoopRecord rec;
  rec.loop = st.loop + 1;
  rec.i = st.i;
  rec.answer = raw_answer;
  rec.case_label = to_string(rp.tag);
  rec.resolved = {rp.x, rp.y};
  if (st.keep_trace) {
    rec.g_graph6 = write_graph6(st.gG.graph());
    rec.h_graph6 = write_graph6(st.gH.graph());
  }

  std::string why;
  if (!st.phi.extend(rp.x, rp.y, st.G, st.H, &why))
    raise(ErrorKind::OracleViolation,
          "resolved pair " + fmt_pair(rp.x, rp.y) +
              " is incompatible with the partial map: " + why);

  reduce_side(st.gG, rp.x, st.i, rec.cliques_added_g, rec.deleted_g, st.stats);
  reduce_side(st.gH, rp.y, st.i, rec.cliques_added_h, rec.deleted_h, st.stats);

  // Loop-level bounds: at most n-1 fresh cliques per side, clique size
  // between n and 2n-1, gadget order within the quadratic envelope.
  const int n = st.n;
  if (static_cast<int>(rec.cliques_added_g.size() +
                       rec.cliques_added_h.size()) > 2 * (n - 1))
    raise(ErrorKind::InternalInvariantFailure, "too many cliques in one loop");
  if (st.i < n || st.i > 2 * n - 1)
    raise(ErrorKind::InternalInvariantFailure,
          "clique size counter out of range");

  st.i += 1;
  st.loop += 1;
  if (st.keep_trace) st.trace.push_back(std::move(rec));
}

IsoResult complete_isomorphism(const SimpleGraph& G, const SimpleGraph& H,
                               IsoOracle& oracle,
                               const IsoRunOptions& options) {
  IsoEngineState st = make_iso_state(G, H);
  st.keep_trace = options.keep_trace;
  const int n = st.n;
  const int order_bound = n + (n - 1) * (2 * n - 2);

  while (!st.gG.graph().empty() || !st.gH.graph().empty()) {
    if (st.loop >= n)
      raise(ErrorKind::InternalInvariantFailure,
            "reduction did not terminate after n loops");
    if (st.gG.graph().order() > order_bound ||
        st.gH.graph().order() > order_bound)
      raise(ErrorKind::InternalInvariantFailure,
            "gadget graph exceeded its order bound");
    st.stats.max_gadget_order =
        std::max({st.stats.max_gadget_order, st.gG.graph().order(),
                  st.gH.graph().order()});

    if (options.loop_observer) options.loop_observer(st);

    auto [x, y] = oracle.answer(st.gG, st.gH);
    st.stats.oracle_calls += 1;
    ResolvedPair rp = resolve_answer(st, x, y);
    reduce_pair(st, rp, {x, y});
  }

  if (st.loop != n || st.phi.size() != n)
    raise(ErrorKind::InternalInvariantFailure,
          "loop count or mapping size diverged from n");
  if (st.stats.oracle_calls != n)
    raise(ErrorKind::InternalInvariantFailure, "oracle call count != n");

  IsoResult out;
  out.phi = st.phi.as_map();
  out.trace = std::move(st.trace);
  out.stats = st.stats;
  if (!validate_isomorphism(G, H, out.phi))
    raise(ErrorKind::InternalInvariantFailure,
          "completed mapping failed validation");
  return out;
}

}  // namespace p2c
