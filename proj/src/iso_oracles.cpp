#include "p2c/iso_oracles.hpp"

#include <algorithm>
#include <array>

namespace p2c {

SimpleGraph relabeled(const SimpleGraph& g, const Isomorphism& phi) {
  SimpleGraph out;
  std::vector<VertexId> images;
  for (VertexId v : g.vertices()) images.push_back(phi.at(v));
  std::sort(images.begin(), images.end());
  for (VertexId v : images) out.add_vertex(v);
  for (auto [u, v] : g.edges()) out.add_edge(phi.at(u), phi.at(v));
  return out;
}

namespace {

struct Prep {
  int n = 0;
  std::vector<VertexId> gv, hv;          // ascending vertex ids
  std::vector<std::vector<char>> ag, ah; // adjacency over indices
  std::vector<std::vector<int>> cand;    // signature-compatible h-indices
};

// Degree plus sorted neighbor degrees; equal signatures are necessary for a
// vertex pairing, and on gadget graphs the filter separates clique members
// of different sizes, which is where the search space lives.
std::vector<std::vector<int>> signatures(
    const SimpleGraph& g, const std::vector<VertexId>& verts) {
  std::vector<std::vector<int>> sig(verts.size());
  std::map<VertexId, int> deg;
  for (VertexId v : verts) deg[v] = g.degree(v);
  for (std::size_t k = 0; k < verts.size(); ++k) {
    auto& s = sig[k];
    s.push_back(deg[verts[k]]);
    for (VertexId w : g.neighbors(verts[k])) s.push_back(deg[w]);
    std::sort(s.begin() + 1, s.end());
  }
  return sig;
}

// False when the pair is trivially non-isomorphic. Raises on guard breach.
bool build_prep(const SimpleGraph& g, const SimpleGraph& h, int guard,
                Prep& prep) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  if (g.order() > guard)
    raise(ErrorKind::InstanceTooLarge,
          "isomorphism enumeration guard exceeded: " +
              std::to_string(g.order()) + " > " + std::to_string(guard));

  prep.n = g.order();
  prep.gv = g.vertices();
  prep.hv = h.vertices();
  const int n = prep.n;

  std::map<VertexId, int> gi, hi;
  for (int k = 0; k < n; ++k) gi[prep.gv[k]] = k;
  for (int k = 0; k < n; ++k) hi[prep.hv[k]] = k;

  prep.ag.assign(n, std::vector<char>(n, 0));
  prep.ah.assign(n, std::vector<char>(n, 0));
  for (auto [u, v] : g.edges())
    prep.ag[gi[u]][gi[v]] = prep.ag[gi[v]][gi[u]] = 1;
  for (auto [u, v] : h.edges())
    prep.ah[hi[u]][hi[v]] = prep.ah[hi[v]][hi[u]] = 1;

  auto sg = signatures(g, prep.gv);
  auto sh = signatures(h, prep.hv);

  prep.cand.assign(n, {});
  for (int k = 0; k < n; ++k) {
    for (int c = 0; c < n; ++c)
      if (sg[k] == sh[c]) prep.cand[k].push_back(c);
    if (prep.cand[k].empty()) return false;
  }
  return true;
}

// Depth-first image assignment over ascending domain indices; with the
// candidate lists in ascending order the first complete image is the
// lexicographically least one and the emission order is lexicographic.
bool dfs(const Prep& prep, std::vector<int>& img, std::vector<char>& used,
         int k, const std::function<bool(const std::vector<int>&)>& emit) {
  if (k == prep.n) return emit(img);
  for (int c : prep.cand[k]) {
    if (used[c]) continue;
    bool ok = true;
    for (int j = 0; j < k; ++j)
      if (prep.ag[k][j] != prep.ah[c][img[j]]) {
        ok = false;
        break;
      }
    if (!ok) continue;
    img[k] = c;
    used[c] = 1;
    bool keep_going = dfs(prep, img, used, k + 1, emit);
    used[c] = 0;
    if (!keep_going) return false;
  }
  return true;
}

void stream_isomorphisms(const SimpleGraph& g, const SimpleGraph& h, int guard,
                         std::mt19937* shuffle_rng,
                         const std::function<bool(const Prep&,
                                                  const std::vector<int>&)>& cb) {
  Prep prep;
  if (!build_prep(g, h, guard, prep)) return;
  if (shuffle_rng)
    for (auto& lst : prep.cand)
      std::shuffle(lst.begin(), lst.end(), *shuffle_rng);
  std::vector<int> img(prep.n, -1);
  std::vector<char> used(prep.n, 0);
  dfs(prep, img, used, 0,
      [&](const std::vector<int>& im) { return cb(prep, im); });
}

Isomorphism to_map(const Prep& prep, const std::vector<int>& img) {
  Isomorphism out;
  for (int k = 0; k < prep.n; ++k) out[prep.gv[k]] = prep.hv[img[k]];
  return out;
}

}  // namespace

std::vector<Isomorphism> enumerate_isomorphisms(const SimpleGraph& g,
                                                const SimpleGraph& h,
                                                int guard) {
  std::vector<Isomorphism> out;
  stream_isomorphisms(g, h, guard, nullptr,
                      [&](const Prep& prep, const std::vector<int>& img) {
                        out.push_back(to_map(prep, img));
                        return true;
                      });
  return out;
}

void for_each_isomorphism(const SimpleGraph& g, const SimpleGraph& h,
                          int guard,
                          const std::function<bool(const Isomorphism&)>& cb) {
  stream_isomorphisms(g, h, guard, nullptr,
                      [&](const Prep& prep, const std::vector<int>& img) {
                        return cb(to_map(prep, img));
                      });
}

std::optional<Isomorphism> first_isomorphism(const SimpleGraph& g,
                                             const SimpleGraph& h, int guard) {
  std::optional<Isomorphism> out;
  stream_isomorphisms(g, h, guard, nullptr,
                      [&](const Prep& prep, const std::vector<int>& img) {
                        out = to_map(prep, img);
                        return false;
                      });
  return out;
}

const char* to_string(IsoPolicyKind k) {
  switch (k) {
    case IsoPolicyKind::HonestLex:
      return "honest";
    case IsoPolicyKind::AdversarialMinFreedom:
      return "adversarial";
    case IsoPolicyKind::SeededRandom:
      return "random";
    case IsoPolicyKind::Planted:
      return "planted";
  }
  return "?";
}

PolicyIsoOracle::PolicyIsoOracle(IsoOraclePolicy policy)
    : policy_(std::move(policy)), rng_(policy_.seed) {}

std::pair<VertexId, VertexId> PolicyIsoOracle::answer(const GadgetGraph& gG,
                                                      const GadgetGraph& gH) {
  const SimpleGraph& g = gG.graph();
  const SimpleGraph& h = gH.graph();

  switch (policy_.kind) {
    case IsoPolicyKind::HonestLex: {
      auto iso = first_isomorphism(g, h, policy_.guard);
      if (!iso)
        raise(ErrorKind::NotIsomorphic,
              "honest oracle found no isomorphism between the query graphs");
      return *iso->begin();
    }

    case IsoPolicyKind::AdversarialMinFreedom: {
      // Freedom of a pair = number of isomorphisms containing it. Answering
      // a minimum-freedom pair pins the completion down as hard as the
      // contract allows. Ties prefer answers naming auxiliary vertices (the
      // awkward resolution paths), then fall to a seeded pick.
      const int n = g.order();
      std::vector<VertexId> gvs = g.vertices(), hvs = h.vertices();
      std::vector<long long> counts(
          static_cast<std::size_t>(n) * std::max(n, 1), 0);
      bool any = false;
      stream_isomorphisms(g, h, policy_.guard, nullptr,
                          [&](const Prep&, const std::vector<int>& img) {
                            any = true;
                            for (int k = 0; k < n; ++k)
                              counts[static_cast<std::size_t>(k) * n +
                                     img[k]] += 1;
                            return true;
                          });
      if (!any)
        raise(ErrorKind::NotIsomorphic,
              "adversarial oracle found no isomorphism between the query "
              "graphs");

      long long best_count = -1;
      int best_newness = -1;
      std::vector<std::pair<int, int>> ties;
      for (int k = 0; k < n; ++k)
        for (int c = 0; c < n; ++c) {
          long long cnt = counts[static_cast<std::size_t>(k) * n + c];
          if (cnt == 0) continue;
          int newness = (gG.is_old(gvs[k]) ? 0 : 1) +
                        (gH.is_old(hvs[c]) ? 0 : 1);
          if (best_count < 0 || cnt < best_count ||
              (cnt == best_count && newness > best_newness)) {
            best_count = cnt;
            best_newness = newness;
            ties.clear();
          }
          if (cnt == best_count && newness == best_newness)
            ties.emplace_back(k, c);
        }
      std::uniform_int_distribution<std::size_t> pick(0, ties.size() - 1);
      auto [k, c] = ties[pick(rng_)];
      return {gvs[k], hvs[c]};
    }

    case IsoPolicyKind::SeededRandom: {
      // A uniformly random member of a randomly discovered isomorphism:
      // candidate orders are shuffled once per query, the first complete
      // image under that order is taken, and one of its pairs is drawn.
      std::optional<std::pair<VertexId, VertexId>> out;
      stream_isomorphisms(
          g, h, policy_.guard, &rng_,
          [&](const Prep& prep, const std::vector<int>& img) {
            std::uniform_int_distribution<int> pick(0, prep.n - 1);
            int k = pick(rng_);
            out = {prep.gv[k], prep.hv[img[k]]};
            return false;
          });
      if (!out)
        raise(ErrorKind::NotIsomorphic,
              "random oracle found no isomorphism between the query graphs");
      return *out;
    }

    case IsoPolicyKind::Planted:
      return answer_planted(gG, gH);
  }
  raise(ErrorKind::InternalInvariantFailure, "unknown oracle policy");
}

std::optional<VertexId> planted_extension_image(const GadgetGraph& gG,
                                                const GadgetGraph& gH,
                                                const Isomorphism& planted,
                                                VertexId x) {
  if (gG.is_old(x)) {
    auto it = planted.find(x);
    if (it == planted.end()) return std::nullopt;
    VertexId y = it->second;
    if (!gH.graph().has_vertex(y) || !gH.is_old(y)) return std::nullopt;
    return y;
  }
  const CliqueMemberInfo* mi = gG.member_info(x);
  if (!mi) return std::nullopt;
  auto anchor_it = planted.find(mi->anchor);
  if (anchor_it == planted.end()) return std::nullopt;
  return gH.member_at(anchor_it->second, mi->size, mi->ordinal);
}

std::pair<VertexId, VertexId> PolicyIsoOracle::answer_planted(
    const GadgetGraph& gG, const GadgetGraph& gH) {
  if (first_call_) {
    // The run starts on the original pair, so the planted map can be
    // checked outright once.
    if (!validate_isomorphism(gG.graph(), gH.graph(), policy_.planted))
      raise(ErrorKind::PlantedViolation,
            "planted map is not an isomorphism of the query graphs");
    first_call_ = false;
  }

  if (gG.graph().empty())
    raise(ErrorKind::PlantedViolation, "planted oracle queried on an empty "
                                       "graph");
  VertexId x = gG.graph().vertices().front();
  auto y = planted_extension_image(gG, gH, policy_.planted, x);
  if (!y)
    raise(ErrorKind::PlantedViolation,
          "planted map has no image for live vertex " +
              std::to_string(x.value));
  return {x, *y};
}

Example1Fixture find_example1_fixture() {
  static const std::array<std::pair<int, int>, 10> kPairs{{{1, 2},
                                                           {1, 3},
                                                           {1, 4},
                                                           {1, 5},
                                                           {2, 3},
                                                           {2, 4},
                                                           {2, 5},
                                                           {3, 4},
                                                           {3, 5},
                                                           {4, 5}}};
  Isomorphism phi1{{VertexId{1}, VertexId{1}},
                   {VertexId{2}, VertexId{5}},
                   {VertexId{3}, VertexId{4}},
                   {VertexId{4}, VertexId{3}},
                   {VertexId{5}, VertexId{2}}};
  Isomorphism phi2{{VertexId{1}, VertexId{5}},
                   {VertexId{2}, VertexId{1}},
                   {VertexId{3}, VertexId{4}},
                   {VertexId{4}, VertexId{3}},
                   {VertexId{5}, VertexId{2}}};

  for (int mask = 0; mask < (1 << 10); ++mask) {
    SimpleGraph G(5);
    for (int b = 0; b < 10; ++b)
      if ((mask >> b) & 1)
        G.add_edge(VertexId{kPairs[b].first}, VertexId{kPairs[b].second});
    SimpleGraph H = relabeled(G, phi1);

    auto isos = enumerate_isomorphisms(G, H);
    if (isos.size() != 2 || isos[0] != phi1 || isos[1] != phi2) continue;

    SimpleGraph Gd = G, Hd = H;
    Gd.remove_vertex(VertexId{5});
    Hd.remove_vertex(VertexId{2});
    auto sub = enumerate_isomorphisms(Gd, Hd);
    int compatible = 0;
    for (const Isomorphism& psi : sub) {
      Isomorphism full = psi;
      full[VertexId{5}] = VertexId{2};
      if (validate_isomorphism(G, H, full)) ++compatible;
    }
    if (static_cast<int>(sub.size()) != 6 || compatible != 2) continue;

    Example1Fixture fx;
    fx.G = std::move(G);
    fx.H = std::move(H);
    fx.phi1 = std::move(phi1);
    fx.phi2 = std::move(phi2);
    fx.naive_iso_count = static_cast<int>(sub.size());
    fx.naive_compatible_count = compatible;
    return fx;
  }
  raise(ErrorKind::FixtureNotFound,
        "no 5-vertex pair realizes the two-isomorphism demonstration");
}

}  // namespace p2c
