#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>
#include <vector>

#include "doctest.h"
#include "p2c/hc_engine.hpp"
#include "p2c/hc_oracles.hpp"
#include "support/checks.hpp"
#include "support/corpus.hpp"

using namespace p2c;
using p2c::testing::raised;

namespace {

MultiGraph from_edges(int n, const corpus::EdgeList& edges) {
  return corpus::multigraph_from_edges(n, edges);
}

struct ScriptHcOracle : HcOracle {
  std::vector<EdgeId> script;
  std::size_t next = 0;

  explicit ScriptHcOracle(std::vector<int> ids) {
    for (int e : ids) script.push_back(EdgeId{e});
  }

  EdgeId answer(const MultiGraph&, const LeftRightContext&) override {
    REQUIRE(next < script.size());
    return script[next++];
  }
};

LeftRightContext::Sides sides(std::vector<int> left, std::vector<int> right) {
  LeftRightContext::Sides s;
  for (int e : left) s.first.insert(EdgeId{e});
  for (int e : right) s.second.insert(EdgeId{e});
  return s;
}

// Four vertices, a contractible edge 0 = {1,2}, and one private edge from
// each endpoint to each of two outside vertices. Room to populate both
// context sides non-trivially.
MultiGraph cross_graph() {
  return from_edges(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
}

}  // namespace

TEST_CASE("context lookup, domain and well-formedness") {
  MultiGraph g = from_edges(3, {{1, 2}, {2, 3}, {1, 3}});
  LeftRightContext ctx;
  CHECK_FALSE(ctx.contains(VertexId{1}));
  CHECK(raised([&] { ctx.at(VertexId{1}); }) ==
        ErrorKind::InternalInvariantFailure);

  ctx.set(VertexId{1}, sides({0}, {2}));
  CHECK(ctx.contains(VertexId{1}));
  CHECK(ctx.size() == 1);
  CHECK(ctx.domain() == std::vector<VertexId>{VertexId{1}});
  CHECK(ctx.at(VertexId{1}).first == std::set<EdgeId>{EdgeId{0}});

  std::string why;
  CHECK(ctx.well_formed(g, &why));

  SUBCASE("a non-incident edge breaks either side") {
    ctx.set(VertexId{1}, sides({1}, {2}));  // edge 1 joins 2 and 3
    CHECK_FALSE(ctx.well_formed(g, &why));
    CHECK(why == "left side holds a non-incident edge");
    ctx.set(VertexId{1}, sides({0}, {1}));
    CHECK_FALSE(ctx.well_formed(g, &why));
    CHECK(why == "right side holds a non-incident edge");
  }
  SUBCASE("overlapping sides are rejected") {
    ctx.set(VertexId{1}, sides({0, 2}, {2}));
    CHECK_FALSE(ctx.well_formed(g, &why));
    CHECK(why == "sides are not disjoint");
  }
  SUBCASE("a dead tracked vertex is rejected") {
    ctx.set(VertexId{9}, sides({}, {}));
    CHECK_FALSE(ctx.well_formed(g, &why));
    CHECK(why == "tracked vertex is not live");
  }
}

TEST_CASE("cycle_consistent counts one cycle edge per side") {
  MultiGraph g = from_edges(3, {{1, 2}, {2, 3}, {1, 3}});
  HamiltonianCycle c{{VertexId{1}, VertexId{2}, VertexId{3}},
                     {EdgeId{0}, EdgeId{1}, EdgeId{2}}};
  LeftRightContext ctx;
  CHECK(cycle_consistent(c, ctx));  // empty context constrains nothing

  ctx.set(VertexId{1}, sides({0}, {2}));
  CHECK(cycle_consistent(c, ctx));
  ctx.set(VertexId{1}, sides({0, 2}, {1}));
  CHECK_FALSE(cycle_consistent(c, ctx));  // two cycle edges on the left
  ctx.set(VertexId{1}, sides({0}, {}));
  CHECK_FALSE(cycle_consistent(c, ctx));  // empty side can never hit one
}

TEST_CASE("contracting with both endpoints untracked starts a context entry") {
  MultiGraph g = from_edges(3, {{1, 2}, {2, 3}, {3, 1}});
  HcEngineState st = make_hc_state(g);
  contract_and_update(st, EdgeId{0});

  CHECK(st.graph.order() == 2);
  CHECK(st.ctx.size() == 1);
  // Left: what else was incident to 1. Right: edges of 2 pointing away from 1.
  CHECK(st.ctx.at(VertexId{1}) == sides({2}, {1}));
  CHECK(st.step == 1);
  CHECK(st.chosen == std::vector<EdgeId>{EdgeId{0}});

  REQUIRE(st.trace.size() == 1);
  const HcStepRecord& rec = st.trace[0];
  CHECK(rec.step == 1);
  CHECK(rec.case_label == "1");
  CHECK(rec.answer == EdgeId{0});
  CHECK(rec.merged_u == VertexId{1});
  CHECK(rec.merged_v == VertexId{2});
  CHECK(rec.survivor == VertexId{1});
  CHECK(rec.query_edges.size() == 3);
  CHECK(rec.query_ctx.empty());

  // The second record snapshots the contracted graph and the live context.
  contract_and_update(st, EdgeId{1});
  const HcStepRecord& rec2 = st.trace[1];
  CHECK(rec2.query_edges.size() == 2);
  CHECK(rec2.query_edges[0].first == EdgeId{1});
  CHECK(rec2.query_edges[0].second ==
        std::pair<VertexId, VertexId>{VertexId{1}, VertexId{3}});
  REQUIRE(rec2.query_ctx.count(VertexId{1}) == 1);
  CHECK(rec2.query_ctx.at(VertexId{1}).first == std::vector<EdgeId>{EdgeId{2}});
  CHECK(rec2.query_ctx.at(VertexId{1}).second ==
        std::vector<EdgeId>{EdgeId{1}});
}

TEST_CASE("parallel copies of the contracted edge stay on the left side") {
  MultiGraph g = from_edges(2, {{1, 2}, {1, 2}, {1, 2}});
  HcEngineState st = make_hc_state(g);
  contract_and_update(st, EdgeId{0});
  // Copies 1 and 2 are now self-loops at the survivor. This was the closing
  // contraction, so they stay put as closing candidates; nothing points away
  // from the absorbed endpoint.
  CHECK(st.ctx.at(VertexId{1}) == sides({1, 2}, {}));
  CHECK(st.graph.is_self_loop(EdgeId{1}));
  CHECK(st.graph.is_self_loop(EdgeId{2}));
}

TEST_CASE("contracting with one tracked endpoint replaces the side holding "
          "the edge") {
  MultiGraph g = from_edges(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}});

  SUBCASE("edge sits on the right side") {
    HcEngineState st = make_hc_state(g);
    contract_and_update(st, EdgeId{0});
    REQUIRE(st.ctx.at(VertexId{1}) == sides({3}, {1}));
    contract_and_update(st, EdgeId{1});
    CHECK(st.trace.back().case_label == "2-R");
    // Left carries over; right becomes 3's edges away from the merged vertex.
    CHECK(st.ctx.at(VertexId{1}) == sides({3}, {2}));
    CHECK(st.ctx.size() == 1);
  }
  SUBCASE("edge sits on the left side") {
    HcEngineState st = make_hc_state(g);
    contract_and_update(st, EdgeId{0});
    contract_and_update(st, EdgeId{3});
    CHECK(st.trace.back().case_label == "2-L");
    CHECK(st.ctx.at(VertexId{1}) == sides({2}, {1}));
  }
  SUBCASE("edge in neither side of the tracked endpoint is a violation") {
    HcEngineState st = make_hc_state(g);
    contract_and_update(st, EdgeId{0});
    st.ctx.set(VertexId{1}, sides({3}, {2}));  // edge 1 now in neither side
    CHECK(raised([&] { contract_and_update(st, EdgeId{1}); }) ==
          ErrorKind::OracleViolation);
  }
  SUBCASE("edge in both sides reports lost disjointness") {
    HcEngineState st = make_hc_state(g);
    contract_and_update(st, EdgeId{0});
    st.ctx.set(VertexId{1}, sides({1, 3}, {1}));
    CHECK(raised([&] { contract_and_update(st, EdgeId{1}); }) ==
          ErrorKind::InternalInvariantFailure);
  }
}

TEST_CASE("contracting with both endpoints tracked merges their free sides") {
  SUBCASE("left of one, right of the other") {
    MultiGraph g = cross_graph();
    HcEngineState st = make_hc_state(g);
    st.ctx.set(VertexId{1}, sides({0, 1}, {2}));
    st.ctx.set(VertexId{2}, sides({3}, {0, 4}));
    contract_and_update(st, EdgeId{0});
    CHECK(st.trace.back().case_label == "3-LR");
    // v's left survives into the left slot; u's right sheds joining edges.
    CHECK(st.ctx.at(VertexId{1}) == sides({3}, {2}));
    CHECK(st.ctx.size() == 1);
  }
  SUBCASE("right of one, left of the other") {
    MultiGraph g = cross_graph();
    HcEngineState st = make_hc_state(g);
    st.ctx.set(VertexId{1}, sides({1}, {0, 2}));
    st.ctx.set(VertexId{2}, sides({0, 3}, {4}));
    contract_and_update(st, EdgeId{0});
    CHECK(st.trace.back().case_label == "3-RL");
    CHECK(st.ctx.at(VertexId{1}) == sides({1}, {4}));
  }
  SUBCASE("left of both slots the surviving rights by donor id") {
    MultiGraph g = cross_graph();
    HcEngineState st = make_hc_state(g);
    st.ctx.set(VertexId{1}, sides({0, 1}, {2}));
    st.ctx.set(VertexId{2}, sides({0, 3}, {4}));
    contract_and_update(st, EdgeId{0});
    CHECK(st.trace.back().case_label == "3-LL");
    CHECK(st.ctx.at(VertexId{1}) == sides({2}, {4}));
  }
  SUBCASE("right of both slots the surviving lefts by donor id") {
    MultiGraph g = cross_graph();
    HcEngineState st = make_hc_state(g);
    st.ctx.set(VertexId{1}, sides({1}, {0, 2}));
    st.ctx.set(VertexId{2}, sides({3}, {0, 4}));
    contract_and_update(st, EdgeId{0});
    CHECK(st.trace.back().case_label == "3-RR");
    CHECK(st.ctx.at(VertexId{1}) == sides({1}, {3}));
  }
  SUBCASE("parallel copies of the contracted pair drop out of both slots") {
    // Two copies join 1 and 2. The side slotted right sheds every edge
    // joining the merged pair outright; the side slotted left receives the
    // second copy but sheds it again once it turns into a self-loop, since
    // a vertex still remains to be absorbed.
    MultiGraph g = from_edges(3, {{1, 2}, {1, 2}, {1, 3}, {2, 3}});
    HcEngineState st = make_hc_state(g);
    st.ctx.set(VertexId{1}, sides({0, 2}, {1}));
    st.ctx.set(VertexId{2}, sides({0, 3}, {1}));
    contract_and_update(st, EdgeId{0});
    CHECK(st.trace.back().case_label == "3-LL");
    CHECK(st.ctx.at(VertexId{1}) == sides({}, {}));
    CHECK(st.graph.is_self_loop(EdgeId{1}));
  }
  SUBCASE("edge missing from both sides of one endpoint is a violation") {
    MultiGraph g = cross_graph();
    HcEngineState st = make_hc_state(g);
    st.ctx.set(VertexId{1}, sides({0, 1}, {2}));
    st.ctx.set(VertexId{2}, sides({3}, {4}));
    CHECK(raised([&] { contract_and_update(st, EdgeId{0}); }) ==
          ErrorKind::OracleViolation);
  }
}

TEST_CASE("contract_and_update refuses dead edges and self-loops outright") {
  MultiGraph g = from_edges(3, {{1, 2}, {2, 3}, {3, 1}});
  g.add_vertex(VertexId{4});
  EdgeId loop = g.add_edge(VertexId{4}, VertexId{4});
  HcEngineState st = make_hc_state(g);
  CHECK(raised([&] { contract_and_update(st, EdgeId{99}); }) ==
        ErrorKind::ContractionError);
  CHECK(raised([&] { contract_and_update(st, loop); }) ==
        ErrorKind::ContractionError);
}

TEST_CASE("the engine rejects dead-edge and self-loop answers as violations") {
  SUBCASE("dead edge") {
    MultiGraph g = from_edges(3, {{1, 2}, {2, 3}, {3, 1}});
    ScriptHcOracle oracle({99});
    CHECK(raised([&] { complete_hamiltonian_cycle(g, oracle); }) ==
          ErrorKind::OracleViolation);
  }
  SUBCASE("self-loop") {
    MultiGraph g = from_edges(3, {{1, 2}, {2, 3}, {3, 1}});
    EdgeId loop = g.add_edge(VertexId{1}, VertexId{1});
    ScriptHcOracle oracle({loop.value});
    CHECK(raised([&] { complete_hamiltonian_cycle(g, oracle); }) ==
          ErrorKind::OracleViolation);
  }
}

TEST_CASE("a full scripted run reconstructs the square") {
  MultiGraph g = from_edges(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}});
  // Two far-apart contractions first, so the third merge finds both
  // endpoints tracked and must shed the parallel partner edge.
  ScriptHcOracle oracle({0, 2, 1});
  HcResult res = complete_hamiltonian_cycle(g, oracle);

  REQUIRE(res.trace.size() == 3);
  CHECK(res.trace[0].case_label == "1");
  CHECK(res.trace[1].case_label == "1");
  CHECK(res.trace[2].case_label == "3-RL");
  CHECK(res.oracle_calls == 3);
  CHECK(res.final_edge == EdgeId{3});
  CHECK(res.cycle.order == std::vector<VertexId>{VertexId{1}, VertexId{2},
                                                 VertexId{3}, VertexId{4}});
  CHECK(res.cycle.edges == std::vector<EdgeId>{EdgeId{0}, EdgeId{1}, EdgeId{2},
                                               EdgeId{3}});
  CHECK(validate_hamiltonian_cycle(g, res.cycle));
}

TEST_CASE("a two-vertex multigraph closes through the remaining parallel") {
  MultiGraph g = from_edges(2, {{1, 2}, {1, 2}});
  ScriptHcOracle oracle({0});
  HcResult res = complete_hamiltonian_cycle(g, oracle);
  CHECK(res.final_edge == EdgeId{1});
  CHECK(res.cycle.edges == std::vector<EdgeId>{EdgeId{0}, EdgeId{1}});
  CHECK(validate_hamiltonian_cycle(g, res.cycle));
}

TEST_CASE("single-vertex inputs complete without any oracle call") {
  SUBCASE("bare vertex") {
    MultiGraph g(1);
    ScriptHcOracle oracle({});
    HcResult res = complete_hamiltonian_cycle(g, oracle);
    CHECK(res.oracle_calls == 0);
    CHECK(res.cycle.order == std::vector<VertexId>{VertexId{1}});
    CHECK(res.cycle.edges.empty());
    CHECK(res.final_edge == EdgeId{-1});
    CHECK(validate_hamiltonian_cycle(g, res.cycle));
  }
  SUBCASE("vertex with a self-loop") {
    MultiGraph g(1);
    g.add_edge(VertexId{1}, VertexId{1});
    ScriptHcOracle oracle({});
    HcResult res = complete_hamiltonian_cycle(g, oracle);
    CHECK(res.oracle_calls == 0);
    CHECK(validate_hamiltonian_cycle(g, res.cycle));
  }
}

TEST_CASE("the empty graph has no witness") {
  MultiGraph g;
  ScriptHcOracle oracle({});
  CHECK(raised([&] { complete_hamiltonian_cycle(g, oracle); }) ==
        ErrorKind::NoWitness);
}

TEST_CASE("finalize demands one vertex and one nonempty side") {
  MultiGraph g = from_edges(2, {{1, 2}, {1, 2}});

  SUBCASE("graph not fully contracted") {
    HcEngineState st = make_hc_state(g);
    CHECK(raised([&] { finalize(st); }) ==
          ErrorKind::InternalInvariantFailure);
  }
  SUBCASE("merged vertex lost its context entry") {
    HcEngineState st = make_hc_state(g);
    contract_and_update(st, EdgeId{0});
    st.ctx.erase(VertexId{1});
    CHECK(raised([&] { finalize(st); }) ==
          ErrorKind::InternalInvariantFailure);
  }
  SUBCASE("both sides nonempty") {
    HcEngineState st = make_hc_state(g);
    contract_and_update(st, EdgeId{0});
    st.ctx.set(VertexId{1}, sides({1}, {1}));
    CHECK(raised([&] { finalize(st); }) ==
          ErrorKind::InternalInvariantFailure);
  }
  SUBCASE("both sides empty") {
    HcEngineState st = make_hc_state(g);
    contract_and_update(st, EdgeId{0});
    st.ctx.set(VertexId{1}, sides({}, {}));
    CHECK(raised([&] { finalize(st); }) ==
          ErrorKind::InternalInvariantFailure);
  }
}

TEST_CASE("self-loops in the input ride along without joining the cycle") {
  MultiGraph g = from_edges(3, {{1, 2}, {2, 3}, {3, 1}});
  g.add_edge(VertexId{1}, VertexId{1});
  HcOraclePolicy policy;
  PolicyHcOracle oracle(policy);
  HcResult res = complete_hamiltonian_cycle(g, oracle);
  CHECK(res.cycle.edges == std::vector<EdgeId>{EdgeId{0}, EdgeId{1}, EdgeId{2}});
  CHECK(validate_hamiltonian_cycle(g, res.cycle));
}

TEST_CASE("a pre-existing loop cannot poison the final pick") {
  // The loop has the least id and enters the merged vertex's left side at
  // the closing contraction, but only loops formed by that contraction are
  // closing candidates; the pre-existing one is shed and the surviving
  // parallel copy closes the cycle.
  MultiGraph g(2);
  g.add_edge(VertexId{1}, VertexId{1});
  g.add_edge(VertexId{1}, VertexId{2});
  g.add_edge(VertexId{1}, VertexId{2});
  HcOraclePolicy policy;
  PolicyHcOracle oracle(policy);
  HcResult res = complete_hamiltonian_cycle(g, oracle);
  CHECK(res.cycle.edges == std::vector<EdgeId>{EdgeId{1}, EdgeId{2}});
  CHECK(validate_hamiltonian_cycle(g, res.cycle));
}

TEST_CASE("observers see conserved structure at every step") {
  MultiGraph g = from_edges(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {2, 5}});
  HcOraclePolicy policy;
  PolicyHcOracle oracle(policy);

  int calls = 0;
  HcRunOptions opts;
  opts.step_observer = [&](const HcEngineState& st) {
    CHECK(st.graph.order() == st.n - st.step);
    CHECK(static_cast<int>(st.chosen.size()) == st.step);
    std::string why;
    CHECK(st.ctx.well_formed(st.graph, &why));
    // Tracked vertices are exactly the merge survivors.
    for (VertexId v : st.ctx.domain())
      CHECK(st.graph.aliases(v).size() >= 2);
    ++calls;
  };
  HcResult res = complete_hamiltonian_cycle(g, oracle, opts);
  CHECK(calls == 5);
  CHECK(validate_hamiltonian_cycle(g, res.cycle));
}

TEST_CASE("keep_trace=false drops records but keeps the cycle") {
  MultiGraph g = from_edges(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}});
  HcOraclePolicy policy;
  PolicyHcOracle oracle(policy);
  HcRunOptions opts;
  opts.keep_trace = false;
  HcResult res = complete_hamiltonian_cycle(g, oracle, opts);
  CHECK(res.trace.empty());
  CHECK(validate_hamiltonian_cycle(g, res.cycle));
}
