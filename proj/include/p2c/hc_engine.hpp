#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "p2c/graph.hpp"

namespace p2c {

// Per-vertex split of incident edges into two disjoint sides. A cycle is
// consistent with the context when it uses exactly one edge from each side
// of every tracked vertex; which side is called left is irrelevant to that
// predicate, but the slots are kept stable for determinism.
class LeftRightContext {
 public:
  using Sides = std::pair<std::set<EdgeId>, std::set<EdgeId>>;

  bool contains(VertexId v) const { return entries_.count(v) != 0; }
  const Sides& at(VertexId v) const;
  void set(VertexId v, Sides sides) { entries_[v] = std::move(sides); }
  void erase(VertexId v) { entries_.erase(v); }

  std::vector<VertexId> domain() const;
  int size() const { return static_cast<int>(entries_.size()); }
  const std::map<VertexId, Sides>& entries() const { return entries_; }

  // Definition check against g: both sides incident to v, disjoint.
  bool well_formed(const MultiGraph& g, std::string* why = nullptr) const;

 private:
  std::map<VertexId, Sides> entries_;
};

// True iff c uses exactly one edge from each side of every tracked vertex.
bool cycle_consistent(const HamiltonianCycle& c, const LeftRightContext& ctx);

struct HcStepRecord {
  int step = 0;  // 1-based
  // Graph as seen by the oracle: edges in id order with current endpoints.
  std::vector<std::pair<EdgeId, std::pair<VertexId, VertexId>>> query_edges;
  std::map<VertexId, std::pair<std::vector<EdgeId>, std::vector<EdgeId>>>
      query_ctx;
  EdgeId answer;
  std::string case_label;  // "1", "2-L", "2-R", "3-LR", "3-RL", "3-LL", "3-RR"
  VertexId merged_u, merged_v, survivor;
};

struct HcEngineState {
  MultiGraph original;  // untouched input
  MultiGraph graph;     // current contracted graph
  LeftRightContext ctx;
  std::vector<EdgeId> chosen;  // oracle answers, in step order
  int n = 0;
  int step = 0;  // completed steps
  std::vector<HcStepRecord> trace;
  bool keep_trace = true;
};

HcEngineState make_hc_state(const MultiGraph& g);

class HcOracle {
 public:
  virtual ~HcOracle() = default;
  // Must return a live edge of g lying on some Hamiltonian cycle of g that
  // is consistent with ctx.
  virtual EdgeId answer(const MultiGraph& g, const LeftRightContext& ctx) = 0;
};

// Applies one oracle answer: contracts e and rewrites the context.
//   neither endpoint tracked: the merged vertex enters the context; its
//     left side is the first endpoint's former edges minus e (parallel
//     copies of e stay, as self-loops), its right side is the second
//     endpoint's former edges away from the first endpoint.
//   one endpoint tracked: the side of that endpoint holding e is replaced by
//     the other endpoint's former edges away from it; the opposite side
//     carries over. e outside both sides is an oracle violation.
//   both endpoints tracked: each endpoint loses the side holding e and
//     donates its surviving side; the surviving left goes to the left slot
//     unchanged, the surviving right goes to the right slot minus the edges
//     joining the two endpoints. When the two surviving sides have the same
//     orientation they are slotted left/right by ascending donor id, the
//     right slot again shedding the joining edges.
// Edge ids are never rewritten, only endpoints are.
void contract_and_update(HcEngineState& st, EdgeId e);

// Step n: one vertex left, its context has exactly one nonempty side; the
// least edge id there completes the cycle. Returns the chosen edges mapped
// through their origins as a cycle of the input graph.
HamiltonianCycle finalize(HcEngineState& st);

struct HcRunOptions {
  bool keep_trace = true;
  // Called before each oracle query with the current state, and the applied
  // answer after the previous step (unset on the first call).
  std::function<void(const HcEngineState&)> step_observer;
};

struct HcResult {
  HamiltonianCycle cycle;
  EdgeId final_edge;  // picked by finalize, = cycle edge not in trace
  std::vector<HcStepRecord> trace;
  long long oracle_calls = 0;
};

// Runs the full reduction: exactly n-1 oracle calls for an n-vertex input
// (none for n = 1), and the result always passes
// validate_hamiltonian_cycle against the input.
HcResult complete_hamiltonian_cycle(const MultiGraph& g, HcOracle& oracle,
                                    const HcRunOptions& options = {});

}  // namespace p2c
