#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "p2c/graph.hpp"

namespace p2c {

// One attached clique: `size` counts the anchor, so there are size-1 member
// vertices, kept in creation (ordinal) order. Members are adjacent to the
// anchor and to each other, and to nothing else.
struct CliqueRecord {
  VertexId anchor;
  int size = 0;
  std::vector<VertexId> members;
};

struct CliqueMemberInfo {
  VertexId anchor;
  int size = 0;
  int ordinal = 0;
};

// A working copy of one input graph plus the clique bookkeeping the reduction
// needs: which vertices are original ("old"), and which clique each auxiliary
// ("new") vertex belongs to.
class GadgetGraph {
 public:
  GadgetGraph() = default;
  explicit GadgetGraph(const SimpleGraph& base);

  const SimpleGraph& graph() const { return graph_; }
  bool is_old(VertexId v) const { return old_.count(v) != 0; }

  // Old vertices currently adjacent to v.
  std::vector<VertexId> old_neighbors(VertexId v) const;

  const std::vector<CliqueRecord>& cliques_at(VertexId anchor) const;
  const CliqueMemberInfo* member_info(VertexId v) const;

  // Member with the given ordinal in the clique of the given size at the
  // given anchor, or nullopt if no such clique or ordinal exists.
  std::optional<VertexId> member_at(VertexId anchor, int size,
                                    int ordinal) const;

  // Creates size-1 fresh members pairwise adjacent and adjacent to anchor.
  const CliqueRecord& attach_clique(VertexId anchor, int size);

  // Removes v and every member of every clique anchored at v. Returns the
  // removed ids, ascending. v must be old.
  std::vector<VertexId> delete_old_with_cliques(VertexId v);

  bool check_invariants(std::string* why = nullptr) const;

 private:
  SimpleGraph graph_;
  std::set<VertexId> old_;
  std::map<VertexId, std::vector<CliqueRecord>> cliques_;
  std::map<VertexId, CliqueMemberInfo> member_of_;
};

// Ordered partial map between the original vertex sets. extend() refuses
// pairs that reuse a coordinate or break adjacency agreement against the
// original graphs.
class PartialIsomorphism {
 public:
  bool extend(VertexId x, VertexId y, const SimpleGraph& G,
              const SimpleGraph& H, std::string* why = nullptr);

  int size() const { return static_cast<int>(pairs_.size()); }
  const std::vector<std::pair<VertexId, VertexId>>& pairs() const {
    return pairs_;
  }
  Isomorphism as_map() const;

 private:
  std::vector<std::pair<VertexId, VertexId>> pairs_;
  std::map<VertexId, VertexId> forward_;
  std::set<VertexId> used_images_;
};

// Which shape the oracle's answer had. OldOld and NewAny reduce by deleting
// the resolved vertex and everything anchored on it, then re-anchoring fresh
// cliques on its surviving old neighbors; OldNew deletes two clique
// components outright (their anchors have no old neighbors, so the
// re-anchoring step is vacuous there).
enum class IsoCase { OldOld, OldNew, NewAny };

const char* to_string(IsoCase c);

struct ResolvedPair {
  IsoCase tag;
  VertexId x;  // resolved old vertex on the G side
  VertexId y;  // resolved old vertex on the H side
};

struct CliqueAdded {
  VertexId anchor;
  int size = 0;
};

struct IsoLoopRecord {
  int loop = 0;  // 1-based
  int i = 0;     // clique-size counter when the loop was entered
  std::string g_graph6;
  std::string h_graph6;
  std::pair<VertexId, VertexId> answer;
  std::string case_label;
  std::pair<VertexId, VertexId> resolved;
  std::vector<CliqueAdded> cliques_added_g;
  std::vector<CliqueAdded> cliques_added_h;
  std::vector<VertexId> deleted_g;
  std::vector<VertexId> deleted_h;
};

struct IsoInstrumentation {
  long long oracle_calls = 0;
  long long vertices_created = 0;
  long long vertices_deleted = 0;
  long long edges_created = 0;
  long long edges_deleted = 0;
  int max_gadget_order = 0;

  long long elementary_ops() const {
    return oracle_calls + vertices_created + vertices_deleted +
           edges_created + edges_deleted;
  }
};

struct IsoEngineState {
  SimpleGraph G, H;  // untouched originals, used for compatibility checks
  GadgetGraph gG, gH;
  int n = 0;
  int i = 0;     // current clique size; n + completed loops
  int loop = 0;  // completed loops
  PartialIsomorphism phi;
  std::vector<IsoLoopRecord> trace;
  IsoInstrumentation stats;
  bool keep_trace = true;
};

IsoEngineState make_iso_state(const SimpleGraph& G, const SimpleGraph& H);

class IsoOracle {
 public:
  virtual ~IsoOracle() = default;
  // Must return (x, y) with x in the current G-side gadget, y in the H-side
  // gadget, such that some isomorphism between the two maps x to y.
  virtual std::pair<VertexId, VertexId> answer(const GadgetGraph& gG,
                                               const GadgetGraph& gH) = 0;
};

// Classifies the oracle's answer and maps it back to a pair of old vertices.
// Every structural precondition of the reduction is checked here; a breach
// raises OracleViolation. The checks are exact consequences of the oracle
// contract, so a contract-respecting oracle can never trip them.
ResolvedPair resolve_answer(const IsoEngineState& st, VertexId x, VertexId y);

// Extends phi with the resolved pair (rejecting incompatible extensions as
// oracle violations), deletes the resolved vertices with their cliques from
// both sides, attaches fresh size-i cliques to every surviving old neighbor,
// and advances i. Appends to the trace when enabled.
void reduce_pair(IsoEngineState& st, const ResolvedPair& rp,
                 std::pair<VertexId, VertexId> raw_answer);

struct IsoRunOptions {
  bool keep_trace = true;
  // Called at every loop entry, before the oracle is queried.
  std::function<void(const IsoEngineState&)> loop_observer;
};

struct IsoResult {
  Isomorphism phi;
  std::vector<IsoLoopRecord> trace;
  IsoInstrumentation stats;
};

// Runs the full reduction: exactly n oracle calls for an n-vertex instance,
// none for n = 0, and both gadget graphs are empty on return. The result
// always satisfies validate_isomorphism against the inputs.
IsoResult complete_isomorphism(const SimpleGraph& G, const SimpleGraph& H,
                               IsoOracle& oracle,
                               const IsoRunOptions& options = {});

}  // namespace p2c
