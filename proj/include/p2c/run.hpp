#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "p2c/graph.hpp"
#include "p2c/hc_oracles.hpp"
#include "p2c/iso_oracles.hpp"

namespace p2c {

// One CLI invocation. `input` is the graph for the completion commands, the
// trace for replay, and the multigraph for probe-context-free; `solution`
// names the file verify checks. Unset guard (-1) falls back to the
// P2C_GUARD environment variable, then to the per-problem default.
struct RunConfig {
  std::string command;
  std::string input;
  std::string input2;
  std::string solution;
  std::string format;  // "", "graph6", or "json"; "" auto-detects
  std::string oracle = "honest";
  unsigned seed = 0;
  std::string planted_path;
  std::string trace_path;
  std::string dot_dir;
  int guard = -1;
  int runs = 100;
};

// Executes one command. Writes results to `out`, error JSON to `err`, and
// returns the process exit code: 0 ok, 1 failed verification, 2 parse,
// 3 oracle violation (planted violation, not isomorphic, no witness),
// 4 guard exceeded, 5 internal invariant failure.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Trace documents. Headers carry the input in canonical form (graph6 for
// the isomorphism problem, the JSON edge list for the cycle problem), the
// policy, seed, guard, and the planted solution when one was used; bodies
// carry one record per loop or step plus the solution. Serialization is
// deterministic, so identical runs produce identical bytes.
nlohmann::json build_iso_trace(const SimpleGraph& g, const SimpleGraph& h,
                               const IsoOraclePolicy& policy,
                               const IsoResult& result);
nlohmann::json build_hc_trace(const MultiGraph& g,
                              const HcOraclePolicy& policy,
                              const HcResult& result);

// Canonical byte form of a trace document, used for files and comparisons.
std::string dump_trace(const nlohmann::json& trace);

// Re-executes a recorded run by feeding the recorded answers back into the
// engine, checking the recorded per-loop (per-step) state against the live
// state as it goes, and returns the freshly built trace plus the solution.
// Divergence raises an internal invariant failure.
struct IsoReplay {
  nlohmann::json trace;
  Isomorphism phi;
};
IsoReplay replay_iso_trace(const nlohmann::json& trace);

struct HcReplay {
  nlohmann::json trace;
  HamiltonianCycle cycle;
};
HcReplay replay_hc_trace(const nlohmann::json& trace);

// Builds the cycle a vertex sequence describes, binding each consecutive
// pair to the least not-yet-used edge joining it. Returns false (with a
// reason) when some hop has no remaining edge.
bool reconstruct_cycle(const MultiGraph& g, const std::vector<VertexId>& order,
                       HamiltonianCycle* out, std::string* why);

}  // namespace p2c
