#include "p2c/run.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <ostream>
#include <set>

#include "p2c/dot.hpp"
#include "p2c/formats.hpp"
#include "p2c/hc_engine.hpp"
#include "p2c/iso_engine.hpp"

namespace p2c {

namespace {

using nlohmann::json;

const std::string& require_path(const std::string& path, const char* flag) {
  if (path.empty())
    raise(ErrorKind::ParseError, std::string("missing required ") + flag);
  return path;
}

std::string detect_format(const std::string& text) {
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    return ch == '{' ? "json" : "graph6";
  }
  raise(ErrorKind::ParseError, "empty input");
}

std::string pick_format(const RunConfig& cfg, const std::string& text) {
  std::string fmt = cfg.format.empty() ? detect_format(text) : cfg.format;
  if (fmt != "graph6" && fmt != "json")
    raise(ErrorKind::ParseError, "unknown format: " + fmt);
  return fmt;
}

SimpleGraph load_simple(const RunConfig& cfg, const std::string& path) {
  std::string text = read_file(path);
  return pick_format(cfg, text) == "graph6" ? parse_graph6(text)
                                            : parse_simple_json(text);
}

MultiGraph to_multi(const SimpleGraph& s) {
  MultiGraph m(s.order());
  for (auto [a, b] : s.edges()) m.add_edge(a, b);
  return m;
}

MultiGraph load_multi(const RunConfig& cfg, const std::string& path) {
  std::string text = read_file(path);
  return pick_format(cfg, text) == "json" ? parse_multi_json(text)
                                          : to_multi(parse_graph6(text));
}

int resolve_guard(const RunConfig& cfg, int fallback) {
  if (cfg.guard >= 0) return cfg.guard;
  if (const char* env = std::getenv("P2C_GUARD")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 0)
      raise(ErrorKind::ParseError,
            "P2C_GUARD must be a non-negative integer");
    return static_cast<int>(v);
  }
  return fallback;
}

IsoPolicyKind iso_kind(const std::string& name) {
  if (name == "honest") return IsoPolicyKind::HonestLex;
  if (name == "adversarial") return IsoPolicyKind::AdversarialMinFreedom;
  if (name == "random") return IsoPolicyKind::SeededRandom;
  if (name == "planted") return IsoPolicyKind::Planted;
  raise(ErrorKind::ParseError,
        "oracle policy '" + name + "' does not apply to iso-complete");
}

HcPolicyKind hc_kind(const std::string& name) {
  if (name == "honest") return HcPolicyKind::HonestLex;
  if (name == "adversarial") return HcPolicyKind::AdversarialMinFreedom;
  if (name == "random") return HcPolicyKind::SeededRandom;
  if (name == "planted") return HcPolicyKind::Planted;
  if (name == "context-free") return HcPolicyKind::ContextFree;
  raise(ErrorKind::ParseError, "unknown oracle policy: " + name);
}

json iso_map_json(const Isomorphism& phi) {
  json obj = json::object();
  for (auto [a, b] : phi) obj[std::to_string(a.value)] = b.value;
  return obj;
}

Isomorphism iso_map_from_json(const json& obj) {
  Isomorphism phi;
  for (auto it = obj.begin(); it != obj.end(); ++it)
    phi[VertexId{std::stoi(it.key())}] = VertexId{it.value().get<int>()};
  return phi;
}

json order_json(const std::vector<VertexId>& order) {
  json arr = json::array();
  for (VertexId v : order) arr.push_back(v.value);
  return arr;
}

// --- iso trace -------------------------------------------------------------

json iso_loop_json(const IsoLoopRecord& rec) {
  json r;
  r["loop"] = rec.loop;
  r["i"] = rec.i;
  r["g"] = rec.g_graph6;
  r["h"] = rec.h_graph6;
  r["answer"] = json::array({rec.answer.first.value, rec.answer.second.value});
  r["case"] = rec.case_label;
  r["resolved"] =
      json::array({rec.resolved.first.value, rec.resolved.second.value});
  auto cliques = [](const std::vector<CliqueAdded>& cs) {
    json arr = json::array();
    for (const auto& c : cs)
      arr.push_back(json::array({c.anchor.value, c.size}));
    return arr;
  };
  r["cliques_g"] = cliques(rec.cliques_added_g);
  r["cliques_h"] = cliques(rec.cliques_added_h);
  r["deleted_g"] = order_json(rec.deleted_g);
  r["deleted_h"] = order_json(rec.deleted_h);
  return r;
}

void fill_iso_body(json& t, const IsoResult& result) {
  json loops = json::array();
  for (const auto& rec : result.trace) loops.push_back(iso_loop_json(rec));
  t["loops"] = std::move(loops);
  t["solution"] = iso_map_json(result.phi);
  const IsoInstrumentation& s = result.stats;
  t["stats"] = {{"oracle_calls", s.oracle_calls},
                {"vertices_created", s.vertices_created},
                {"vertices_deleted", s.vertices_deleted},
                {"edges_created", s.edges_created},
                {"edges_deleted", s.edges_deleted},
                {"max_gadget_order", s.max_gadget_order},
                {"elementary_ops", s.elementary_ops()}};
}

// --- hc trace --------------------------------------------------------------

json edges_json_live(const MultiGraph& g) {
  json arr = json::array();
  for (EdgeId e : g.edge_ids()) {
    auto [a, b] = g.endpoints(e);
    arr.push_back(json::array({e.value, json::array({a.value, b.value})}));
  }
  return arr;
}

json ctx_json_live(const LeftRightContext& ctx) {
  json obj = json::object();
  for (const auto& [v, sides] : ctx.entries()) {
    json l = json::array();
    for (EdgeId e : sides.first) l.push_back(e.value);
    json r = json::array();
    for (EdgeId e : sides.second) r.push_back(e.value);
    obj[std::to_string(v.value)] = json::array({std::move(l), std::move(r)});
  }
  return obj;
}

json hc_step_json(const HcStepRecord& rec) {
  json r;
  r["step"] = rec.step;
  json edges = json::array();
  for (const auto& [e, ends] : rec.query_edges)
    edges.push_back(json::array(
        {e.value, json::array({ends.first.value, ends.second.value})}));
  r["edges"] = std::move(edges);
  json ctx = json::object();
  for (const auto& [v, sides] : rec.query_ctx) {
    json l = json::array();
    for (EdgeId e : sides.first) l.push_back(e.value);
    json rr = json::array();
    for (EdgeId e : sides.second) rr.push_back(e.value);
    ctx[std::to_string(v.value)] = json::array({std::move(l), std::move(rr)});
  }
  r["ctx"] = std::move(ctx);
  r["answer"] = rec.answer.value;
  r["case"] = rec.case_label;
  r["merged"] = json::array({rec.merged_u.value, rec.merged_v.value});
  r["survivor"] = rec.survivor.value;
  return r;
}

void fill_hc_body(json& t, const HcResult& result) {
  json steps = json::array();
  for (const auto& rec : result.trace) steps.push_back(hc_step_json(rec));
  t["steps"] = std::move(steps);
  t["final_edge"] =
      result.final_edge.value < 0 ? json() : json(result.final_edge.value);
  t["solution"] = order_json(result.cycle.order);
  t["oracle_calls"] = result.oracle_calls;
}

// --- playback oracles ------------------------------------------------------

class PlaybackIsoOracle : public IsoOracle {
 public:
  explicit PlaybackIsoOracle(const json& loops) : loops_(&loops) {}

  std::pair<VertexId, VertexId> answer(const GadgetGraph& gg,
                                       const GadgetGraph& gh) override {
    if (next_ >= loops_->size())
      raise(ErrorKind::InternalInvariantFailure,
            "replay ran past the recorded loops");
    const json& rec = (*loops_)[next_];
    if (write_graph6(gg.graph()) != rec.at("g").get<std::string>() ||
        write_graph6(gh.graph()) != rec.at("h").get<std::string>())
      raise(ErrorKind::InternalInvariantFailure,
            "replay diverged from the recorded state at loop " +
                std::to_string(next_));
    ++next_;
    const json& a = rec.at("answer");
    return {VertexId{a.at(0).get<int>()}, VertexId{a.at(1).get<int>()}};
  }

 private:
  const json* loops_;
  std::size_t next_ = 0;
};

class PlaybackHcOracle : public HcOracle {
 public:
  explicit PlaybackHcOracle(const json& steps) : steps_(&steps) {}

  EdgeId answer(const MultiGraph& g, const LeftRightContext& ctx) override {
    if (next_ >= steps_->size())
      raise(ErrorKind::InternalInvariantFailure,
            "replay ran past the recorded steps");
    const json& rec = (*steps_)[next_];
    if (edges_json_live(g) != rec.at("edges") ||
        ctx_json_live(ctx) != rec.at("ctx"))
      raise(ErrorKind::InternalInvariantFailure,
            "replay diverged from the recorded state at step " +
                std::to_string(next_ + 1));
    ++next_;
    return EdgeId{rec.at("answer").get<int>()};
  }

 private:
  const json* steps_;
  std::size_t next_ = 0;
};

void write_dot_dir(const std::string& dir, const std::string& name,
                   const std::string& content) {
  write_file((std::filesystem::path(dir) / name).string(), content);
}

std::string numbered(const char* stem, int k) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%s-%03d.dot", stem, k);
  return buf;
}

// --- commands --------------------------------------------------------------

int cmd_iso_complete(const RunConfig& cfg, std::ostream& out) {
  SimpleGraph g = load_simple(cfg, require_path(cfg.input, "--input"));
  SimpleGraph h = load_simple(cfg, require_path(cfg.input2, "--input2"));

  IsoOraclePolicy pol;
  pol.kind = iso_kind(cfg.oracle);
  pol.seed = cfg.seed;
  pol.guard = resolve_guard(cfg, kDefaultIsoGuard);
  if (pol.kind == IsoPolicyKind::Planted)
    pol.planted = parse_isomorphism_json(
        read_file(require_path(cfg.planted_path, "--planted")));

  PolicyIsoOracle oracle(pol);
  IsoRunOptions opts;
  if (!cfg.dot_dir.empty()) {
    std::filesystem::create_directories(cfg.dot_dir);
    opts.loop_observer = [&cfg](const IsoEngineState& st) {
      write_dot_dir(cfg.dot_dir, numbered("loop", st.loop),
                    iso_snapshot_dot(st.gG, st.gH, st.loop));
    };
  }
  IsoResult result = complete_isomorphism(g, h, oracle, opts);
  if (!cfg.trace_path.empty())
    write_file(cfg.trace_path, dump_trace(build_iso_trace(g, h, pol, result)));
  out << write_isomorphism_json(result.phi) << "\n";
  return 0;
}

int cmd_hc_complete(const RunConfig& cfg, std::ostream& out) {
  MultiGraph g = load_multi(cfg, require_path(cfg.input, "--input"));

  HcOraclePolicy pol;
  pol.kind = hc_kind(cfg.oracle);
  pol.seed = cfg.seed;
  pol.guard = resolve_guard(cfg, kDefaultHcGuard);
  if (pol.kind == HcPolicyKind::Planted) {
    auto order = parse_vertex_sequence_json(
        read_file(require_path(cfg.planted_path, "--planted")));
    std::string why;
    if (!reconstruct_cycle(g, order, &pol.planted, &why))
      raise(ErrorKind::PlantedViolation, "planted sequence: " + why);
  }

  PolicyHcOracle oracle(pol);
  HcRunOptions opts;
  if (!cfg.dot_dir.empty()) {
    std::filesystem::create_directories(cfg.dot_dir);
    opts.step_observer = [&cfg](const HcEngineState& st) {
      write_dot_dir(cfg.dot_dir, numbered("step", st.step),
                    hc_snapshot_dot(st.graph, st.ctx, st.step));
    };
  }
  HcResult result = complete_hamiltonian_cycle(g, oracle, opts);
  if (!cfg.trace_path.empty())
    write_file(cfg.trace_path, dump_trace(build_hc_trace(g, pol, result)));
  out << write_vertex_sequence_json(result.cycle.order) << "\n";
  return 0;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  std::string sol_text = read_file(require_path(cfg.solution, "solution file"));
  json sol = json::parse(sol_text, nullptr, false);
  if (sol.is_discarded())
    raise(ErrorKind::ParseError, "solution file is not valid JSON");

  bool valid = false;
  std::string reason;
  if (sol.is_object()) {
    SimpleGraph g = load_simple(cfg, require_path(cfg.input, "--input"));
    SimpleGraph h = load_simple(cfg, require_path(cfg.input2, "--input2"));
    Isomorphism phi = parse_isomorphism_json(sol_text);
    valid = validate_isomorphism(g, h, phi);
    if (!valid) reason = "mapping is not an isomorphism of the inputs";
  } else if (sol.is_array()) {
    MultiGraph g = load_multi(cfg, require_path(cfg.input, "--input"));
    auto order = parse_vertex_sequence_json(sol_text);
    HamiltonianCycle cycle;
    if (!reconstruct_cycle(g, order, &cycle, &reason)) {
      valid = false;
    } else {
      valid = validate_hamiltonian_cycle(g, cycle);
      if (!valid) reason = "sequence is not a Hamiltonian cycle of the input";
    }
  } else {
    raise(ErrorKind::ParseError,
          "solution must be a JSON object (isomorphism) or array (cycle)");
  }

  json report;
  report["valid"] = valid;
  if (!valid) report["reason"] = reason;
  out << report.dump() << "\n";
  return valid ? 0 : 1;
}

int cmd_replay(const RunConfig& cfg, std::ostream& out) {
  std::string text = read_file(require_path(cfg.input, "--input"));
  json trace = json::parse(text, nullptr, false);
  if (trace.is_discarded())
    raise(ErrorKind::ParseError, "trace file is not valid JSON");
  if (!trace.is_object() || !trace.contains("problem"))
    raise(ErrorKind::ParseError, "trace file lacks a problem field");

  std::string problem = trace.at("problem").get<std::string>();
  json rebuilt;
  std::string solution_line;
  if (problem == "iso") {
    IsoReplay r = replay_iso_trace(trace);
    rebuilt = std::move(r.trace);
    solution_line = write_isomorphism_json(r.phi);
  } else if (problem == "hc") {
    HcReplay r = replay_hc_trace(trace);
    rebuilt = std::move(r.trace);
    solution_line = write_vertex_sequence_json(r.cycle.order);
  } else {
    raise(ErrorKind::ParseError, "unknown trace problem: " + problem);
  }

  if (!cfg.trace_path.empty()) write_file(cfg.trace_path, dump_trace(rebuilt));
  if (dump_trace(rebuilt) != text)
    raise(ErrorKind::InternalInvariantFailure,
          "replayed trace is not byte-identical to the recorded one");
  out << solution_line << "\n";
  return 0;
}

int cmd_fixture(const RunConfig&, std::ostream& out) {
  Example1Fixture fx = find_example1_fixture();
  json report;
  report["g"] = write_graph6(fx.G);
  report["h"] = write_graph6(fx.H);
  report["phi1"] = iso_map_json(fx.phi1);
  report["phi2"] = iso_map_json(fx.phi2);
  report["naive_isomorphisms"] = fx.naive_iso_count;
  report["naive_compatible"] = fx.naive_compatible_count;
  out << report.dump() << "\n";
  return 0;
}

int cmd_probe_context_free(const RunConfig& cfg, std::ostream& out) {
  MultiGraph g = load_multi(cfg, require_path(cfg.input, "--input"));
  int guard = resolve_guard(cfg, kDefaultHcGuard);
  if (cfg.runs <= 0) raise(ErrorKind::ParseError, "--runs must be positive");

  long long ok = 0, violations = 0, no_witness = 0, internal = 0;
  long long first_failure_seed = -1;
  for (int k = 0; k < cfg.runs; ++k) {
    unsigned seed = cfg.seed + static_cast<unsigned>(k);
    HcOraclePolicy pol;
    pol.kind = HcPolicyKind::ContextFree;
    pol.seed = seed;
    pol.guard = guard;
    PolicyHcOracle oracle(pol);
    HcRunOptions opts;
    opts.keep_trace = false;
    try {
      complete_hamiltonian_cycle(g, oracle, opts);
      ++ok;
      continue;
    } catch (const Error& e) {
      switch (e.kind()) {
        case ErrorKind::OracleViolation: ++violations; break;
        case ErrorKind::NoWitness: ++no_witness; break;
        case ErrorKind::ContractionError:
        case ErrorKind::InternalInvariantFailure: ++internal; break;
        default: throw;
      }
    }
    if (first_failure_seed < 0) first_failure_seed = seed;
  }

  json report;
  report["command"] = "probe-context-free";
  report["runs"] = cfg.runs;
  report["base_seed"] = cfg.seed;
  report["ok"] = ok;
  report["oracle_violation"] = violations;
  report["no_witness"] = no_witness;
  report["internal_invariant_failure"] = internal;
  report["first_failure_seed"] =
      first_failure_seed < 0 ? json() : json(first_failure_seed);
  out << report.dump() << "\n";
  return 0;
}

}  // namespace

std::string dump_trace(const json& trace) { return trace.dump(2) + "\n"; }

json build_iso_trace(const SimpleGraph& g, const SimpleGraph& h,
                     const IsoOraclePolicy& policy, const IsoResult& result) {
  json t;
  t["problem"] = "iso";
  t["input"] = {{"g", write_graph6(g)}, {"h", write_graph6(h)}};
  t["policy"] = to_string(policy.kind);
  t["seed"] = policy.seed;
  t["guard"] = policy.guard;
  if (policy.kind == IsoPolicyKind::Planted)
    t["planted"] = iso_map_json(policy.planted);
  t["n"] = g.order();
  fill_iso_body(t, result);
  return t;
}

json build_hc_trace(const MultiGraph& g, const HcOraclePolicy& policy,
                    const HcResult& result) {
  json t;
  t["problem"] = "hc";
  t["input"] = {{"graph", json::parse(write_multi_json(g))}};
  t["policy"] = to_string(policy.kind);
  t["seed"] = policy.seed;
  t["guard"] = policy.guard;
  if (policy.kind == HcPolicyKind::Planted)
    t["planted"] = order_json(policy.planted.order);
  t["n"] = g.order();
  fill_hc_body(t, result);
  return t;
}

IsoReplay replay_iso_trace(const json& trace) {
  SimpleGraph g = parse_graph6(trace.at("input").at("g").get<std::string>());
  SimpleGraph h = parse_graph6(trace.at("input").at("h").get<std::string>());
  PlaybackIsoOracle oracle(trace.at("loops"));
  IsoResult result = complete_isomorphism(g, h, oracle, {});
  json rebuilt = trace;
  fill_iso_body(rebuilt, result);
  return {std::move(rebuilt), std::move(result.phi)};
}

HcReplay replay_hc_trace(const json& trace) {
  MultiGraph g = parse_multi_json(trace.at("input").at("graph").dump());
  PlaybackHcOracle oracle(trace.at("steps"));
  HcResult result = complete_hamiltonian_cycle(g, oracle, {});
  json rebuilt = trace;
  fill_hc_body(rebuilt, result);
  return {std::move(rebuilt), std::move(result.cycle)};
}

bool reconstruct_cycle(const MultiGraph& g, const std::vector<VertexId>& order,
                       HamiltonianCycle* out, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  const int n = static_cast<int>(order.size());
  if (n == 0) return fail("empty vertex sequence");
  for (VertexId v : order)
    if (!g.has_vertex(v))
      return fail("vertex " + std::to_string(v.value) + " is not in the graph");
  HamiltonianCycle cycle;
  cycle.order = order;
  if (n > 1) {
    std::set<EdgeId> used;
    for (int k = 0; k < n; ++k) {
      VertexId a = order[k];
      VertexId b = order[(k + 1) % n];
      bool hit = false;
      for (EdgeId e : g.incident(a)) {
        if (used.count(e)) continue;
        auto [p, q] = g.endpoints(e);
        if ((p == a && q == b) || (p == b && q == a)) {
          used.insert(e);
          cycle.edges.push_back(e);
          hit = true;
          break;
        }
      }
      if (!hit)
        return fail("no unused edge joins " + std::to_string(a.value) +
                    " and " + std::to_string(b.value));
    }
  }
  *out = std::move(cycle);
  return true;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.command == "iso-complete") return cmd_iso_complete(cfg, out);
    if (cfg.command == "hc-complete") return cmd_hc_complete(cfg, out);
    if (cfg.command == "verify") return cmd_verify(cfg, out);
    if (cfg.command == "replay") return cmd_replay(cfg, out);
    if (cfg.command == "fixture") return cmd_fixture(cfg, out);
    if (cfg.command == "probe-context-free")
      return cmd_probe_context_free(cfg, out);
    raise(ErrorKind::ParseError, "unknown command: " + cfg.command);
  } catch (const Error& e) {
    json report;
    report["error"] = {{"kind", to_string(e.kind())}, {"message", e.what()}};
    err << report.dump() << "\n";
    return exit_code(e.kind());
  } catch (const json::exception& e) {
    json report;
    report["error"] = {{"kind", to_string(ErrorKind::ParseError)},
                       {"message", std::string("malformed JSON: ") + e.what()}};
    err << report.dump() << "\n";
    return exit_code(ErrorKind::ParseError);
  } catch (const std::exception& e) {
    json report;
    report["error"] = {
        {"kind", to_string(ErrorKind::InternalInvariantFailure)},
        {"message", e.what()}};
    err << report.dump() << "\n";
    return exit_code(ErrorKind::InternalInvariantFailure);
  }
}

}  // namespace p2c
