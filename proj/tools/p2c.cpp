#include <iostream>

#include "CLI11.hpp"
#include "p2c/run.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "oracle-guided completion of graph isomorphisms and Hamiltonian "
      "cycles"};
  p2c::RunConfig cfg;
  app.add_option("command", cfg.command,
                 "iso-complete | hc-complete | verify | replay | fixture | "
                 "probe-context-free")
      ->required();
  app.add_option("solution", cfg.solution, "solution file (verify only)");
  app.add_option("--input", cfg.input,
                 "input graph; the trace file for replay");
  app.add_option("--input2", cfg.input2, "second input graph (iso only)");
  app.add_option("--oracle", cfg.oracle,
                 "honest | adversarial | random | planted | context-free");
  app.add_option("--seed", cfg.seed, "oracle seed");
  app.add_option("--planted", cfg.planted_path,
                 "planted solution file (planted policy)");
  app.add_option("--trace", cfg.trace_path, "write the run trace to this file");
  app.add_option("--dot", cfg.dot_dir,
                 "write per-step DOT snapshots into this directory");
  app.add_option("--guard", cfg.guard,
                 "enumeration size guard (P2C_GUARD overrides the default)");
  app.add_option("--format", cfg.format, "graph6 | json (default: detect)");
  app.add_option("--runs", cfg.runs,
                 "probe-context-free: number of seeded runs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  return p2c::run(cfg, std::cout, std::cerr);
}
