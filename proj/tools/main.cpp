#include <CLI11.hpp>

#include <iostream>

#include "commands.hpp"
#include "nashgadgets/errors.hpp"

int main(int argc, char** argv) {
  using nashgadgets::cli::RunConfig;
  RunConfig cfg;
  CLI::App app{"Gadget game reductions and exact equilibrium analysis"};
  app.require_subcommand(1);

  auto* reduce = app.add_subcommand("reduce", "Build a gadget game and write it as .game");
  reduce->add_option("--gadget", cfg.gadget, "h1..h5, g0..g5, d0, dp0, d1, d4 or dp1")->required();
  reduce->add_option("--in", cfg.in, "Input .qsys or .bsys");
  reduce->add_option("--out", cfg.out, "Output .game (stdout when omitted)");
  reduce->add_option("--bsys-out", cfg.bsys_out, "Also write the bilinear system");
  reduce->add_option("--u", cfg.u, "Parameter u of H1, H3, H4");
  reduce->add_option("--k", cfg.k, "Parameter k of H2");
  reduce->add_flag("--simple-bot", cfg.simple_bot, "Pay 0 on every cell involving ⊥");
  reduce->add_flag("--normalize", cfg.normalize, "Map the system into the promise region first");
  reduce->add_flag("--augment-irrational", cfg.augment_irrational, "Add a variable w with 2w^2 = 1");

  auto* check = app.add_subcommand("check", "Check a property of a profile");
  check->add_option("--in", cfg.in, "Input .game")->required();
  check->add_option("--property", cfg.property, "ne, pareto, strong, coalition or condition:<id>");
  check->add_option("--profile", cfg.profile, "Input .prof");
  check->add_option("--pure", cfg.pure, "Pure profile as whitespace-separated action labels");
  check->add_option("--eps", cfg.eps, "Coalition margin");
  check->add_option("--grid", cfg.grid, "Use the grid scan with denominator N for --property coalition");
  check->add_option("--b1", cfg.b1, "Strict improvers, e.g. 1,2");
  check->add_option("--b2", cfg.b2, "Weak improvers");
  check->add_option("--cell-budget", cfg.cell_budget, "Branch-and-bound cell budget");
  check->add_option("--u", cfg.u, "Condition threshold u");
  check->add_option("--k", cfg.k, "Condition support bound k");
  check->add_option("--max-support", cfg.max_support, "Support bound when enumerating for second-ne");

  auto* solve = app.add_subcommand("solve", "Enumerate Nash equilibria by support");
  solve->add_option("--in", cfg.in, "Input .game")->required();
  solve->add_option("--max-support", cfg.max_support, "Largest support per player (0: no bound)");
  solve->add_option("--tolerance", cfg.tolerance, "Residual bound of the numeric path");
  solve->add_option("--budget", cfg.budget, "Largest number of support combinations");
  solve->add_option("--seed", cfg.seed, "Seed of the numeric multistart");

  auto* lemmas = app.add_subcommand("lemmas", "Run the gadget lemma suites");
  lemmas->add_option("--suite", cfg.suite, "h1, h2, h3, h4, h5, g0-identity, g1, strong, symmetric, nonsymmetric, irrational or all");
  lemmas->add_option("--seed", cfg.seed, "Seed of the random instances");

  auto* roundtrip = app.add_subcommand("roundtrip", "Plant, reduce, lift, verify and project random systems");
  roundtrip->add_option("--gadget", cfg.gadget, "g0..g5, d0, d1, d4, dp0 or dp1 (default g1)");
  roundtrip->add_option("--seed", cfg.seed, "Seed");
  roundtrip->add_option("--count", cfg.count, "Number of systems");
  roundtrip->add_option("--max-vars", cfg.max_vars, "Largest number of variables");
  roundtrip->add_option("--max-equations", cfg.max_equations, "Largest number of equations");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();
  try {
    return nashgadgets::cli::run(cfg, std::cout);
  } catch (const nashgadgets::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
