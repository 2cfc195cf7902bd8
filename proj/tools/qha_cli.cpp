#include <iostream>

#include <CLI11.hpp>

#include "qha/error.hpp"
#include "qha/suites.hpp"

int main(int argc, char** argv) {
  using namespace qha;
  CLI::App app{"Exact computations in quiver Hecke algebras of types A, B and D"};
  app.require_subcommand(1);
  std::string format = "text";
  RunOptions opts;
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", opts.seed, "Random seed for sampled checks");
  app.add_option("--max-len", opts.max_len, "Largest Coxeter length enumerated")->check(CLI::PositiveNumber);
  app.add_option("--max-ydeg", opts.max_ydeg, "Largest total y-degree enumerated")->check(CLI::NonNegativeNumber);
  app.add_option("--samples", opts.samples, "Sample count for randomised checks")->check(CLI::PositiveNumber);

  std::string config;
  using Runner = Report (*)(const Config&, const RunOptions&);
  const std::vector<std::tuple<const char*, const char*, Runner>> suites = {
      {"validate", "Check quiver, parameters and orbit", run_validate},
      {"relations", "Defining relations as operator identities (types A, B and D)", run_relations},
      {"pbw", "PBW round trips, closure and associativity", run_pbw},
      {"decompose", "Matrix decomposition over a partition of the quiver", run_decompose},
      {"typed", "Type D relations, involutions, semidirect law and decomposition", run_typed},
      {"cyclo", "Cyclotomic identities and ideal transport", run_cyclo},
      {"orbits", "Orbit bijection and counting for a partition", run_orbits},
  };
  std::vector<std::pair<CLI::App*, Runner>> subs;
  for (const auto& [name, help, fn] : suites) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("config", config, "JSON configuration file")->required();
    subs.emplace_back(sub, fn);
  }
  ClassifyRequest creq;
  std::string cmode = "B";
  CLI::App* cls = app.add_subcommand("classify", "Morita case of the parameters of a cyclotomic Hecke algebra");
  cls->add_option("--char", creq.characteristic, "Prime characteristic")->required();
  cls->add_option("--q", creq.q, "Quantum parameter")->required();
  cls->add_option("--p", creq.p, "Second parameter (type B)");
  cls->add_option("--x", creq.xs, "Cyclotomic parameters")->required();
  cls->add_option("--mode", cmode, "Type")->check(CLI::IsMember({"B", "D"}));

  CLI11_PARSE(app, argc, argv);
  opts.workers = workers_from_env();
  try {
    Report rep;
    if (cls->parsed()) {
      creq.mode = cmode == "B" ? HeckeMode::B : HeckeMode::D;
      if (creq.mode == HeckeMode::B && cls->count("--p") == 0)
        throw Error(ErrorCode::ConfigError, "classify --mode B needs --p");
      rep = run_classify(creq);
    } else {
      for (const auto& [sub, fn] : subs)
        if (sub->parsed()) rep = fn(load_config(config), opts);
    }
    if (format == "json")
      std::cout << rep.to_json().dump(2) << "\n";
    else
      std::cout << rep.to_text();
    return rep.pass() ? 0 : 1;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return e.code() == ErrorCode::ConfigError ? 2 : 3;
  }
}
