#include <cstdio>
#include <iostream>

#include "CLI11.hpp"

#include "ikm/acceptance.hpp"
#include "ikm/diagnostics.hpp"
#include "ikm/run.hpp"
#include "ikm/scenario.hpp"

namespace {

int cmd_simulate(const std::string& config, const std::filesystem::path& out_dir) {
  ikm::Scenario sc = ikm::parse_scenario(config);
  ikm::RunReport rep = ikm::run(sc, out_dir);
  std::cout << "scenario " << rep.scenario_name << " (config " << rep.config_hash << ")\n";
  std::cout << "  tail certificate: " << rep.tail_certificate << "\n";
  std::cout << "  equilibrium: " << (rep.equilibrium_reached ? "reached" : "not reached") << "\n";
  for (const auto& [key, value] : rep.measurements) {
    std::cout << "  " << key << " = " << value << "\n";
  }
  bool ok = true;
  for (const ikm::CheckResult& c : rep.checks) {
    std::cout << "  check " << c.name << ": " << ikm::to_string(c.status);
    if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
    std::cout << "\n";
    if (c.status == ikm::CheckStatus::Fail) ok = false;
  }
  std::cout << "  csv: " << rep.csv_path.string() << "\n";
  std::cout << "  json: " << rep.json_path.string() << "\n";
  return ok ? 0 : 1;
}

int cmd_validate(const std::string& config) {
  ikm::Scenario sc = ikm::parse_scenario(config);
  ikm::FrameworkReport fw =
      ikm::validate_framework(sc.topology, sc.initial_state(), sc.frequencies, 1024);
  std::cout << "scenario " << sc.name << "\n";
  std::cout << "  initial diameter: " << fw.initial_diameter
            << (fw.f1_holds ? "  (below pi)" : "  (NOT below pi)") << "\n";
  std::cout << "  witness sequence: "
            << (fw.witness ? "available, l1 = " + std::to_string(fw.witness_l1) : "unavailable")
            << (fw.f2_holds ? "  (ratio condition holds)" : "  (ratio condition fails)") << "\n";
  std::cout << "  row-sum infimum: " << fw.norm_minus_inf_one
            << (fw.f3_holds ? "  (positive)" : "  (not positive)") << "\n";
  for (const std::string& note : fw.notes) std::cout << "  note: " << note << "\n";
  return 0;
}

int cmd_norms(const std::string& config) {
  ikm::Scenario sc = ikm::parse_scenario(config);
  const ikm::CouplingMatrix& k = sc.topology;
  std::cout << "topology " << k.family_name() << " (symmetric: " << (k.symmetric() ? "yes" : "no")
            << ")\n";
  std::printf("  norm(inf,1)  = %.17g\n", k.norm_inf_one());
  const auto inf_row = k.norm_minus_inf_one();
  std::printf("  norm(-inf,1) = %.17g%s\n", inf_row.value,
              inf_row.fails_in_limit ? "  (vanishes in the index limit)" : "");
  for (double p : {1.0, 2.0}) {
    std::printf("  norm(%g,1)    = %.17g\n", p, k.norm_p_one(p));
  }
  std::printf("  tail bound at N=%zu: %.17g\n", sc.truncation_n,
              k.tail_bound(sc.truncation_n));
  std::printf("  tail certificate over the run: %.17g\n",
              k.tail_bound(sc.truncation_n) * sc.integrator.t_end);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"infinite Kuramoto laboratory"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string out_dir_flag;
  unsigned threads = 1;
  std::uint64_t seed = 0;
  app.add_option("--out", out_dir_flag, "output directory (default: IKL_OUT_DIR or ./out)");
  app.add_option("--threads", threads, "worker threads for independent scenarios");
  app.add_option("--seed", seed, "global seed offset (reserved for batch runs)");

  std::string sim_config;
  auto* sim = app.add_subcommand("simulate", "integrate one scenario and write its outputs");
  sim->add_option("config", sim_config, "scenario config file")->required();

  std::string filter;
  auto* accept = app.add_subcommand("accept", "run the acceptance suite");
  accept->add_option("--filter", filter, "only criteria whose name contains this substring");

  std::string val_config;
  auto* validate = app.add_subcommand("validate", "framework report for a scenario");
  validate->add_option("config", val_config, "scenario config file")->required();

  std::string norm_config;
  auto* norms = app.add_subcommand("norms", "topology norm and tail table for a scenario");
  norms->add_option("config", norm_config, "scenario config file")->required();

  CLI11_PARSE(app, argc, argv);

  const std::filesystem::path out_dir =
      out_dir_flag.empty() ? ikm::default_out_dir() : std::filesystem::path(out_dir_flag);

  try {
    if (sim->parsed()) return cmd_simulate(sim_config, out_dir);
    if (accept->parsed()) {
      auto outcomes = ikm::acceptance_suite(filter, out_dir, threads);
      return ikm::report_outcomes(outcomes, std::cout);
    }
    if (validate->parsed()) return cmd_validate(val_config);
    if (norms->parsed()) return cmd_norms(norm_config);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
