#include "ikm/run.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "json.hpp"

#include "ikm/diagnostics.hpp"
#include "ikm/errors.hpp"

namespace ikm {

namespace {

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace

std::string config_hash(const std::string& canonical_config) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : canonical_config) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void write_csv(const Trajectory& trajectory, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open CSV output: " + path.string());
  out << "t,d_theta,d_omega,r,phi,P,S,rhs_l2,rhs_linf,tail_cert\n";
  for (const DiagnosticsRecord& rec : trajectory.records) {
    out << fmt17(rec.time) << ',' << fmt17(rec.d_theta) << ',';
    if (rec.d_omega) out << fmt17(*rec.d_omega);
    out << ',' << fmt17(rec.r) << ',';
    if (rec.phi) out << fmt17(*rec.phi);
    out << ',';
    if (rec.potential_p) out << fmt17(*rec.potential_p);
    out << ',';
    if (rec.weighted_s) out << fmt17(*rec.weighted_s);
    out << ',' << fmt17(rec.rhs_l2) << ',' << fmt17(rec.rhs_linf) << ','
        << fmt17(rec.tail_certificate) << '\n';
  }
}

std::filesystem::path default_out_dir() {
  if (const char* env = std::getenv("IKL_OUT_DIR")) return env;
  return "out";
}

RunReport run(const Scenario& scenario, const std::filesystem::path& out_dir) {
  const auto t_start = std::chrono::steady_clock::now();
  RunReport report;
  report.scenario_name = scenario.name;
  report.config_hash = config_hash(scenario.canonical_config);

  Trajectory traj = integrate(scenario);
  report.tail_certificate = traj.tail_certificate;
  report.equilibrium_reached = traj.equilibrium_reached;

  const DiagnosticsRecord& last = traj.records.back();
  report.measurements["final_d_theta"] = last.d_theta;
  report.measurements["final_rhs_l2"] = last.rhs_l2;
  report.measurements["final_rhs_linf"] = last.rhs_linf;
  report.measurements["final_r"] = last.r;
  if (last.d_omega) report.measurements["final_d_omega"] = *last.d_omega;
  if (last.potential_p) report.measurements["final_potential"] = *last.potential_p;
  if (last.weighted_s) report.measurements["final_weighted_s"] = *last.weighted_s;

  try {
    if (scenario.topology.is_sender()) {
      report.checks.push_back(r_monotonicity_check(traj, scenario.topology));
    }
    if (scenario.diagnostics.potential && scenario.topology.symmetric_summable() &&
        traj.records.size() >= 3) {
      report.checks.push_back(lyapunov_identity_check(traj, scenario.topology));
    }
    if (scenario.diagnostics.cross_ratios && !scenario.diagnostics.tuples.empty()) {
      report.checks.push_back(cross_ratio_constancy_check(traj, scenario.diagnostics.tuples));
    }
  } catch (const std::exception& e) {
    CheckResult failed;
    failed.name = "diagnostics";
    failed.status = CheckStatus::Fail;
    failed.detail = e.what();
    report.checks.push_back(failed);
  }

  std::filesystem::create_directories(out_dir);
  report.csv_path = out_dir / (scenario.name + ".csv");
  report.json_path = out_dir / (scenario.name + ".json");
  write_csv(traj, report.csv_path);

  nlohmann::json summary;
  summary["scenario"] = scenario.name;
  summary["config_hash"] = report.config_hash;
  summary["tail_certificate"] = report.tail_certificate;
  summary["equilibrium_reached"] = report.equilibrium_reached;
  summary["samples"] = traj.records.size();
  summary["warnings"] = scenario.warnings;
  summary["measurements"] = report.measurements;
  nlohmann::json checks = nlohmann::json::array();
  for (const CheckResult& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"status", to_string(c.status)},
                      {"worst", c.worst},
                      {"detail", c.detail}});
  }
  summary["checks"] = checks;

  const auto t_stop = std::chrono::steady_clock::now();
  report.wall_seconds = std::chrono::duration<double>(t_stop - t_start).count();
  summary["wall_seconds"] = report.wall_seconds;

  std::ofstream js(report.json_path, std::ios::binary);
  js << summary.dump(2) << '\n';
  return report;
}

}  // namespace ikm
