#include "ikm/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "ikm/errors.hpp"
#include "ikm/rng.hpp"

namespace ikm {

namespace {

using nlohmann::json;

constexpr double kPi = 3.14159265358979323846;

void reject_unknown(const json& obj, const char* where,
                    std::initializer_list<const char*> known) {
  for (const auto& [key, _] : obj.items()) {
    bool ok = false;
    for (const char* k : known) {
      if (key == k) {
        ok = true;
        break;
      }
    }
    if (!ok) throw ConfigError(std::string(where) + ": unknown key '" + key + "'");
  }
}

double require_number(const json& obj, const char* where, const char* key) {
  if (!obj.contains(key) || !obj[key].is_number()) {
    throw ConfigError(std::string(where) + ": missing or non-numeric '" + key + "'");
  }
  return obj[key].get<double>();
}

PositiveSequence parse_sequence(const json& spec, const char* where) {
  if (!spec.is_object() || !spec.contains("kind")) {
    throw ConfigError(std::string(where) + ": sequence spec needs a 'kind'");
  }
  const std::string kind = spec["kind"].get<std::string>();
  try {
    if (kind == "geometric") {
      reject_unknown(spec, where, {"kind", "ratio", "scale"});
      return PositiveSequence::geometric(require_number(spec, where, "ratio"),
                                         require_number(spec, where, "scale"));
    }
    if (kind == "power_law") {
      reject_unknown(spec, where, {"kind", "exponent", "scale"});
      return PositiveSequence::power_law(require_number(spec, where, "exponent"),
                                         require_number(spec, where, "scale"));
    }
    if (kind == "explicit") {
      reject_unknown(spec, where, {"kind", "values"});
      return PositiveSequence::explicit_values(spec.at("values").get<std::vector<double>>());
    }
  } catch (const std::invalid_argument& e) {
    throw ValidationError(std::string(where) + ": " + e.what());
  }
  throw ConfigError(std::string(where) + ": unknown sequence kind '" + kind + "'");
}

CouplingMatrix parse_topology(const json& spec) {
  if (!spec.is_object() || !spec.contains("family")) {
    throw ConfigError("topology: missing 'family'");
  }
  const std::string family = spec["family"].get<std::string>();
  try {
    if (family == "product_summable") {
      reject_unknown(spec, "topology", {"family", "sequence"});
      return CouplingMatrix::product_summable(parse_sequence(spec.at("sequence"), "topology.sequence"));
    }
    if (family == "geometric_cross") {
      reject_unknown(spec, "topology", {"family", "base"});
      return CouplingMatrix::geometric_cross(require_number(spec, "topology", "base"));
    }
    if (family == "sender") {
      reject_unknown(spec, "topology", {"family", "weights", "normalized"});
      const bool normalized = spec.value("normalized", true);
      return CouplingMatrix::sender(parse_sequence(spec.at("weights"), "topology.weights"),
                                    normalized);
    }
    if (family == "finite_embedded") {
      reject_unknown(spec, "topology", {"family", "entries"});
      return CouplingMatrix::finite_embedded(
          spec.at("entries").get<std::vector<std::vector<double>>>());
    }
    if (family == "uniform_finite") {
      reject_unknown(spec, "topology", {"family", "n", "strength"});
      return CouplingMatrix::uniform_finite(spec.at("n").get<std::size_t>(),
                                            require_number(spec, "topology", "strength"));
    }
  } catch (const std::invalid_argument& e) {
    throw ValidationError(std::string("topology: ") + e.what());
  }
  throw ConfigError("topology: unknown family '" + family + "'");
}

std::vector<double> resolve_initial(const json& spec, std::size_t n) {
  if (!spec.is_object() || !spec.contains("kind")) {
    throw ConfigError("initial: missing 'kind'");
  }
  const std::string kind = spec["kind"].get<std::string>();
  std::vector<double> phases(n);
  if (kind == "explicit") {
    reject_unknown(spec, "initial", {"kind", "values"});
    auto values = spec.at("values").get<std::vector<double>>();
    if (values.size() != n) {
      throw ValidationError("initial: explicit value count differs from truncation_n");
    }
    return values;
  }
  if (kind == "alternating") {
    reject_unknown(spec, "initial", {"kind"});
    for (std::size_t i = 1; i <= n; ++i) {
      phases[i - 1] = (i % 2 == 0 ? 1.0 : -1.0) * kPi / 3.0;
    }
    return phases;
  }
  if (kind == "uniform_arc") {
    reject_unknown(spec, "initial", {"kind", "width", "seed", "center"});
    const double width = require_number(spec, "initial", "width");
    const double center = spec.value("center", 0.0);
    if (!(width >= 0.0)) throw ValidationError("initial: arc width must be nonnegative");
    CounterRng rng(spec.at("seed").get<std::uint64_t>(), 1);
    for (std::size_t i = 0; i < n; ++i) {
      phases[i] = center - width / 2.0 + width * rng.uniform(i);
    }
    return phases;
  }
  if (kind == "constant") {
    reject_unknown(spec, "initial", {"kind", "value"});
    const double value = require_number(spec, "initial", "value");
    for (double& p : phases) p = value;
    return phases;
  }
  throw ConfigError("initial: unknown kind '" + kind + "'");
}

FrequencyVector resolve_frequencies(const json& spec, std::size_t n) {
  if (!spec.is_object() || !spec.contains("kind")) {
    throw ConfigError("frequencies: missing 'kind'");
  }
  const std::string kind = spec["kind"].get<std::string>();
  if (kind == "zero") {
    reject_unknown(spec, "frequencies", {"kind"});
    return FrequencyVector::homogeneous(0.0);
  }
  if (kind == "constant") {
    reject_unknown(spec, "frequencies", {"kind", "value"});
    return FrequencyVector::homogeneous(require_number(spec, "frequencies", "value"));
  }
  if (kind == "seeded") {
    reject_unknown(spec, "frequencies", {"kind", "seed", "diameter", "center"});
    const double target = require_number(spec, "frequencies", "diameter");
    const double center = spec.value("center", 0.0);
    if (!(target > 0.0)) throw ValidationError("frequencies: diameter must be positive");
    if (n < 2) throw ValidationError("frequencies: seeded kind needs truncation_n >= 2");
    CounterRng rng(spec.at("seed").get<std::uint64_t>(), 2);
    std::vector<double> raw(n);
    for (std::size_t i = 0; i < n; ++i) raw[i] = rng.uniform(i);
    const auto [lo, hi] = std::minmax_element(raw.begin(), raw.end());
    const double span = *hi - *lo;
    for (double& v : raw) v = center + target * ((v - *lo) / span - 0.5);
    return FrequencyVector::per_index(std::move(raw));
  }
  throw ConfigError("frequencies: unknown kind '" + kind + "'");
}

Scenario from_json(const json& cfg) {
  if (!cfg.is_object()) throw ConfigError("scenario config must be a JSON object");
  reject_unknown(cfg, "scenario",
                 {"schema_version", "name", "topology", "truncation_n", "initial", "frequencies",
                  "integrator", "sample_stride", "equilibrium_tol", "second_order", "diagnostics",
                  "tail_budget", "tail_model", "tail_phase"});
  if (!cfg.contains("schema_version") || cfg["schema_version"].get<int>() != 1) {
    throw ConfigError("scenario: unsupported or missing schema_version (expected 1)");
  }

  Scenario sc;
  sc.name = cfg.value("name", std::string("unnamed"));
  sc.topology = parse_topology(cfg.at("topology"));
  sc.truncation_n = cfg.at("truncation_n").get<std::size_t>();
  if (sc.truncation_n < 1) throw ValidationError("truncation_n must be >= 1");
  sc.initial_phases = resolve_initial(cfg.at("initial"), sc.truncation_n);
  sc.frequencies = cfg.contains("frequencies")
                       ? resolve_frequencies(cfg["frequencies"], sc.truncation_n)
                       : FrequencyVector::homogeneous(0.0);

  const json& integ = cfg.at("integrator");
  reject_unknown(integ, "integrator", {"step", "t_end", "step_safety"});
  sc.integrator.t_end = require_number(integ, "integrator", "t_end");
  if (!(sc.integrator.t_end > 0.0)) throw ValidationError("integrator: t_end must be positive");
  sc.integrator.step = integ.value("step", 0.0);
  sc.integrator.step_safety = integ.value("step_safety", 0.1);
  if (!(sc.integrator.step_safety > 0.0 && sc.integrator.step_safety <= 1.0)) {
    throw ValidationError("integrator: step_safety must be in (0,1]");
  }

  sc.sample_stride = cfg.value("sample_stride", std::size_t{1});
  if (sc.sample_stride < 1) throw ValidationError("sample_stride must be >= 1");
  sc.equilibrium_tol = cfg.value("equilibrium_tol", 1e-6);
  sc.second_order = cfg.value("second_order", false);
  sc.tail_budget = cfg.value("tail_budget", 1e-4);

  const std::string tail_model = cfg.value("tail_model", std::string("dropped"));
  if (tail_model == "dropped") {
    sc.tail_model = TailModel::Dropped;
  } else if (tail_model == "frozen") {
    sc.tail_model = TailModel::Frozen;
    sc.tail_phase = cfg.value("tail_phase", 0.0);
  } else {
    throw ConfigError("tail_model must be 'dropped' or 'frozen'");
  }

  if (cfg.contains("diagnostics")) {
    const json& d = cfg["diagnostics"];
    reject_unknown(d, "diagnostics", {"potential", "weighted_sum", "cross_ratios", "tuples"});
    sc.diagnostics.potential = d.value("potential", false);
    sc.diagnostics.weighted_sum = d.value("weighted_sum", false);
    sc.diagnostics.cross_ratios = d.value("cross_ratios", false);
    if (d.contains("tuples")) {
      for (const auto& t : d["tuples"]) {
        auto v = t.get<std::vector<std::size_t>>();
        if (v.size() != 4) throw ConfigError("diagnostics: each tuple needs 4 indices");
        sc.diagnostics.tuples.push_back({v[0], v[1], v[2], v[3]});
      }
    }
  }

  if (sc.second_order && !sc.topology.is_sender()) {
    throw ValidationError("second_order requires a sender topology");
  }
  const double max_step =
      max_stable_step(sc.topology, sc.frequencies, sc.truncation_n, sc.integrator.step_safety);
  if (sc.integrator.step > 0.0 && sc.integrator.step > max_step * (1.0 + 1e-12)) {
    std::ostringstream msg;
    msg << "integrator: step " << sc.integrator.step << " exceeds the certified bound "
        << max_step;
    throw ValidationError(msg.str());
  }
  const double tail_exposure = sc.topology.tail_bound(sc.truncation_n) * sc.integrator.t_end;
  if (tail_exposure > sc.tail_budget) {
    std::ostringstream msg;
    msg << "tail certificate x t_end = " << tail_exposure << " exceeds the declared budget "
        << sc.tail_budget;
    sc.warnings.push_back(msg.str());
  }

  // Canonical echo: defaults made explicit, keys sorted by nlohmann's object
  // ordering, resolved step included.
  json echo = cfg;
  echo["sample_stride"] = sc.sample_stride;
  echo["equilibrium_tol"] = sc.equilibrium_tol;
  echo["second_order"] = sc.second_order;
  echo["tail_budget"] = sc.tail_budget;
  echo["tail_model"] = tail_model;
  echo["integrator"]["step"] = sc.integrator.step;
  echo["integrator"]["step_safety"] = sc.integrator.step_safety;
  echo["resolved_step"] = sc.integrator.step > 0.0 ? sc.integrator.step : max_step;
  sc.canonical_config = echo.dump();
  return sc;
}

}  // namespace

PhaseState Scenario::initial_state() const {
  return PhaseState{initial_phases, 0.0, tail_model, tail_phase};
}

double Scenario::resolved_step() const {
  if (integrator.step > 0.0) return integrator.step;
  return max_stable_step(topology, frequencies, truncation_n, integrator.step_safety);
}

Scenario parse_scenario_text(const std::string& text) {
  json cfg;
  try {
    cfg = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config parse error: ") + e.what());
  }
  try {
    return from_json(cfg);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config structure error: ") + e.what());
  }
}

Scenario parse_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open scenario file: " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_scenario_text(buf.str());
}

}  // namespace ikm
