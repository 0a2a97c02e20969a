#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "proxflow/errors.hpp"
#include "proxflow/harness.hpp"

namespace proxflow {

namespace {

struct RawConfig {
  // section -> key -> value (section "" for top-level keys)
  std::map<std::string, std::map<std::string, std::string>> sections;
  std::string origin;

  bool has(const std::string& sec, const std::string& key) const {
    auto it = sections.find(sec);
    return it != sections.end() && it->second.count(key) > 0;
  }

  std::string get(const std::string& sec, const std::string& key) const {
    if (!has(sec, key))
      throw ConfigError(origin + ": missing required key '" + sec + "." + key + "'");
    return sections.at(sec).at(key);
  }

  std::string get_or(const std::string& sec, const std::string& key,
                     const std::string& fallback) const {
    return has(sec, key) ? sections.at(sec).at(key) : fallback;
  }

  double get_double(const std::string& sec, const std::string& key) const {
    return parse_double(sec, key, get(sec, key));
  }

  double get_double_or(const std::string& sec, const std::string& key,
                       double fallback) const {
    if (!has(sec, key)) return fallback;
    return parse_double(sec, key, sections.at(sec).at(key));
  }

  long get_long_or(const std::string& sec, const std::string& key, long fallback) const {
    if (!has(sec, key)) return fallback;
    return static_cast<long>(parse_double(sec, key, sections.at(sec).at(key)));
  }

  std::vector<double> get_numbers(const std::string& sec, const std::string& key) const {
    std::stringstream ss(get(sec, key));
    std::vector<double> out;
    std::string tok;
    while (ss >> tok) out.push_back(parse_double(sec, key, tok));
    if (out.empty())
      throw ConfigError(origin + ": key '" + sec + "." + key + "' needs numbers");
    return out;
  }

  double parse_double(const std::string& sec, const std::string& key,
                      const std::string& text) const {
    try {
      std::size_t used = 0;
      const double v = std::stod(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return v;
    } catch (const std::exception&) {
      throw ConfigError(origin + ": key '" + sec + "." + key + "' has non-numeric value '" +
                        text + "'");
    }
  }
};

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

RawConfig tokenize(const std::string& text, const std::string& origin) {
  RawConfig raw;
  raw.origin = origin;
  std::istringstream in(text);
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigError(origin + ":" + std::to_string(lineno) + ": malformed section header");
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(origin + ":" + std::to_string(lineno) + ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty())
      throw ConfigError(origin + ":" + std::to_string(lineno) + ": empty key or value");
    if (raw.sections[section].count(key))
      throw ConfigError(origin + ":" + std::to_string(lineno) + ": duplicate key '" +
                        section + "." + key + "'");
    raw.sections[section][key] = value;
  }
  return raw;
}

std::shared_ptr<Domain> build_domain(const RawConfig& raw) {
  const std::string sec = "domain";
  const std::string kind = raw.get(sec, "kind");
  std::shared_ptr<Domain> dom;
  if (kind == "half_space") {
    dom = Domain::half_space(Vec(raw.get_numbers(sec, "normal")),
                             raw.get_double(sec, "offset"));
  } else if (kind == "ball") {
    dom = Domain::ball(Vec(raw.get_numbers(sec, "center")), raw.get_double(sec, "radius"));
  } else if (kind == "box") {
    dom = Domain::box(Vec(raw.get_numbers(sec, "lo")), Vec(raw.get_numbers(sec, "hi")));
  } else if (kind == "convex_polygon") {
    const auto nums = raw.get_numbers(sec, "vertices");
    if (nums.size() % 2 != 0 || nums.size() < 6)
      throw ConfigError(raw.origin + ": domain.vertices needs >= 3 planar points");
    std::vector<Vec> verts;
    for (std::size_t k = 0; k + 1 < nums.size(); k += 2)
      verts.push_back(Vec{nums[k], nums[k + 1]});
    dom = Domain::convex_polygon(std::move(verts));
  } else if (kind == "annulus_sector") {
    dom = Domain::annulus_sector(raw.get_double(sec, "r_in"), raw.get_double(sec, "r_out"),
                                 raw.get_double(sec, "theta_min"),
                                 raw.get_double(sec, "theta_max"));
  } else if (kind == "disk_with_bite") {
    dom = Domain::disk_with_bite(raw.get_double(sec, "radius"),
                                 Vec(raw.get_numbers(sec, "bite_center")),
                                 raw.get_double(sec, "bite_radius"));
  } else if (kind == "pacman_sector") {
    dom = Domain::pacman_sector(raw.get_double(sec, "r_max"),
                                raw.get_double(sec, "theta_min"),
                                raw.get_double(sec, "theta_max"));
  } else {
    throw ConfigError(raw.origin + ": unknown domain.kind '" + kind + "'");
  }
  if (raw.has(sec, "eta_override")) dom->override_eta(raw.get_double(sec, "eta_override"));
  return dom;
}

Potential build_potential(const RawConfig& raw, const std::string& sec) {
  const std::string kind = raw.get_or(sec, "kind", "zero");
  std::vector<double> params;
  if (raw.has(sec, "params")) params = raw.get_numbers(sec, "params");
  try {
    return Potential::builtin(kind, params);
  } catch (const UnknownPotential& e) {
    throw ConfigError(raw.origin + ": " + sec + ": " + e.what());
  }
}

InitialSpec build_initial(const RawConfig& raw, const std::string& sec,
                          std::uint64_t default_seed) {
  InitialSpec spec;
  const std::string recipe = raw.get(sec, "recipe");
  spec.seed = static_cast<std::uint64_t>(raw.get_long_or(sec, "seed",
                                                         static_cast<long>(default_seed)));
  if (recipe == "grid") {
    spec.recipe = InitialSpec::Recipe::Grid;
    spec.grid_per_axis = static_cast<int>(raw.get_long_or(sec, "grid_per_axis", 0));
    if (spec.grid_per_axis < 1)
      throw ConfigError(raw.origin + ": " + sec + ".grid_per_axis must be >= 1");
  } else if (recipe == "random") {
    spec.recipe = InitialSpec::Recipe::Random;
    spec.n = static_cast<int>(raw.get_long_or(sec, "n", 0));
    if (spec.n < 1) throw ConfigError(raw.origin + ": " + sec + ".n must be >= 1");
    spec.radius = raw.get_double_or(sec, "radius", 0.0);
  } else if (recipe == "explicit") {
    spec.recipe = InitialSpec::Recipe::Explicit;
    if (raw.has(sec, "file")) {
      spec.file = raw.get(sec, "file");
    } else {
      // points = x1 y1 m1 ; x2 y2 m2 ; ...
      std::stringstream ss(raw.get(sec, "points"));
      std::string group;
      while (std::getline(ss, group, ';')) {
        std::stringstream gs(group);
        std::vector<double> nums;
        double v;
        while (gs >> v) nums.push_back(v);
        if (nums.size() < 2)
          throw ConfigError(raw.origin + ": " + sec + ".points: each group needs "
                            "coordinates then a mass");
        spec.masses.push_back(nums.back());
        nums.pop_back();
        spec.points.push_back(Vec(std::move(nums)));
      }
      if (spec.points.empty())
        throw ConfigError(raw.origin + ": " + sec + ".points is empty");
    }
  } else {
    throw ConfigError(raw.origin + ": unknown " + sec + ".recipe '" + recipe + "'");
  }
  return spec;
}

ExperimentKind parse_experiment(const RawConfig& raw) {
  const std::string kind = raw.get_or("experiment", "kind", "simulate");
  if (kind == "simulate") return ExperimentKind::Simulate;
  if (kind == "stability") return ExperimentKind::Stability;
  if (kind == "aggregate") return ExperimentKind::Aggregate;
  if (kind == "sharpness") return ExperimentKind::Sharpness;
  if (kind == "instability") return ExperimentKind::Instability;
  if (kind == "evi_check") return ExperimentKind::EviCheck;
  throw ConfigError(raw.origin + ": unknown experiment.kind '" + kind + "'");
}

void cross_validate(const ScenarioConfig& cfg, const std::string& origin) {
  const bool pacman = cfg.domain->kind_name() == "pacman_sector";
  if (pacman && cfg.experiment != ExperimentKind::Instability)
    throw ConfigError(origin + ": pacman_sector is not prox-regular and is only "
                      "usable by the instability experiment");
  if (cfg.experiment == ExperimentKind::Aggregate) {
    if (!cfg.V.is_zero())
      throw ConfigError(origin + ": aggregate requires potential.V = zero");
    if (!(cfg.W.lambda() > 0.0))
      throw ConfigError(origin + ": aggregate requires lambda_W > 0");
    if (!cfg.domain->bounded())
      throw ConfigError(origin + ": aggregate requires a bounded domain");
  }
  if ((cfg.experiment == ExperimentKind::Stability ||
       cfg.experiment == ExperimentKind::Instability) &&
      !cfg.initial2)
    throw ConfigError(origin + ": this experiment needs an [initial2] section");
  if (!(cfg.scheme.dt > 0.0) || !(cfg.scheme.t_end > 0.0))
    throw ConfigError(origin + ": scheme.dt and scheme.t_end must be positive");
}

}  // namespace

ScenarioConfig parse_config_text(const std::string& text, const std::string& origin) {
  const RawConfig raw = tokenize(text, origin);

  // Key inventory check: diagnose typos instead of ignoring them.
  static const std::map<std::string, std::set<std::string>> known = {
      {"", {"seed"}},
      {"domain",
       {"kind", "normal", "offset", "center", "radius", "lo", "hi", "vertices", "r_in",
        "r_out", "theta_min", "theta_max", "bite_center", "bite_radius", "r_max",
        "eta_override"}},
      {"potential.W", {"kind", "params"}},
      {"potential.V", {"kind", "params"}},
      {"potential.ladder", {"radii"}},
      {"initial", {"recipe", "n", "seed", "radius", "grid_per_axis", "points", "file"}},
      {"initial2", {"recipe", "n", "seed", "radius", "grid_per_axis", "points", "file"}},
      {"scheme", {"scheme", "dt", "t_end", "record_every"}},
      {"experiment",
       {"kind", "slack", "rate_slack", "evi_n_ref", "evi_h", "evi_burn_in"}},
      {"output", {"dir", "snapshots"}},
  };
  for (const auto& [sec, kv] : raw.sections) {
    const auto it = known.find(sec);
    if (it == known.end())
      throw ConfigError(origin + ": unknown section [" + sec + "]");
    for (const auto& [key, value] : kv)
      if (!it->second.count(key))
        throw ConfigError(origin + ": unknown key '" + sec + "." + key + "'");
  }

  ScenarioConfig cfg;
  cfg.seed = static_cast<std::uint64_t>(raw.get_long_or("", "seed", 0));
  cfg.domain = build_domain(raw);
  cfg.W = build_potential(raw, "potential.W");
  cfg.V = build_potential(raw, "potential.V");
  if (raw.has("potential.ladder", "radii"))
    cfg.ladder_radii = raw.get_numbers("potential.ladder", "radii");

  cfg.initial = build_initial(raw, "initial", cfg.seed);
  if (raw.sections.count("initial2"))
    cfg.initial2 = build_initial(raw, "initial2", cfg.seed + 1);

  const std::string scheme = raw.get_or("scheme", "scheme", "catching_up");
  if (scheme == "catching_up")
    cfg.scheme.scheme = Scheme::CatchingUp;
  else if (scheme == "projected_euler")
    cfg.scheme.scheme = Scheme::ProjectedEuler;
  else
    throw ConfigError(origin + ": unknown scheme.scheme '" + scheme + "'");
  cfg.scheme.dt = raw.get_double_or("scheme", "dt", 1e-3);
  cfg.scheme.t_end = raw.get_double_or("scheme", "t_end", 1.0);
  cfg.scheme.record_every = static_cast<int>(raw.get_long_or("scheme", "record_every", 1));

  cfg.experiment = parse_experiment(raw);
  cfg.slack = raw.get_double_or("experiment", "slack", 1e-2);
  cfg.rate_slack = raw.get_double_or("experiment", "rate_slack", 0.05);
  cfg.evi_n_ref = static_cast<int>(raw.get_long_or("experiment", "evi_n_ref", 20));
  cfg.evi_h = raw.get_double_or("experiment", "evi_h", 1e-4);
  cfg.evi_burn_in = raw.get_double_or("experiment", "evi_burn_in", 1.0);

  cfg.output_dir = raw.get_or("output", "dir", "run");
  cfg.snapshots = raw.get_long_or("output", "snapshots", 0) != 0;

  cross_validate(cfg, origin);
  return cfg;
}

ScenarioConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str(), path);
}

std::string default_output_root() {
  if (const char* env = std::getenv("PROXFLOW_OUTPUT_ROOT")) return env;
  return "out";
}

}  // namespace proxflow
