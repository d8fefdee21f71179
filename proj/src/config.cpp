#include "fracac/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

namespace fracac {
namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

double parse_plain_number(const std::string& key, std::string_view text) {
  double v = 0.0;
  const auto t = trim(text);
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty())
    throw ConfigError(key, "expected a number, got '" + t + "'");
  return v;
}

double parse_number(const std::string& key, std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_plain_number(key, text);
  const double num = parse_plain_number(key, text.substr(0, slash));
  const double den = parse_plain_number(key, text.substr(slash + 1));
  if (den == 0.0) throw ConfigError(key, "zero denominator");
  return num / den;
}

int parse_int(const std::string& key, std::string_view text) {
  const double v = parse_number(key, text);
  if (v != std::floor(v) || std::abs(v) > 1e9) throw ConfigError(key, "expected an integer");
  return static_cast<int>(v);
}

bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw ConfigError(key, "expected true or false, got '" + v + "'");
}

std::vector<double> parse_list(const std::string& key, const std::string& v) {
  std::vector<double> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (trim(item).empty()) continue;
    out.push_back(parse_number(key, item));
  }
  return out;
}

ExperimentKind parse_kind(const std::string& v) {
  if (v == "convergence") return ExperimentKind::convergence;
  if (v == "simulate") return ExperimentKind::simulate;
  if (v == "window") return ExperimentKind::window;
  if (v == "amplification") return ExperimentKind::amplification;
  throw ConfigError("experiment", "unknown experiment '" + v + "'");
}

InitialKind parse_initial(const std::string& v) {
  if (v == "manufactured") return InitialKind::manufactured;
  if (v == "random") return InitialKind::random;
  if (v == "file") return InitialKind::file;
  throw ConfigError("initial", "unknown initial condition '" + v + "'");
}

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys{
      "experiment", "alpha", "eps", "dims", "mx", "my", "mz", "dt", "t_end", "order",
      "extrapolate", "seed", "threads", "fast_explicit", "levels", "snapshots", "out",
      "initial", "init_scale", "init_offset", "init_file", "phase_samples"};
  return keys;
}

}  // namespace

std::string to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::convergence: return "convergence";
    case ExperimentKind::simulate: return "simulate";
    case ExperimentKind::window: return "window";
    case ExperimentKind::amplification: return "amplification";
  }
  return "?";
}

RunManifest parse_config(std::string_view text) {
  std::map<std::string, std::string> kv;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("", "line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    if (!known_keys().contains(key)) throw ConfigError(key, "unknown key");
    if (kv.contains(key)) throw ConfigError(key, "given twice");
    kv[key] = value;
  }

  auto require = [&](const std::string& key) -> const std::string& {
    const auto it = kv.find(key);
    if (it == kv.end()) throw ConfigError(key, "missing required key");
    return it->second;
  };
  auto has = [&](const std::string& key) { return kv.contains(key); };

  RunManifest m;
  m.kind = parse_kind(require("experiment"));
  SolverConfig& s = m.solver;
  s.alpha = parse_number("alpha", require("alpha"));
  s.eps = parse_number("eps", require("eps"));
  s.shape.dims = parse_int("dims", require("dims"));
  s.shape.intervals[0] = parse_int("mx", require("mx"));
  s.shape.intervals[1] = parse_int("my", require("my"));
  if (s.shape.dims == 3) s.shape.intervals[2] = parse_int("mz", require("mz"));
  else if (has("mz")) throw ConfigError("mz", "only valid for dims = 3");

  const bool needs_time = m.kind != ExperimentKind::window;
  if (needs_time || has("dt")) s.dt = parse_number("dt", require("dt"));
  const bool needs_end = m.kind == ExperimentKind::convergence || m.kind == ExperimentKind::simulate;
  if (needs_end) s.t_end = parse_number("t_end", require("t_end"));
  else if (has("t_end")) s.t_end = parse_number("t_end", kv["t_end"]);

  if (has("order")) s.order = [&] {
    try {
      return spatial_order_from_int(parse_int("order", kv["order"]));
    } catch (const std::domain_error& e) {
      throw ConfigError("order", e.what());
    }
  }();
  if (has("extrapolate")) s.extrapolate = parse_bool("extrapolate", kv["extrapolate"]);
  if (has("fast_explicit")) s.fast_explicit = parse_bool("fast_explicit", kv["fast_explicit"]);
  if (has("seed")) {
    const auto& v = kv["seed"];
    std::uint64_t seed = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), seed);
    if (ec != std::errc() || ptr != v.data() + v.size()) throw ConfigError("seed", "expected an unsigned integer");
    s.seed = seed;
  }
  if (has("threads")) s.threads = parse_int("threads", kv["threads"]);
  if (has("levels")) m.levels = parse_int("levels", kv["levels"]);
  if (has("snapshots")) m.snapshot_times = parse_list("snapshots", kv["snapshots"]);
  if (has("out")) m.output_dir = kv["out"];
  if (has("initial")) m.initial = parse_initial(kv["initial"]);
  else if (m.kind == ExperimentKind::simulate) throw ConfigError("initial", "missing required key");
  if (has("init_scale")) m.init_scale = parse_number("init_scale", kv["init_scale"]);
  if (has("init_offset")) m.init_offset = parse_number("init_offset", kv["init_offset"]);
  if (m.initial == InitialKind::file && m.kind == ExperimentKind::simulate) m.init_file = require("init_file");
  if (has("phase_samples")) m.phase_samples = parse_int("phase_samples", kv["phase_samples"]);

  validate_manifest(m);
  return m;
}

void validate_manifest(const RunManifest& m) {
  const SolverConfig& s = m.solver;
  if (!(s.alpha > 1.0 && s.alpha <= 2.0)) throw ConfigError("alpha", "must lie in (1, 2]");
  if (!(s.eps > 0.0)) throw ConfigError("eps", "must be positive");
  if (s.shape.dims != 2 && s.shape.dims != 3) throw ConfigError("dims", "must be 2 or 3");
  const char* names[] = {"mx", "my", "mz"};
  for (int a = 0; a < s.shape.dims; ++a)
    if (s.shape.intervals[static_cast<std::size_t>(a)] < 2) throw ConfigError(names[a], "must be at least 2");
  if (s.threads < 1) throw ConfigError("threads", "must be at least 1");
  if (m.levels < 1) throw ConfigError("levels", "must be at least 1");
  if (m.phase_samples < 1) throw ConfigError("phase_samples", "must be at least 1");

  if (m.kind != ExperimentKind::window && !(s.dt > 0.0)) throw ConfigError("dt", "must be positive");
  if (m.kind == ExperimentKind::convergence || m.kind == ExperimentKind::simulate) {
    if (!(s.t_end >= 0.0)) throw ConfigError("t_end", "must be non-negative");
    if (m.kind == ExperimentKind::simulate && s.extrapolate)
      throw ConfigError("extrapolate", "only supported by the convergence experiment");
    for (const auto& level : refinement_levels(m)) {
      try {
        step_count(level);
      } catch (const std::invalid_argument& e) {
        throw ConfigError("t_end", e.what());
      }
    }
  }
  if (m.kind == ExperimentKind::convergence && m.initial != InitialKind::manufactured)
    throw ConfigError("initial", "convergence studies need the manufactured solution");
  for (double t : m.snapshot_times)
    if (t < 0.0 || t > s.t_end * (1.0 + 1e-12)) throw ConfigError("snapshots", "time outside [0, t_end]");
  if (m.initial == InitialKind::random && m.kind == ExperimentKind::simulate && !(m.init_scale >= 0.0))
    throw ConfigError("init_scale", "must be non-negative");
}

std::vector<SolverConfig> refinement_levels(const RunManifest& m) {
  std::vector<SolverConfig> out;
  SolverConfig level = m.solver;
  for (int l = 0; l < m.levels; ++l) {
    out.push_back(level);
    level.dt *= 0.5;
    for (int a = 0; a < level.shape.dims; ++a) level.shape.intervals[static_cast<std::size_t>(a)] *= 2;
  }
  return out;
}

}  // namespace fracac
