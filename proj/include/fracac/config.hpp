#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fracac/stepper.hpp"

namespace fracac {

/// Configuration problem tied to a key (empty for whole-file problems).
class ConfigError : public std::runtime_error {
public:
  ConfigError(std::string key, const std::string& what)
      : std::runtime_error(key.empty() ? what : key + ": " + what), key_(std::move(key)) {}
  const std::string& key() const { return key_; }

private:
  std::string key_;
};

enum class ExperimentKind { convergence, simulate, window, amplification };
enum class InitialKind { manufactured, random, file };

struct RunManifest {
  ExperimentKind kind = ExperimentKind::convergence;
  /// Level-0 solver settings; the source term is attached by the experiment driver.
  SolverConfig solver;
  int levels = 1;
  std::vector<double> snapshot_times;
  std::string output_dir = ".";
  InitialKind initial = InitialKind::manufactured;
  double init_scale = 1.0;
  double init_offset = 0.0;
  std::string init_file;
  int phase_samples = 64;
};

/// Parses flat `key = value` lines ('#' starts a comment). Numbers may be
/// written as fractions such as 1/16. Unknown keys, missing required keys and
/// out-of-domain values throw ConfigError.
RunManifest parse_config(std::string_view text);

/// Re-checks a manifest after command-line overrides.
void validate_manifest(const RunManifest& m);

/// Solver settings of each refinement level: level l halves dt and every h l times.
std::vector<SolverConfig> refinement_levels(const RunManifest& m);

std::string to_string(ExperimentKind kind);

}  // namespace fracac
