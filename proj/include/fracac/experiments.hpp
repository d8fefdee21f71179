#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fracac/analysis.hpp"
#include "fracac/config.hpp"

namespace fracac {

struct ConvergenceRow {
  double dt = 0.0;
  int dims = 2;
  std::array<double, 3> h{0.0, 0.0, 0.0};
  double cpu_seconds = 0.0;
  double error_plain = 0.0;
  std::optional<double> order_plain;
  std::optional<double> error_extrapolated;
  std::optional<double> order_extrapolated;
};

/// Runs the manufactured-solution problem at every refinement level and
/// measures max-norm errors at t_end, with and without extrapolation.
std::vector<ConvergenceRow> run_convergence(const RunManifest& m);

/// CSV with header dt,hx,hy,hz,cpu_s,err_plain,order_plain,err_extrap,order_extrap.
/// Undefined cells (orders of the first row, hz in 2D, extrapolated columns
/// without extrapolation) are left empty.
std::string convergence_csv(const std::vector<ConvergenceRow>& rows);
/// Fixed-width table for terminals.
std::string convergence_table(const std::vector<ConvergenceRow>& rows);

struct SimulationResult {
  std::vector<double> max_trace;
  std::optional<long> first_violation;
  MaxPrincipleWindow window;
  std::vector<std::string> snapshot_paths;
  std::string trace_path;
  std::string summary;
  Field final;
};

/// Time-steps from the configured initial condition, writing FACF1 snapshots at
/// the requested times (nearest completed step), a per-step max-norm CSV and a
/// summary line into the manifest's output directory.
SimulationResult run_simulation(const RunManifest& m);

/// Initial field for the manifest (manufactured, seeded random, or file).
Field initial_field(const RunManifest& m, const SolverConfig& level);

/// Window for the manifest's alpha, eps and meshsizes under both constants.
std::string window_report(const RunManifest& m);

/// CSV of amplification factors over phase_samples^dims phase combinations
/// (betas from dt, eps and the meshsizes) followed by a "# max" line.
struct AmplificationSweep {
  std::string csv;
  double max_modulus = 0.0;
};
AmplificationSweep amplification_report(const RunManifest& m);

}  // namespace fracac
