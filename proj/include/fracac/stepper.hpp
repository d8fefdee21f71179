#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "fracac/direction_operator.hpp"
#include "fracac/grid.hpp"

namespace fracac {

/// Source term g(x, t) added to the fractional diffusion stage. Either a
/// pointwise function, or a sum of products time_k(t) * space_k(x) whose
/// spatial parts the stepper evaluates once per run.
class SourceTerm {
public:
  using Pointwise = std::function<double(double x, double y, double z, double t)>;
  struct Part {
    std::function<double(double t)> time;
    std::function<double(double x, double y, double z)> space;
  };

  explicit SourceTerm(Pointwise g) : pointwise_(std::move(g)) {}
  explicit SourceTerm(std::vector<Part> parts) : parts_(std::move(parts)) {}

  bool separable() const { return !pointwise_; }
  const std::vector<Part>& parts() const { return parts_; }
  double operator()(double x, double y, double z, double t) const;

private:
  Pointwise pointwise_;
  std::vector<Part> parts_;
};

struct SolverConfig {
  double alpha = 1.5;
  double eps = 0.1;
  double dt = 0.0;
  double t_end = 0.0;
  GridShape shape;
  SpatialOrder order = SpatialOrder::fourth;
  bool extrapolate = false;
  std::optional<SourceTerm> source;
  std::uint64_t seed = 0;
  int threads = 1;
  bool fast_explicit = false;
};

/// Number of steps t_end/dt. Throws std::invalid_argument when t_end/dt is
/// not an integer to relative 1e-9, when it is negative, or when extrapolation
/// is requested with an odd count.
long step_count(const SolverConfig& config);

struct RunReport {
  std::vector<double> max_trace;  ///< ||U^n||_inf for n = 0..steps of the dt run
  long steps = 0;
  double dt = 0.0;
  double cpu_seconds = 0.0;
  bool extrapolated = false;
};

struct RunResult {
  Field final;  ///< extrapolated when the config asks for it
  Field plain;  ///< the dt run before extrapolation
  RunReport report;
};

/// u -> u / sqrt(u^2 + (1 - u^2) e^{-dt}): exact flow of u' = (u - u^3)/2 over dt.
double nonlinear_map(double u, double dt);
/// Applies nonlinear_map to every interior node.
void nonlinear_half_step(Field& field, double dt);

/// One ADI operator per active axis.
struct AdiOperators {
  std::vector<DirectionOperator> axes;
};
AdiOperators make_operators(const SolverConfig& config, double dt);

/// Crank-Nicolson ADI step for the fractional diffusion stage: explicit
/// products along z, y, x, then `source_rhs` (if given) added at interior
/// nodes, then implicit solves along x, y, z.
void diffusion_step_adi(Field& field, const AdiOperators& ops, const std::vector<double>* source_rhs = nullptr,
                        int threads = 1, bool fast_explicit = false);

/// Applies the compact average along every axis of a full-grid array (boundary
/// values are used as stencil neighbours). Returns the averaged values at
/// interior nodes; boundary entries of the result are 0.
std::vector<double> average_all_axes(std::span<const double> values, const GridShape& shape, double alpha);

/// Strang splitting stepper for one fixed dt.
class SplittingStepper {
public:
  SplittingStepper(const SolverConfig& config, double dt);

  double dt() const { return dt_; }
  const AdiOperators& operators() const { return ops_; }

  /// Right-hand-side source contribution dt * A g(t_mid) (A = identity for
  /// second order), or empty without a source.
  std::vector<double> source_rhs(double t_mid) const;

  /// U^{n+1} = N(dt) o ADI o N(dt) applied to U^n; advances field time by dt.
  void step(Field& field) const;

private:
  SolverConfig config_;
  double dt_;
  AdiOperators ops_;
  std::vector<std::vector<double>> separable_parts_;
};

/// (4/3) fine - (1/3) coarse.
Field richardson_extrapolate(const Field& fine, const Field& coarse);

/// Advances `initial` to t_end; with extrapolation also runs 2 dt and combines.
RunResult run(const SolverConfig& config, const Field& initial);

}  // namespace fracac
