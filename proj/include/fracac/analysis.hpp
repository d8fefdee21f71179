#pragma once

#include <optional>
#include <vector>

#include "fracac/direction_operator.hpp"
#include "fracac/grid.hpp"
#include "fracac/stepper.hpp"

namespace fracac {

/// One axis of a von Neumann query.
struct AmplificationAxis {
  double beta = 0.0;
  double phase = 0.0;  ///< w in [0, 2 pi)
  int m = 2;           ///< intervals along the axis; the symbol sums over |s| <= m-1
  /// Node index i in 1..m-1 selecting the asymmetric range s in [i-m+1, i-1];
  /// the full symmetric range [-(m-1), m-1] when absent.
  std::optional<int> node;
};

struct AmplificationQuery {
  double alpha = 2.0;
  SpatialOrder order = SpatialOrder::fourth;
  std::vector<AmplificationAxis> axes;
};

/// Per-axis factor |(a - beta S)/(a + beta S)| with a = 1 + alpha (cos w - 1)/12
/// (a = 1 for second order) and S = sum_s c_s e^{-i s w}.
double amplification_axis_factor(double alpha, SpatialOrder order, const AmplificationAxis& axis);
/// Product of the per-axis factors.
double amplification_factor(const AmplificationQuery& q);

enum class WindowConstant {
  as_printed,   ///< upper constant (12 - alpha)/6
  as_computed,  ///< upper constant (12 - alpha)/12 (default)
};

struct MaxPrincipleWindow {
  double dt_min = 0.0;
  double dt_max = 0.0;
  WindowConstant constant = WindowConstant::as_computed;
};

/// Time-step window that keeps ||U^n||_inf <= 1.
///  fourth order: (alpha+2)/12 max(h^alpha)/(eps^2 c0) <= dt <= K min(h^alpha)/(eps^2 c0)
///  second order: dt <= 2 min(h^alpha)/(eps^2 c0)
MaxPrincipleWindow max_principle_window(double alpha, double eps, const std::vector<double>& meshsizes,
                                        SpatialOrder order = SpatialOrder::fourth,
                                        WindowConstant constant = WindowConstant::as_computed);

constexpr double kMaxPrincipleTolerance = 1e-12;

struct MaxTrack {
  std::vector<double> max_trace;
  std::optional<long> first_violation;  ///< earliest n with ||U^n|| > 1 + 1e-12 (or NaN)
};
MaxTrack track_max(const RunReport& report);

/// Max over interior nodes of |numeric - exact|.
double error_norm(const Field& numeric, const Field& exact);

/// order[k] = log2(errors[k] / errors[k+1]) for a 2x refinement sequence.
std::vector<double> observed_order(const std::vector<double>& errors);

}  // namespace fracac
