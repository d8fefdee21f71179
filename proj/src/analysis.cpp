#include "fracac/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace fracac {

double amplification_axis_factor(double alpha, SpatialOrder order, const AmplificationAxis& axis) {
  check_alpha(alpha);
  if (axis.m < 2) throw std::domain_error("amplification: m must be at least 2");
  if (!std::isfinite(axis.phase)) throw std::domain_error("amplification: phase must be finite");
  const auto table = build_coefficients(alpha, axis.m - 1);

  long lo = -(axis.m - 1), hi = axis.m - 1;
  if (axis.node) {
    const int i = *axis.node;
    if (i < 1 || i > axis.m - 1) throw std::domain_error("amplification: node index out of range");
    lo = i - axis.m + 1;
    hi = i - 1;
  }
  std::complex<double> symbol = 0.0;
  for (long s = lo; s <= hi; ++s)
    symbol += table[s] * std::polar(1.0, -static_cast<double>(s) * axis.phase);

  const double a = order == SpatialOrder::fourth ? 1.0 + alpha * (std::cos(axis.phase) - 1.0) / 12.0 : 1.0;
  return std::abs((a - axis.beta * symbol) / (a + axis.beta * symbol));
}

double amplification_factor(const AmplificationQuery& q) {
  double g = 1.0;
  for (const auto& axis : q.axes) g *= amplification_axis_factor(q.alpha, q.order, axis);
  return g;
}

MaxPrincipleWindow max_principle_window(double alpha, double eps, const std::vector<double>& meshsizes,
                                        SpatialOrder order, WindowConstant constant) {
  check_alpha(alpha);
  if (!(eps > 0.0)) throw std::domain_error("window: eps must be positive");
  if (meshsizes.empty()) throw std::domain_error("window: no meshsizes");
  double hmin = INFINITY, hmax = 0.0;
  for (double h : meshsizes) {
    if (!(h > 0.0)) throw std::domain_error("window: meshsizes must be positive");
    hmin = std::min(hmin, std::pow(h, alpha));
    hmax = std::max(hmax, std::pow(h, alpha));
  }
  const double c0 = build_coefficients(alpha, 1).coeffs()[0];
  const double scale = eps * eps * c0;

  MaxPrincipleWindow w;
  w.constant = constant;
  if (order == SpatialOrder::second) {
    w.dt_min = 0.0;
    w.dt_max = 2.0 * hmin / scale;
    return w;
  }
  const double upper = constant == WindowConstant::as_printed ? (12.0 - alpha) / 6.0 : (12.0 - alpha) / 12.0;
  w.dt_min = (alpha + 2.0) / 12.0 * hmax / scale;
  w.dt_max = upper * hmin / scale;
  return w;
}

MaxTrack track_max(const RunReport& report) {
  MaxTrack t;
  t.max_trace = report.max_trace;
  for (std::size_t n = 0; n < t.max_trace.size(); ++n) {
    const double v = t.max_trace[n];
    if (!(v <= 1.0 + kMaxPrincipleTolerance)) {
      t.first_violation = static_cast<long>(n);
      break;
    }
  }
  return t;
}

double error_norm(const Field& numeric, const Field& exact) {
  if (!(numeric.shape() == exact.shape())) throw std::invalid_argument("error norm: grid shapes differ");
  double e = 0.0;
  numeric.for_each_interior([&](std::size_t i, std::size_t j, std::size_t k) {
    const double d = std::abs(numeric.at(i, j, k) - exact.at(i, j, k));
    e = std::isnan(d) ? d : std::max(e, d);
  });
  return e;
}

std::vector<double> observed_order(const std::vector<double>& errors) {
  for (double e : errors)
    if (!(e > 0.0)) throw std::domain_error("observed order needs positive errors");
  std::vector<double> orders;
  for (std::size_t k = 1; k < errors.size(); ++k) orders.push_back(std::log2(errors[k - 1] / errors[k]));
  return orders;
}

}  // namespace fracac
