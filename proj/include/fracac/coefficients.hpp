#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace fracac {

/// Weights c_s of the fractional centered difference, stored for s = 0..n_max.
/// The stencil is symmetric, c_{-s} = c_s.
class CoefficientTable {
public:
  CoefficientTable(double alpha, std::vector<double> coeffs);

  double alpha() const { return alpha_; }
  std::size_t n_max() const { return coeffs_.size() - 1; }
  std::span<const double> coeffs() const { return coeffs_; }

  /// c_s for any |s| <= n_max.
  double operator[](long s) const { return coeffs_[static_cast<std::size_t>(s < 0 ? -s : s)]; }

private:
  double alpha_;
  std::vector<double> coeffs_;
};

/// Throws std::domain_error unless 1 < alpha <= 2.
void check_alpha(double alpha);

/// c_0 = Gamma(alpha+1) / Gamma(alpha/2+1)^2, then
/// c_s = (1 - (alpha+1)/(alpha/2+s)) c_{s-1}.
CoefficientTable build_coefficients(double alpha, int n_max);

}  // namespace fracac
