#include "fracac/coefficients.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fracac {

CoefficientTable::CoefficientTable(double alpha, std::vector<double> coeffs)
    : alpha_(alpha), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("coefficient table must hold c_0");
}

void check_alpha(double alpha) {
  if (!(alpha > 1.0 && alpha <= 2.0))
    throw std::domain_error("alpha must lie in (1, 2], got " + std::to_string(alpha));
}

CoefficientTable build_coefficients(double alpha, int n_max) {
  check_alpha(alpha);
  if (n_max < 1) throw std::domain_error("n_max must be at least 1");

  std::vector<double> c(static_cast<std::size_t>(n_max) + 1);
  // Gamma arguments stay in (1, 3], so direct evaluation cannot overflow and is
  // exact at alpha = 2.
  const double g = std::tgamma(0.5 * alpha + 1.0);
  c[0] = std::tgamma(alpha + 1.0) / (g * g);
  for (int s = 1; s <= n_max; ++s)
    c[s] = (1.0 - (alpha + 1.0) / (0.5 * alpha + s)) * c[s - 1];
  return CoefficientTable(alpha, std::move(c));
}

}  // namespace fracac
