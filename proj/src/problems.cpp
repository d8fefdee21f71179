#include "fracac/problems.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace fracac {
namespace {

// Binomial expansion x^4 (1-x)^4 = x^4 - 4x^5 + 6x^6 - 4x^7 + x^8.
constexpr std::array<int, 5> kBumpCoeffs{1, -4, 6, -4, 1};

double riesz_prefactor(double alpha) { return 1.0 / (2.0 * std::cos(alpha * std::numbers::pi / 2.0)); }

}  // namespace

double bump(double x) {
  const double p = x * (1.0 - x);
  return p * p * p * p;
}

double bump_rl_sum(double alpha, double x) {
  double acc = 0.0;
  for (int q = 0; q < 5; ++q) {
    const int k = q + 4;
    const double g = std::tgamma(k + 1.0) / std::tgamma(k + 1.0 - alpha);
    acc += kBumpCoeffs[static_cast<std::size_t>(q)] * g * (std::pow(x, k - alpha) + std::pow(1.0 - x, k - alpha));
  }
  return acc;
}

double exact_solution(const ManufacturedCase& c, double x, double y, double z, double t) {
  return c.exact(x, y, z, t);
}

double ManufacturedCase::exact(double x, double y, double z, double t) const {
  const double p = bump(x) * bump(y) * (dims == 3 ? bump(z) : 1.0);
  return std::exp(-t) * p;
}

double source_term_2d(double alpha, double eps, double x, double y, double t) {
  check_alpha(alpha);
  const double px = bump(x), py = bump(y);
  const double frac = eps * eps * riesz_prefactor(alpha) * std::exp(-t) *
                      (bump_rl_sum(alpha, x) * py + bump_rl_sum(alpha, y) * px);
  const double p = px * py;
  return frac + std::exp(-3.0 * t) * p * p * p - 2.0 * std::exp(-t) * p;
}

double source_term_3d(double alpha, double eps, double x, double y, double z, double t) {
  check_alpha(alpha);
  const double px = bump(x), py = bump(y), pz = bump(z);
  const double frac = eps * eps * riesz_prefactor(alpha) * std::exp(-t) *
                      (bump_rl_sum(alpha, x) * py * pz + bump_rl_sum(alpha, y) * px * pz +
                       bump_rl_sum(alpha, z) * px * py);
  const double p = px * py * pz;
  return frac + std::exp(-3.0 * t) * p * p * p - 2.0 * std::exp(-t) * p;
}

double ManufacturedCase::source(double x, double y, double z, double t) const {
  return dims == 3 ? source_term_3d(alpha, eps, x, y, z, t) : source_term_2d(alpha, eps, x, y, t);
}

SourceTerm ManufacturedCase::source_term() const {
  check_alpha(alpha);
  const ManufacturedCase c = *this;
  // g = e^{-t} S1 + e^{-3t} S3 with S1 = eps^2/(2cos) sum_axis R(axis) prod_other P - 2 prod P
  // and S3 = (prod P)^3.
  auto s1 = [c](double x, double y, double z) {
    const double pref = c.eps * c.eps * riesz_prefactor(c.alpha);
    const double px = bump(x), py = bump(y);
    if (c.dims == 2) return pref * (bump_rl_sum(c.alpha, x) * py + bump_rl_sum(c.alpha, y) * px) - 2.0 * px * py;
    const double pz = bump(z);
    return pref * (bump_rl_sum(c.alpha, x) * py * pz + bump_rl_sum(c.alpha, y) * px * pz +
                   bump_rl_sum(c.alpha, z) * px * py) -
           2.0 * px * py * pz;
  };
  auto s3 = [c](double x, double y, double z) {
    const double p = bump(x) * bump(y) * (c.dims == 3 ? bump(z) : 1.0);
    return p * p * p;
  };
  return SourceTerm(std::vector<SourceTerm::Part>{
      {[](double t) { return std::exp(-t); }, s1},
      {[](double t) { return std::exp(-3.0 * t); }, s3},
  });
}

Field ManufacturedCase::exact_field(const GridShape& shape, double t) const {
  if (shape.dims != dims) throw std::invalid_argument("exact field: dimension mismatch");
  return sample_field(shape, t, [&](double x, double y, double z) { return exact(x, y, z, t); });
}

Field random_initial(const RandomInitial& spec, const GridShape& shape) {
  std::mt19937_64 gen(spec.seed);
  Field out(shape, 0.0);
  out.for_each_interior([&](std::size_t i, std::size_t j, std::size_t k) {
    const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
    out.at(i, j, k) = spec.scale * u + spec.offset;
  });
  return out;
}

}  // namespace fracac
