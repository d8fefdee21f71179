#pragma once

#include <cstdint>

#include "fracac/grid.hpp"
#include "fracac/stepper.hpp"

namespace fracac {

/// Smooth manufactured solution u = e^{-t} prod_axes x^4 (1-x)^4 on the unit
/// square/cube, with the source that makes it solve the forced equation
/// u_t = eps^2 L_alpha u - (u^3 - u) + g.
struct ManufacturedCase {
  int dims = 2;
  double alpha = 1.5;
  double eps = 0.1;

  double exact(double x, double y, double z, double t) const;
  double source(double x, double y, double z, double t) const;
  /// The same source split as e^{-t} S1(x) + e^{-3t} S3(x).
  SourceTerm source_term() const;
  Field exact_field(const GridShape& shape, double t) const;
};

/// x^4 (1-x)^4.
double bump(double x);
/// Left plus right Riemann-Liouville derivative of order alpha of bump(x) on
/// [0,1]: sum_k a_k Gamma(k+1)/Gamma(k+1-alpha) (x^{k-alpha} + (1-x)^{k-alpha}).
double bump_rl_sum(double alpha, double x);

double exact_solution(const ManufacturedCase& c, double x, double y, double z, double t);
double source_term_2d(double alpha, double eps, double x, double y, double t);
double source_term_3d(double alpha, double eps, double x, double y, double z, double t);

/// u0 = scale * U[0,1) + offset at interior nodes, zero frame.
struct RandomInitial {
  std::uint64_t seed = 0;
  double scale = 1.0;
  double offset = 0.0;
};

/// Uniform deviate in [0, 1) from the top 53 bits of a std::mt19937_64 draw.
/// mt19937_64 is bit-exactly specified by the standard, so fields are
/// reproducible across platforms.
Field random_initial(const RandomInitial& spec, const GridShape& shape);

}  // namespace fracac
