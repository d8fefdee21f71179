#include "fracac/direction_operator.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fracac {
namespace {

void check_line(std::span<const double> line) {
  if (line.size() < 3) throw std::invalid_argument("line must hold at least one interior node");
}

void check_operator_line(const DirectionOperator& op, std::span<const double> line) {
  if (line.size() != op.interior() + 2)
    throw std::invalid_argument("line length " + std::to_string(line.size()) +
                                " does not match operator with m = " + std::to_string(op.intervals()));
}

// Averaging weights: off-diagonal and diagonal of A.
struct AverageWeights {
  double off;
  double diag;
};

AverageWeights average_weights(double alpha, SpatialOrder order) {
  if (order == SpatialOrder::second) return {0.0, 1.0};
  return {alpha / 24.0, 1.0 - alpha / 12.0};
}

}  // namespace

SpatialOrder spatial_order_from_int(int order) {
  if (order == 2) return SpatialOrder::second;
  if (order == 4) return SpatialOrder::fourth;
  throw std::domain_error("spatial order must be 2 or 4, got " + std::to_string(order));
}

LineBuffer apply_frac_difference(const CoefficientTable& table, std::span<const double> line) {
  check_line(line);
  if (line.size() > table.n_max() + 2)
    throw std::invalid_argument("line of length " + std::to_string(line.size()) +
                                " needs more coefficients than the table holds (n_max = " +
                                std::to_string(table.n_max()) + ")");
  const long m = static_cast<long>(line.size()) - 1;
  LineBuffer out(line.size(), 0.0);
  for (long i = 1; i < m; ++i) {
    double acc = 0.0;
    for (long s = 1; s < m; ++s) acc += table[i - s] * line[s];
    out[i] = -acc;
  }
  return out;
}

LineBuffer apply_averaging(double alpha, std::span<const double> line) {
  check_alpha(alpha);
  check_line(line);
  const auto w = average_weights(alpha, SpatialOrder::fourth);
  LineBuffer out(line.size(), 0.0);
  for (std::size_t i = 1; i + 1 < line.size(); ++i)
    out[i] = w.off * line[i - 1] + w.diag * line[i] + w.off * line[i + 1];
  return out;
}

DirectionOperator::DirectionOperator(double alpha, double eps, double dt, double h, int m,
                                     SpatialOrder order)
    : alpha_(alpha), h_(h), beta_(0.0), m_(m), order_(order),
      table_(build_coefficients(alpha, std::max(m - 1, 1))) {
  if (m < 2) throw std::domain_error("direction needs at least 2 intervals");
  if (!(dt > 0.0)) throw std::domain_error("dt must be positive");
  if (!(eps >= 0.0)) throw std::domain_error("eps must be non-negative");
  if (!(h > 0.0)) throw std::domain_error("meshsize must be positive");
  beta_ = dt * eps * eps / (2.0 * std::pow(h, alpha));

  const std::size_t n = interior();
  const auto w = average_weights(alpha, order);
  explicit_ = DenseMatrix(n, n);
  implicit_ = DenseMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const long d = static_cast<long>(i) - static_cast<long>(j);
      const double a = (d == 0) ? w.diag : (d == 1 || d == -1) ? w.off : 0.0;
      const double delta = -table_[d];
      explicit_(i, j) = a + beta_ * delta;
      implicit_(i, j) = a - beta_ * delta;
    }
  }
  // Strict diagonal dominance of the implicit matrix guarantees a pivot-free LU.
  lu_ = LuFactorization(implicit_);

  std::vector<double> column(n);
  for (std::size_t k = 0; k < n; ++k) column[k] = table_[static_cast<long>(k)];
  toeplitz_ = std::make_shared<const SymmetricToeplitzFft>(column);
}

void DirectionOperator::apply_explicit_block(std::span<const double> in, std::span<double> out,
                                             std::size_t ncols) const {
  multiply_block(explicit_, in, out, ncols);
}

void DirectionOperator::apply_explicit_fast_block(std::span<const double> in, std::span<double> out,
                                                  std::size_t ncols) const {
  const std::size_t n = interior();
  const auto w = average_weights(alpha_, order_);
  auto ws = toeplitz_->make_workspace();
  std::vector<double> column(n), conv(n);
  for (std::size_t c = 0; c < ncols; ++c) {
    for (std::size_t i = 0; i < n; ++i) column[i] = in[i * ncols + c];
    toeplitz_->apply(column, conv, ws);
    for (std::size_t i = 0; i < n; ++i) {
      const double left = i > 0 ? column[i - 1] : 0.0;
      const double right = i + 1 < n ? column[i + 1] : 0.0;
      const double averaged = w.off * left + w.diag * column[i] + w.off * right;
      out[i * ncols + c] = averaged - beta_ * conv[i];
    }
  }
}

void DirectionOperator::solve_block(std::span<double> block, std::size_t ncols) const {
  lu_.solve_block(block, ncols);
}

DirectionOperator assemble_direction(double alpha, double eps, double dt, double h, int m,
                                     SpatialOrder order) {
  return DirectionOperator(alpha, eps, dt, h, m, order);
}

namespace {

std::span<const double> interior_of(std::span<const double> line) {
  return line.subspan(1, line.size() - 2);
}

LineBuffer with_boundary(const std::vector<double>& interior) {
  LineBuffer out(interior.size() + 2, 0.0);
  std::copy(interior.begin(), interior.end(), out.begin() + 1);
  return out;
}

}  // namespace

LineBuffer solve_line(const DirectionOperator& op, std::span<const double> rhs) {
  check_operator_line(op, rhs);
  std::vector<double> x(interior_of(rhs).begin(), interior_of(rhs).end());
  op.solve_block(x, 1);
  return with_boundary(x);
}

LineBuffer apply_implicit(const DirectionOperator& op, std::span<const double> line) {
  check_operator_line(op, line);
  std::vector<double> out(op.interior());
  multiply_block(op.implicit_matrix(), interior_of(line), out, 1);
  return with_boundary(out);
}

LineBuffer apply_explicit(const DirectionOperator& op, std::span<const double> line) {
  check_operator_line(op, line);
  std::vector<double> out(op.interior());
  op.apply_explicit_block(interior_of(line), out, 1);
  return with_boundary(out);
}

LineBuffer apply_explicit_fast(const DirectionOperator& op, std::span<const double> line) {
  check_operator_line(op, line);
  std::vector<double> out(op.interior());
  op.apply_explicit_fast_block(interior_of(line), out, 1);
  return with_boundary(out);
}

}  // namespace fracac
