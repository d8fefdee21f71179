#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "fracac/coefficients.hpp"
#include "fracac/dense.hpp"
#include "fracac/toeplitz_fft.hpp"

namespace fracac {

enum class SpatialOrder { second = 2, fourth = 4 };

/// Throws std::domain_error for anything but 2 or 4.
SpatialOrder spatial_order_from_int(int order);

/// Values along one grid line, both boundary entries included (length m+1).
using LineBuffer = std::vector<double>;

/// out[i] = -sum_{s=1}^{m-1} c_{i-s} line[s] at interior i; boundary entries 0.
LineBuffer apply_frac_difference(const CoefficientTable& table, std::span<const double> line);

/// Compact average (alpha/24, 1 - alpha/12, alpha/24) at interior nodes; boundary entries 0.
LineBuffer apply_averaging(double alpha, std::span<const double> line);

/// One axis of the ADI scheme: the explicit matrix A + beta*Delta and a
/// factorization of the implicit matrix A - beta*Delta, both restricted to the
/// m-1 interior nodes. Delta has entries -c_{|i-j|}; A is the compact average
/// for fourth order and the identity for second order. beta = dt eps^2 / (2 h^alpha).
///
/// Immutable after assembly; all member functions are safe to call concurrently.
class DirectionOperator {
public:
  DirectionOperator(double alpha, double eps, double dt, double h, int m, SpatialOrder order);

  double alpha() const { return alpha_; }
  double meshsize() const { return h_; }
  double beta() const { return beta_; }
  int intervals() const { return m_; }
  std::size_t interior() const { return static_cast<std::size_t>(m_ - 1); }
  SpatialOrder order() const { return order_; }
  const CoefficientTable& coefficients() const { return table_; }

  const DenseMatrix& explicit_matrix() const { return explicit_; }
  const DenseMatrix& implicit_matrix() const { return implicit_; }

  /// out = (A + beta*Delta) in on a row-major block of interior() rows.
  void apply_explicit_block(std::span<const double> in, std::span<double> out, std::size_t ncols) const;
  /// Same product through the circulant-embedding FFT, one column at a time.
  void apply_explicit_fast_block(std::span<const double> in, std::span<double> out,
                                 std::size_t ncols) const;
  /// block <- (A - beta*Delta)^{-1} block.
  void solve_block(std::span<double> block, std::size_t ncols) const;

private:
  double alpha_;
  double h_;
  double beta_;
  int m_;
  SpatialOrder order_;
  CoefficientTable table_;
  DenseMatrix explicit_;
  DenseMatrix implicit_;
  LuFactorization lu_;
  std::shared_ptr<const SymmetricToeplitzFft> toeplitz_;
};

DirectionOperator assemble_direction(double alpha, double eps, double dt, double h, int m,
                                     SpatialOrder order);

/// Interior solve of (A - beta*Delta) x = rhs; rhs boundary entries must be 0.
LineBuffer solve_line(const DirectionOperator& op, std::span<const double> rhs);
/// (A - beta*Delta) line, boundary entries 0.
LineBuffer apply_implicit(const DirectionOperator& op, std::span<const double> line);
/// (A + beta*Delta) line by dense product.
LineBuffer apply_explicit(const DirectionOperator& op, std::span<const double> line);
/// (A + beta*Delta) line through the Toeplitz FFT path.
LineBuffer apply_explicit_fast(const DirectionOperator& op, std::span<const double> line);

}  // namespace fracac
