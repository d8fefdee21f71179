#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace fracac {

/// Row-major dense square-or-rectangular matrix.
class DenseMatrix {
public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const double> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::span<const double> data() const { return data_; }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// LU factorization without pivoting, A = L U with unit lower L.
/// Only valid for matrices where elimination never meets a zero pivot; the
/// operators assembled here are strictly diagonally dominant, which suffices.
class LuFactorization {
public:
  LuFactorization() = default;
  /// Throws std::runtime_error on a vanishing pivot.
  explicit LuFactorization(const DenseMatrix& a);

  std::size_t size() const { return lu_.rows(); }

  /// Solves in place for every column of a row-major block with `ncols`
  /// columns and size() rows.
  void solve_block(std::span<double> block, std::size_t ncols) const;

private:
  DenseMatrix lu_;
};

}  // namespace fracac

namespace fracac {

/// out = m * in, where in/out are row-major blocks of m.cols() (resp. m.rows())
/// rows and `ncols` columns. Each output column is accumulated in ascending
/// column order of m, independent of ncols.
void multiply_block(const DenseMatrix& m, std::span<const double> in, std::span<double> out,
                    std::size_t ncols);

}  // namespace fracac
