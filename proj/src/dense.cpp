#include "fracac/dense.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace fracac {

LuFactorization::LuFactorization(const DenseMatrix& a) : lu_(a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("LU factorization needs a square matrix");
  for (std::size_t k = 0; k < n; ++k) {
    const double pivot = lu_(k, k);
    if (!(std::abs(pivot) > 0.0) || !std::isfinite(pivot))
      throw std::runtime_error("LU factorization met a vanishing pivot");
    for (std::size_t i = k + 1; i < n; ++i) {
      const double l = lu_(i, k) / pivot;
      lu_(i, k) = l;
      if (l == 0.0) continue;
      for (std::size_t j = k + 1; j < n; ++j) lu_(i, j) -= l * lu_(k, j);
    }
  }
}

void LuFactorization::solve_block(std::span<double> block, std::size_t ncols) const {
  const std::size_t n = lu_.rows();
  assert(block.size() >= n * ncols);
  double* b = block.data();

  for (std::size_t i = 1; i < n; ++i) {
    double* ri = b + i * ncols;
    for (std::size_t s = 0; s < i; ++s) {
      const double l = lu_(i, s);
      if (l == 0.0) continue;
      const double* rs = b + s * ncols;
      for (std::size_t c = 0; c < ncols; ++c) ri[c] -= l * rs[c];
    }
  }
  for (std::size_t i = n; i-- > 0;) {
    double* ri = b + i * ncols;
    for (std::size_t s = i + 1; s < n; ++s) {
      const double u = lu_(i, s);
      if (u == 0.0) continue;
      const double* rs = b + s * ncols;
      for (std::size_t c = 0; c < ncols; ++c) ri[c] -= u * rs[c];
    }
    const double d = lu_(i, i);
    for (std::size_t c = 0; c < ncols; ++c) ri[c] /= d;
  }
}

void multiply_block(const DenseMatrix& m, std::span<const double> in, std::span<double> out,
                    std::size_t ncols) {
  assert(in.size() >= m.cols() * ncols && out.size() >= m.rows() * ncols);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    double* ro = out.data() + i * ncols;
    for (std::size_t c = 0; c < ncols; ++c) ro[c] = 0.0;
    for (std::size_t s = 0; s < m.cols(); ++s) {
      const double v = m(i, s);
      if (v == 0.0) continue;
      const double* rs = in.data() + s * ncols;
      for (std::size_t c = 0; c < ncols; ++c) ro[c] += v * rs[c];
    }
  }
}

}  // namespace fracac
