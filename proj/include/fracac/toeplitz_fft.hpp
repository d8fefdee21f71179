#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace fracac {

/// Matrix-vector product with a symmetric Toeplitz matrix through a circulant
/// embedding of size 2n and real FFTs. O(n log n) per product.
class SymmetricToeplitzFft {
public:
  /// first_column[k] is the entry on the k-th off-diagonal, k = 0..n-1.
  explicit SymmetricToeplitzFft(std::span<const double> first_column);
  ~SymmetricToeplitzFft();
  SymmetricToeplitzFft(const SymmetricToeplitzFft&) = delete;
  SymmetricToeplitzFft& operator=(const SymmetricToeplitzFft&) = delete;

  std::size_t size() const { return n_; }

  struct Workspace {
    std::vector<double> real;
    std::vector<std::complex<double>> spectrum;
  };
  Workspace make_workspace() const;

  /// out = T in. Safe to call concurrently with distinct workspaces.
  void apply(std::span<const double> in, std::span<double> out, Workspace& ws) const;

private:
  std::size_t n_;
  std::size_t padded_;
  std::vector<std::complex<double>> eigenvalues_;
  struct Plans;
  std::unique_ptr<Plans> plans_;
};

}  // namespace fracac
