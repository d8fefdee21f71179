#include "fracac/toeplitz_fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace fracac {
namespace {

// The FFTW planner is not re-entrant.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

fftw_complex* as_fftw(std::complex<double>* p) { return reinterpret_cast<fftw_complex*>(p); }

}  // namespace

struct SymmetricToeplitzFft::Plans {
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;
  ~Plans() {
    std::lock_guard lock(planner_mutex());
    if (forward) fftw_destroy_plan(forward);
    if (backward) fftw_destroy_plan(backward);
  }
};

SymmetricToeplitzFft::SymmetricToeplitzFft(std::span<const double> first_column)
    : n_(first_column.size()), padded_(2 * first_column.size()), plans_(std::make_unique<Plans>()) {
  if (n_ == 0) throw std::invalid_argument("Toeplitz matrix must be non-empty");

  std::vector<double> real(padded_, 0.0);
  std::vector<std::complex<double>> spec(padded_ / 2 + 1);
  {
    std::lock_guard lock(planner_mutex());
    const int len = static_cast<int>(padded_);
    plans_->forward = fftw_plan_dft_r2c_1d(len, real.data(), as_fftw(spec.data()),
                                           FFTW_ESTIMATE | FFTW_UNALIGNED);
    plans_->backward = fftw_plan_dft_c2r_1d(len, as_fftw(spec.data()), real.data(),
                                            FFTW_ESTIMATE | FFTW_UNALIGNED);
  }
  if (!plans_->forward || !plans_->backward) throw std::runtime_error("FFTW planning failed");

  // Circulant column [t0 .. t_{n-1}, 0, t_{n-1} .. t1].
  for (std::size_t k = 0; k < n_; ++k) real[k] = first_column[k];
  for (std::size_t k = 1; k < n_; ++k) real[padded_ - k] = first_column[k];
  fftw_execute_dft_r2c(plans_->forward, real.data(), as_fftw(spec.data()));
  const double scale = 1.0 / static_cast<double>(padded_);
  eigenvalues_.resize(spec.size());
  for (std::size_t k = 0; k < spec.size(); ++k) eigenvalues_[k] = spec[k] * scale;
}

SymmetricToeplitzFft::~SymmetricToeplitzFft() = default;

SymmetricToeplitzFft::Workspace SymmetricToeplitzFft::make_workspace() const {
  return {std::vector<double>(padded_), std::vector<std::complex<double>>(padded_ / 2 + 1)};
}

void SymmetricToeplitzFft::apply(std::span<const double> in, std::span<double> out,
                                 Workspace& ws) const {
  if (in.size() != n_ || out.size() != n_)
    throw std::invalid_argument("Toeplitz apply: size mismatch");
  std::fill(ws.real.begin(), ws.real.end(), 0.0);
  std::copy(in.begin(), in.end(), ws.real.begin());
  fftw_execute_dft_r2c(plans_->forward, ws.real.data(), as_fftw(ws.spectrum.data()));
  for (std::size_t k = 0; k < ws.spectrum.size(); ++k) ws.spectrum[k] *= eigenvalues_[k];
  fftw_execute_dft_c2r(plans_->backward, as_fftw(ws.spectrum.data()), ws.real.data());
  std::copy(ws.real.begin(), ws.real.begin() + static_cast<std::ptrdiff_t>(n_), out.begin());
}

}  // namespace fracac
