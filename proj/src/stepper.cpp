#include "fracac/stepper.hpp"

#include <cassert>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <string>

#include "fracac/sweep.hpp"

namespace fracac {

double SourceTerm::operator()(double x, double y, double z, double t) const {
  if (pointwise_) return pointwise_(x, y, z, t);
  double g = 0.0;
  for (const auto& p : parts_) g += p.time(t) * p.space(x, y, z);
  return g;
}

long step_count(const SolverConfig& config) {
  if (!(config.dt > 0.0)) throw std::invalid_argument("dt must be positive");
  if (!(config.t_end >= 0.0)) throw std::invalid_argument("t_end must be non-negative");
  const double ratio = config.t_end / config.dt;
  const double n = std::round(ratio);
  if (std::abs(ratio - n) > 1e-9 * std::max(1.0, std::abs(ratio)))
    throw std::invalid_argument("t_end / dt = " + std::to_string(ratio) + " is not an integer step count");
  const long steps = static_cast<long>(n);
  if (config.extrapolate && steps % 2 != 0)
    throw std::invalid_argument("extrapolation needs an even step count, got " + std::to_string(steps));
  return steps;
}

double nonlinear_map(double u, double dt) {
  const double u2 = u * u;
  const double radicand = u2 + (1.0 - u2) * std::exp(-dt);
  assert(radicand > 0.0);
  return u / std::sqrt(radicand);
}

void nonlinear_half_step(Field& field, double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("nonlinear step needs dt > 0");
  const double decay = std::exp(-dt);
  field.for_each_interior([&](std::size_t i, std::size_t j, std::size_t k) {
    double& u = field.at(i, j, k);
    const double u2 = u * u;
    const double radicand = u2 + (1.0 - u2) * decay;
    assert(radicand > 0.0);
    u /= std::sqrt(radicand);
  });
}

AdiOperators make_operators(const SolverConfig& config, double dt) {
  config.shape.validate();
  AdiOperators ops;
  for (int a = 0; a < config.shape.dims; ++a)
    ops.axes.emplace_back(config.alpha, config.eps, dt, config.shape.meshsize(a),
                          config.shape.intervals[static_cast<std::size_t>(a)], config.order);
  return ops;
}

void diffusion_step_adi(Field& field, const AdiOperators& ops, const std::vector<double>* source_rhs,
                        int threads, bool fast_explicit) {
  const int dims = field.dims();
  if (static_cast<int>(ops.axes.size()) != dims)
    throw std::invalid_argument("diffusion step: " + std::to_string(ops.axes.size()) +
                                " operators for a " + std::to_string(dims) + "D field");
  const SweepKind product = fast_explicit ? SweepKind::explicit_fast : SweepKind::explicit_dense;
  for (int a = dims - 1; a >= 0; --a) sweep_axis(field, a, ops.axes[static_cast<std::size_t>(a)], product, threads);

  if (source_rhs) {
    if (source_rhs->size() != field.shape().size())
      throw std::invalid_argument("diffusion step: source size does not match field");
    auto v = field.values();
    field.for_each_interior([&](std::size_t i, std::size_t j, std::size_t k) {
      const std::size_t idx = field.shape().index(i, j, k);
      v[idx] += (*source_rhs)[idx];
    });
  }

  for (int a = 0; a < dims; ++a)
    sweep_axis(field, a, ops.axes[static_cast<std::size_t>(a)], SweepKind::implicit_solve, threads);
}

std::vector<double> average_all_axes(std::span<const double> values, const GridShape& shape, double alpha) {
  if (values.size() != shape.size()) throw std::invalid_argument("average: size mismatch");
  const auto e = shape.extents();
  const std::array<std::size_t, 3> strides{e[1] * e[2], e[2], 1};
  const double off = alpha / 24.0;
  const double diag = 1.0 - alpha / 12.0;

  std::vector<double> cur(values.begin(), values.end());
  std::vector<double> next(cur.size());
  for (int a = shape.dims - 1; a >= 0; --a) {
    const auto ua = static_cast<std::size_t>(a);
    const std::size_t stride = strides[ua];
    for (std::size_t i = 0; i < e[0]; ++i)
      for (std::size_t j = 0; j < e[1]; ++j)
        for (std::size_t k = 0; k < e[2]; ++k) {
          const std::array<std::size_t, 3> idx{i, j, k};
          const std::size_t p = shape.index(i, j, k);
          if (idx[ua] == 0 || idx[ua] + 1 == e[ua]) {
            next[p] = 0.0;
            continue;
          }
          next[p] = off * cur[p - stride] + diag * cur[p] + off * cur[p + stride];
        }
    std::swap(cur, next);
  }
  for (std::size_t i = 0; i < e[0]; ++i)
    for (std::size_t j = 0; j < e[1]; ++j)
      for (std::size_t k = 0; k < e[2]; ++k)
        if (shape.on_boundary(i, j, k)) cur[shape.index(i, j, k)] = 0.0;
  return cur;
}

namespace {

// Evaluates f at every node of the grid, boundary frame included.
template <class Fn>
std::vector<double> sample_full(const GridShape& shape, Fn&& f) {
  const auto e = shape.extents();
  std::vector<double> out(shape.size());
  for (std::size_t i = 0; i < e[0]; ++i)
    for (std::size_t j = 0; j < e[1]; ++j)
      for (std::size_t k = 0; k < e[2]; ++k) {
        const double z = shape.dims == 3 ? shape.coordinate(2, k) : 0.0;
        out[shape.index(i, j, k)] = f(shape.coordinate(0, i), shape.coordinate(1, j), z);
      }
  return out;
}

// A g at interior nodes for fourth order, g itself otherwise; boundary 0.
std::vector<double> spatial_operator_on_source(std::vector<double> g, const GridShape& shape, double alpha,
                                               SpatialOrder order) {
  if (order == SpatialOrder::fourth) return average_all_axes(g, shape, alpha);
  const auto e = shape.extents();
  for (std::size_t i = 0; i < e[0]; ++i)
    for (std::size_t j = 0; j < e[1]; ++j)
      for (std::size_t k = 0; k < e[2]; ++k)
        if (shape.on_boundary(i, j, k)) g[shape.index(i, j, k)] = 0.0;
  return g;
}

}  // namespace

SplittingStepper::SplittingStepper(const SolverConfig& config, double dt)
    : config_(config), dt_(dt), ops_(make_operators(config, dt)) {
  if (config_.source && config_.source->separable()) {
    for (const auto& part : config_.source->parts())
      separable_parts_.push_back(
          spatial_operator_on_source(sample_full(config_.shape, part.space), config_.shape, config_.alpha, config_.order));
  }
}

std::vector<double> SplittingStepper::source_rhs(double t_mid) const {
  if (!config_.source) return {};
  const SourceTerm& src = *config_.source;
  if (!src.separable()) {
    auto g = sample_full(config_.shape, [&](double x, double y, double z) { return src(x, y, z, t_mid); });
    auto rhs = spatial_operator_on_source(std::move(g), config_.shape, config_.alpha, config_.order);
    for (double& v : rhs) v *= dt_;
    return rhs;
  }
  std::vector<double> rhs(config_.shape.size(), 0.0);
  for (std::size_t p = 0; p < separable_parts_.size(); ++p) {
    const double w = dt_ * src.parts()[p].time(t_mid);
    const auto& s = separable_parts_[p];
    for (std::size_t q = 0; q < rhs.size(); ++q) rhs[q] += w * s[q];
  }
  return rhs;
}

void SplittingStepper::step(Field& field) const {
  if (!(field.shape() == config_.shape)) throw std::invalid_argument("step: field shape does not match config");
  const double t0 = field.time();
  nonlinear_half_step(field, dt_);
  if (config_.source) {
    const auto rhs = source_rhs(t0 + 0.5 * dt_);
    diffusion_step_adi(field, ops_, &rhs, config_.threads, config_.fast_explicit);
  } else {
    diffusion_step_adi(field, ops_, nullptr, config_.threads, config_.fast_explicit);
  }
  nonlinear_half_step(field, dt_);
  field.set_time(t0 + dt_);
}

Field richardson_extrapolate(const Field& fine, const Field& coarse) {
  if (!(fine.shape() == coarse.shape())) throw std::invalid_argument("extrapolation: grid shapes differ");
  if (std::abs(fine.time() - coarse.time()) > 1e-9 * std::max(1.0, std::abs(fine.time())))
    throw std::invalid_argument("extrapolation: final times differ");
  Field out(fine.shape(), fine.time());
  auto o = out.values();
  const auto f = fine.values();
  const auto c = coarse.values();
  for (std::size_t q = 0; q < o.size(); ++q) o[q] = (4.0 * f[q] - c[q]) / 3.0;
  return out;
}

namespace {

Field advance(const SolverConfig& config, const Field& initial, double dt, long steps,
              std::vector<double>* trace) {
  Field u = initial;
  if (trace) trace->push_back(u.max_abs());
  if (steps == 0) return u;
  const SplittingStepper stepper(config, dt);
  const double t0 = initial.time();
  for (long n = 1; n <= steps; ++n) {
    stepper.step(u);
    u.set_time(t0 + static_cast<double>(n) * dt);
    if (trace) trace->push_back(u.max_abs());
  }
  return u;
}

}  // namespace

RunResult run(const SolverConfig& config, const Field& initial) {
  check_alpha(config.alpha);
  if (!(config.eps > 0.0)) throw std::invalid_argument("eps must be positive");
  if (!(initial.shape() == config.shape)) throw std::invalid_argument("initial field shape does not match config");
  if (!initial.boundary_is_zero()) throw std::invalid_argument("initial field violates the zero boundary frame");
  const long steps = step_count(config);

  const auto start = std::chrono::steady_clock::now();
  RunReport report;
  report.steps = steps;
  report.dt = config.dt;
  Field fine = advance(config, initial, config.dt, steps, &report.max_trace);

  Field final = fine;
  if (config.extrapolate && steps > 0) {
    const Field coarse = advance(config, initial, 2.0 * config.dt, steps / 2, nullptr);
    final = richardson_extrapolate(fine, coarse);
    report.extrapolated = true;
  }
  report.cpu_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {std::move(final), std::move(fine), std::move(report)};
}

}  // namespace fracac
