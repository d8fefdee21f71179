#include "fracac/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <sstream>

#include "fracac/field_io.hpp"
#include "fracac/problems.hpp"

namespace fracac {
namespace {

ManufacturedCase manufactured_for(const SolverConfig& s) { return {s.shape.dims, s.alpha, s.eps}; }

std::string cell(const std::optional<double>& v, int precision = 6) {
  if (!v) return {};
  std::ostringstream os;
  os << std::setprecision(precision) << *v;
  return os.str();
}

std::string sci(double v) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(2) << v;
  return os.str();
}

std::string snapshot_name(double t) {
  std::ostringstream os;
  os << "snapshot_t" << std::fixed << std::setprecision(4) << t << ".facf";
  return os.str();
}

}  // namespace

Field initial_field(const RunManifest& m, const SolverConfig& level) {
  switch (m.initial) {
    case InitialKind::manufactured:
      return manufactured_for(level).exact_field(level.shape, 0.0);
    case InitialKind::random:
      return random_initial({level.seed, m.init_scale, m.init_offset}, level.shape);
    case InitialKind::file: {
      FieldFile f = read_field_file(m.init_file);
      if (!(f.field.shape() == level.shape)) throw ConfigError("init_file", "grid does not match mx/my/mz");
      if (!f.field.boundary_is_zero()) throw ConfigError("init_file", "field violates the zero boundary frame");
      f.field.set_time(0.0);
      return std::move(f.field);
    }
  }
  throw ConfigError("initial", "unsupported initial condition");
}

std::vector<ConvergenceRow> run_convergence(const RunManifest& m) {
  std::vector<ConvergenceRow> rows;
  std::vector<double> plain, extrap;
  for (SolverConfig level : refinement_levels(m)) {
    const ManufacturedCase mc = manufactured_for(level);
    level.source = mc.source_term();
    const Field u0 = mc.exact_field(level.shape, 0.0);
    const RunResult r = run(level, u0);
    const Field exact = mc.exact_field(level.shape, level.t_end);

    ConvergenceRow row;
    row.dt = level.dt;
    row.dims = level.shape.dims;
    for (int a = 0; a < level.shape.dims; ++a) row.h[static_cast<std::size_t>(a)] = level.shape.meshsize(a);
    row.cpu_seconds = r.report.cpu_seconds;
    row.error_plain = error_norm(r.plain, exact);
    plain.push_back(row.error_plain);
    if (level.extrapolate) {
      row.error_extrapolated = error_norm(r.final, exact);
      extrap.push_back(*row.error_extrapolated);
    }
    rows.push_back(row);
  }
  auto fill = [&](const std::vector<double>& errs, auto member) {
    for (std::size_t k = 1; k < errs.size(); ++k)
      if (errs[k - 1] > 0.0 && errs[k] > 0.0) rows[k].*member = std::log2(errs[k - 1] / errs[k]);
  };
  fill(plain, &ConvergenceRow::order_plain);
  fill(extrap, &ConvergenceRow::order_extrapolated);
  return rows;
}

std::string convergence_csv(const std::vector<ConvergenceRow>& rows) {
  std::ostringstream os;
  os << "dt,hx,hy,hz,cpu_s,err_plain,order_plain,err_extrap,order_extrap\n";
  os << std::setprecision(17);
  for (const auto& r : rows) {
    os << r.dt << ',' << r.h[0] << ',' << r.h[1] << ',';
    if (r.dims == 3) os << r.h[2];
    os << ',' << std::setprecision(6) << r.cpu_seconds << ',' << std::setprecision(17) << r.error_plain << ','
       << cell(r.order_plain) << ',' << cell(r.error_extrapolated, 17) << ',' << cell(r.order_extrapolated)
       << '\n';
  }
  return os.str();
}

std::string convergence_table(const std::vector<ConvergenceRow>& rows) {
  auto frac = [](double v) {
    std::ostringstream os;
    const double inv = 1.0 / v;
    if (std::abs(inv - std::round(inv)) < 1e-9) os << "1/" << std::llround(inv);
    else os << v;
    return os.str();
  };
  std::ostringstream os;
  const bool three = !rows.empty() && rows.front().dims == 3;
  os << std::left << std::setw(8) << "dt" << std::setw(8) << "hx" << std::setw(8) << "hy";
  if (three) os << std::setw(8) << "hz";
  os << std::setw(10) << "CPU" << std::setw(12) << "err" << std::setw(8) << "order1" << std::setw(12)
     << "err_extrap" << std::setw(8) << "order2" << '\n';
  for (const auto& r : rows) {
    std::ostringstream cpu;
    cpu << std::fixed << std::setprecision(2) << r.cpu_seconds << 's';
    os << std::setw(8) << frac(r.dt) << std::setw(8) << frac(r.h[0]) << std::setw(8) << frac(r.h[1]);
    if (three) os << std::setw(8) << frac(r.h[2]);
    os << std::setw(10) << cpu.str() << std::setw(12) << sci(r.error_plain) << std::setw(8)
       << (r.order_plain ? cell(r.order_plain, 3) : "") << std::setw(12)
       << (r.error_extrapolated ? sci(*r.error_extrapolated) : "") << std::setw(8)
       << (r.order_extrapolated ? cell(r.order_extrapolated, 3) : "") << '\n';
  }
  return os.str();
}

SimulationResult run_simulation(const RunManifest& m) {
  validate_manifest(m);
  SolverConfig cfg = m.solver;
  if (m.initial == InitialKind::manufactured) cfg.source = manufactured_for(cfg).source_term();
  const long steps = step_count(cfg);

  std::filesystem::create_directories(m.output_dir);
  const std::filesystem::path dir(m.output_dir);

  // Snapshot step indices: t = 0 always, then the nearest step to each request.
  std::vector<long> snap_steps{0};
  for (double t : m.snapshot_times) snap_steps.push_back(std::lround(t / cfg.dt));
  std::sort(snap_steps.begin(), snap_steps.end());
  snap_steps.erase(std::unique(snap_steps.begin(), snap_steps.end()), snap_steps.end());

  SimulationResult res;
  std::vector<double> meshsizes;
  for (int a = 0; a < cfg.shape.dims; ++a) meshsizes.push_back(cfg.shape.meshsize(a));
  res.window = max_principle_window(cfg.alpha, cfg.eps, meshsizes, cfg.order);

  Field u = initial_field(m, cfg);
  auto snapshot = [&](const Field& f) {
    const auto path = (dir / snapshot_name(f.time())).string();
    write_field_file(path, make_field_file(f, cfg.alpha, cfg.eps));
    res.snapshot_paths.push_back(path);
  };

  std::size_t next_snap = 0;
  res.max_trace.push_back(u.max_abs());
  if (snap_steps[next_snap] == 0) {
    snapshot(u);
    ++next_snap;
  }
  if (steps > 0) {
    const SplittingStepper stepper(cfg, cfg.dt);
    for (long n = 1; n <= steps; ++n) {
      stepper.step(u);
      u.set_time(static_cast<double>(n) * cfg.dt);
      res.max_trace.push_back(u.max_abs());
      if (next_snap < snap_steps.size() && snap_steps[next_snap] == n) {
        snapshot(u);
        ++next_snap;
      }
    }
  }

  RunReport report;
  report.max_trace = res.max_trace;
  res.first_violation = track_max(report).first_violation;

  res.trace_path = (dir / "max_trace.csv").string();
  {
    std::ofstream out(res.trace_path);
    out << "step,time,max_abs\n" << std::setprecision(17);
    for (std::size_t n = 0; n < res.max_trace.size(); ++n)
      out << n << ',' << static_cast<double>(n) * cfg.dt << ',' << res.max_trace[n] << '\n';
  }

  std::ostringstream summary;
  summary << "steps=" << steps << " dt=" << cfg.dt << " max=" << *std::max_element(res.max_trace.begin(), res.max_trace.end())
          << " window=[" << res.window.dt_min << ", " << res.window.dt_max << "]"
          << " dt_in_window=" << (cfg.dt >= res.window.dt_min && cfg.dt <= res.window.dt_max ? "yes" : "no")
          << " first_violation=" << (res.first_violation ? std::to_string(*res.first_violation) : "none");
  res.summary = summary.str();
  {
    std::ofstream out((dir / "summary.txt").string());
    out << res.summary << '\n';
  }
  res.final = std::move(u);
  return res;
}

std::string window_report(const RunManifest& m) {
  const SolverConfig& s = m.solver;
  std::vector<double> meshsizes;
  for (int a = 0; a < s.shape.dims; ++a) meshsizes.push_back(s.shape.meshsize(a));
  std::ostringstream os;
  os << "order,constant,dt_min,dt_max\n" << std::setprecision(10);
  const auto computed = max_principle_window(s.alpha, s.eps, meshsizes, SpatialOrder::fourth, WindowConstant::as_computed);
  const auto printed = max_principle_window(s.alpha, s.eps, meshsizes, SpatialOrder::fourth, WindowConstant::as_printed);
  const auto second = max_principle_window(s.alpha, s.eps, meshsizes, SpatialOrder::second);
  os << "4,as_computed," << computed.dt_min << ',' << computed.dt_max << '\n';
  os << "4,as_printed," << printed.dt_min << ',' << printed.dt_max << '\n';
  os << "2,-," << second.dt_min << ',' << second.dt_max << '\n';
  return os.str();
}

AmplificationSweep amplification_report(const RunManifest& m) {
  const SolverConfig& s = m.solver;
  const int dims = s.shape.dims;
  const int n = m.phase_samples;
  std::vector<double> betas;
  for (int a = 0; a < dims; ++a)
    betas.push_back(s.dt * s.eps * s.eps / (2.0 * std::pow(s.shape.meshsize(a), s.alpha)));

  // Per-axis factors are independent; tabulate them once per phase.
  std::vector<std::vector<double>> factor(static_cast<std::size_t>(dims), std::vector<double>(static_cast<std::size_t>(n)));
  for (int a = 0; a < dims; ++a)
    for (int p = 0; p < n; ++p) {
      AmplificationAxis ax{betas[static_cast<std::size_t>(a)], 2.0 * std::numbers::pi * p / n,
                           s.shape.intervals[static_cast<std::size_t>(a)], std::nullopt};
      factor[static_cast<std::size_t>(a)][static_cast<std::size_t>(p)] = amplification_axis_factor(s.alpha, s.order, ax);
    }

  AmplificationSweep out;
  std::ostringstream os;
  os << (dims == 3 ? "wx,wy,wz,modulus\n" : "wx,wy,modulus\n") << std::setprecision(12);
  const int nz = dims == 3 ? n : 1;
  for (int px = 0; px < n; ++px)
    for (int py = 0; py < n; ++py)
      for (int pz = 0; pz < nz; ++pz) {
        double g = factor[0][static_cast<std::size_t>(px)] * factor[1][static_cast<std::size_t>(py)];
        if (dims == 3) g *= factor[2][static_cast<std::size_t>(pz)];
        out.max_modulus = std::max(out.max_modulus, g);
        os << 2.0 * std::numbers::pi * px / n << ',' << 2.0 * std::numbers::pi * py / n << ',';
        if (dims == 3) os << 2.0 * std::numbers::pi * pz / n << ',';
        os << g << '\n';
      }
  os << "# max " << out.max_modulus << '\n';
  out.csv = os.str();
  return out;
}

}  // namespace fracac
