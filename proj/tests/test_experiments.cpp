#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "fracac/config.hpp"
#include "fracac/experiments.hpp"
#include "fracac/field_io.hpp"

using namespace fracac;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const auto p = fs::temp_directory_path() / ("fracac_test_" + name);
  fs::remove_all(p);
  return p;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* kSimulate = R"(experiment = simulate
alpha = 1.6
eps = 0.1
dims = 2
mx = 20
my = 20
dt = 0.4
initial = random
init_scale = 0.95
init_offset = 0.05
seed = 42
)";

}  // namespace

TEST(Convergence, SingleLevelLeavesOrderColumnsEmpty) {
  auto m = parse_config(
      "experiment = convergence\nalpha = 1.5\neps = 0.1\ndims = 2\nmx = 8\nmy = 8\ndt = 1/8\nt_end = 1\n");
  const auto rows = run_convergence(m);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_FALSE(rows[0].order_plain);
  EXPECT_FALSE(rows[0].error_extrapolated);
  const auto csv = lines(convergence_csv(rows));
  ASSERT_EQ(csv.size(), 2u);
  EXPECT_EQ(csv[0], "dt,hx,hy,hz,cpu_s,err_plain,order_plain,err_extrap,order_extrap");
  EXPECT_EQ(csv[1].substr(0, 16), "0.125,0.125,0.12");
  EXPECT_EQ(csv[1].substr(csv[1].size() - 3), ",,,");
  EXPECT_NE(csv[1].find(",0.125,,"), std::string::npos);  // empty hz in 2D
}

TEST(Convergence, TwoLevelsWithExtrapolation) {
  auto m = parse_config(
      "experiment = convergence\nalpha = 1.5\neps = 0.1\ndims = 2\nmx = 16\nmy = 16\ndt = 1/16\nt_end = 1\n"
      "extrapolate = true\nlevels = 2\n");
  const auto rows = run_convergence(m);
  ASSERT_EQ(rows.size(), 2u);
  ASSERT_TRUE(rows[1].order_plain);
  ASSERT_TRUE(rows[1].order_extrapolated);
  EXPECT_NEAR(*rows[1].order_plain, 2.0, 0.15);
  EXPECT_NEAR(*rows[1].order_extrapolated, 4.0, 0.15);
  EXPECT_LT(*rows[1].error_extrapolated, rows[1].error_plain);
  const auto table = convergence_table(rows);
  EXPECT_NE(table.find("1/32"), std::string::npos);
}

TEST(Simulation, ZeroEndTimeWritesOnlyTheInitialSnapshot) {
  const auto dir = scratch("sim0");
  auto m = parse_config(std::string(kSimulate) + "t_end = 0\nout = " + dir.string() + "\n");
  const auto res = run_simulation(m);
  ASSERT_EQ(res.snapshot_paths.size(), 1u);
  EXPECT_EQ(fs::path(res.snapshot_paths[0]).filename(), "snapshot_t0.0000.facf");
  EXPECT_EQ(res.max_trace.size(), 1u);
  const auto back = read_field_file(res.snapshot_paths[0]);
  EXPECT_EQ(back.field.time(), 0.0);
  EXPECT_EQ(back.alpha, 1.6);
  EXPECT_TRUE(fs::exists(dir / "max_trace.csv"));
  EXPECT_TRUE(fs::exists(dir / "summary.txt"));
  fs::remove_all(dir);
}

TEST(Simulation, SnapshotsTraceAndSummary) {
  const auto dir = scratch("sim1");
  auto m = parse_config(std::string(kSimulate) + "t_end = 4\nsnapshots = 2, 4\nout = " + dir.string() + "\n");
  const auto res = run_simulation(m);
  ASSERT_EQ(res.snapshot_paths.size(), 3u);
  EXPECT_EQ(fs::path(res.snapshot_paths[1]).filename(), "snapshot_t2.0000.facf");
  EXPECT_EQ(read_field_file(res.snapshot_paths[2]).field.time(), 4.0);
  EXPECT_EQ(res.max_trace.size(), 11u);
  EXPECT_FALSE(res.first_violation);
  EXPECT_NE(res.summary.find("dt_in_window=yes"), std::string::npos);
  EXPECT_NE(res.summary.find("first_violation=none"), std::string::npos);
  const auto trace = lines(slurp(dir / "max_trace.csv"));
  ASSERT_EQ(trace.size(), 12u);
  EXPECT_EQ(trace[0], "step,time,max_abs");
  fs::remove_all(dir);
}

TEST(Simulation, SnapshotBeyondEndTimeIsAnError) {
  EXPECT_THROW(parse_config(std::string(kSimulate) + "t_end = 4\nsnapshots = 5\n"), ConfigError);
}

TEST(Simulation, RestartsFromAFieldFile) {
  const auto dir = scratch("sim2");
  auto first = parse_config(std::string(kSimulate) + "t_end = 2\nsnapshots = 2\nout = " + dir.string() + "\n");
  const auto a = run_simulation(first);
  auto second = parse_config(
      "experiment = simulate\nalpha = 1.6\neps = 0.1\ndims = 2\nmx = 20\nmy = 20\ndt = 0.4\nt_end = 0\n"
      "initial = file\ninit_file = " + a.snapshot_paths.back() + "\nout = " + (dir / "b").string() + "\n");
  const auto b = run_simulation(second);
  EXPECT_EQ(b.final.values()[b.final.shape().index(5, 5)], a.final.values()[a.final.shape().index(5, 5)]);
  fs::remove_all(dir);
}

TEST(Reports, WindowAndAmplification) {
  auto w = parse_config("experiment = window\nalpha = 1.6\neps = 0.1\ndims = 2\nmx = 20\nmy = 20\n");
  const auto wl = lines(window_report(w));
  ASSERT_EQ(wl.size(), 4u);
  EXPECT_EQ(wl[1].substr(0, 19), "4,as_computed,0.150");
  auto a = parse_config(
      "experiment = amplification\nalpha = 1.5\neps = 0.1\ndims = 3\nmx = 16\nmy = 16\nmz = 16\ndt = 1\n"
      "phase_samples = 8\n");
  const auto sweep = amplification_report(a);
  EXPECT_LE(sweep.max_modulus, 1.0 + 1e-12);
  EXPECT_EQ(lines(sweep.csv).size(), 1u + 512u + 1u);
}

TEST(Cli, ConvergenceSmokeTest) {
  const char* cli = std::getenv("FRACAC_CLI");
  if (!cli) GTEST_SKIP() << "FRACAC_CLI not set";
  const auto dir = scratch("cli");
  fs::create_directories(dir);
  {
    std::ofstream cfg(dir / "c.cfg");
    cfg << "experiment = convergence\nalpha = 1.5\neps = 0.1\ndims = 2\nmx = 8\nmy = 8\ndt = 1/8\nt_end = 1\n";
  }
  const std::string cmd = std::string(cli) + " convergence --config " + (dir / "c.cfg").string() + " --out " +
                          dir.string() + " > " + (dir / "log.txt").string();
  EXPECT_EQ(std::system(cmd.c_str()), 0);
  EXPECT_TRUE(fs::exists(dir / "convergence.csv"));
  {
    std::ofstream bad(dir / "bad.cfg");
    bad << "experiment = convergence\nalpha = 2.5\n";
  }
  const std::string bad_cmd =
      std::string(cli) + " convergence --config " + (dir / "bad.cfg").string() + " 2> /dev/null";
  const int status = std::system(bad_cmd.c_str());
  EXPECT_EQ(WEXITSTATUS(status), 2);
  fs::remove_all(dir);
}
