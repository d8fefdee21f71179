#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <limits>
#include <random>
#include <stdexcept>

#include "fracac/analysis.hpp"
#include "oracles.hpp"

using namespace fracac;

namespace {

double c0_oracle(double alpha) { return std::tgamma(alpha + 1) / std::pow(std::tgamma(alpha / 2 + 1), 2); }

double round_sig(double v, int digits) {
  const double scale = std::pow(10.0, digits - 1 - std::floor(std::log10(std::abs(v))));
  return std::round(v * scale) / scale;
}

// Direct evaluation of one axis factor with the closed-form weights.
double axis_factor_oracle(double alpha, double beta, double w, int m, int node, bool fourth) {
  std::complex<double> s = 0.0;
  const int lo = node > 0 ? node - m + 1 : -(m - 1);
  const int hi = node > 0 ? node - 1 : m - 1;
  for (int p = lo; p <= hi; ++p)
    s += static_cast<double>(oracle::closed_form_coefficient(alpha, p)) * std::polar(1.0, -p * w);
  const double a = fourth ? 1 + alpha * (std::cos(w) - 1) / 12 : 1.0;
  return std::abs((a - beta * s) / (a + beta * s));
}

}  // namespace

TEST(Amplification, VanishesForTheResonantClassicalCase) {
  AmplificationQuery q{2.0, SpatialOrder::fourth, {{1.0 / 6.0, M_PI, 64, std::nullopt}}};
  EXPECT_LT(amplification_factor(q), 1e-12);
}

TEST(Amplification, MatchesDirectSummation) {
  for (double alpha : {1.25, 1.75})
    for (int node : {0, 1, 5, 11}) {
      AmplificationAxis ax{0.7, 1.1, 12, node > 0 ? std::optional<int>(node) : std::nullopt};
      EXPECT_NEAR(amplification_axis_factor(alpha, SpatialOrder::fourth, ax),
                  axis_factor_oracle(alpha, 0.7, 1.1, 12, node, true), 1e-13);
      EXPECT_NEAR(amplification_axis_factor(alpha, SpatialOrder::second, ax),
                  axis_factor_oracle(alpha, 0.7, 1.1, 12, node, false), 1e-13);
    }
}

TEST(Amplification, ProductOverAxes) {
  AmplificationQuery q{1.5, SpatialOrder::fourth, {{0.3, 0.4, 16, {}}, {2.0, 2.9, 20, 3}, {10.0, 5.0, 8, 7}}};
  double p = 1.0;
  for (const auto& ax : q.axes) p *= amplification_axis_factor(q.alpha, q.order, ax);
  EXPECT_DOUBLE_EQ(amplification_factor(q), p);
}

TEST(Amplification, NeverExceedsOne) {
  std::mt19937_64 gen(17);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0.0;
  for (int trial = 0; trial < 4000; ++trial) {
    const double alpha = 1.0 + 1e-6 + (1.0 - 1e-6) * unit(gen);
    const int m = 2 + static_cast<int>(unit(gen) * 62);
    const double beta = std::pow(10.0, -4 + 8 * unit(gen));
    const double w = 2 * M_PI * unit(gen);
    const int node = 1 + static_cast<int>(unit(gen) * (m - 1));
    const auto order = trial % 2 ? SpatialOrder::fourth : SpatialOrder::second;
    worst = std::max(worst, amplification_axis_factor(alpha, order, {beta, w, m, std::nullopt}));
    worst = std::max(worst, amplification_axis_factor(alpha, order, {beta, w, m, node}));
  }
  EXPECT_LE(worst, 1.0 + 1e-12);
}

TEST(Window, ReferenceValuesToFourDigits) {
  const auto w3 = max_principle_window(1.6, 0.1, {0.05, 0.05});
  EXPECT_EQ(round_sig(w3.dt_min, 4), 0.1508);
  EXPECT_EQ(round_sig(w3.dt_max, 4), 0.4358);
  const auto w3b = max_principle_window(1.6, 0.2, {0.05, 0.05});
  EXPECT_EQ(round_sig(w3b.dt_min, 4), 0.03771);
  EXPECT_EQ(round_sig(w3b.dt_max, 4), 0.1089);
  const auto w4 = max_principle_window(1.7, 0.02, {0.01, 0.01});
  EXPECT_EQ(round_sig(w4.dt_min, 4), 0.1776);
  EXPECT_EQ(round_sig(w4.dt_max, 4), 0.4945);
}

TEST(Window, MatchesIndependentFormula) {
  const double alpha = 1.35, eps = 0.07;
  const std::vector<double> h{1.0 / 16, 1.0 / 20, 1.0 / 32};
  const double c0 = c0_oracle(alpha);
  const double hmax = std::pow(1.0 / 16, alpha), hmin = std::pow(1.0 / 32, alpha);
  const auto w = max_principle_window(alpha, eps, h);
  EXPECT_NEAR(w.dt_min, (alpha + 2) / 12 * hmax / (eps * eps * c0), 1e-14);
  EXPECT_NEAR(w.dt_max, (12 - alpha) / 12 * hmin / (eps * eps * c0), 1e-14);
  const auto printed = max_principle_window(alpha, eps, h, SpatialOrder::fourth, WindowConstant::as_printed);
  EXPECT_NEAR(printed.dt_max, 2 * w.dt_max, 1e-14);
  EXPECT_EQ(printed.dt_min, w.dt_min);
  const auto second = max_principle_window(alpha, eps, h, SpatialOrder::second);
  EXPECT_EQ(second.dt_min, 0.0);
  EXPECT_NEAR(second.dt_max, 2 * hmin / (eps * eps * c0), 1e-14);
}

TEST(Window, ScalesAsInverseEpsilonSquared) {
  const auto a = max_principle_window(1.6, 0.1, {0.05, 0.05});
  const auto b = max_principle_window(1.6, 0.2, {0.05, 0.05});
  EXPECT_NEAR(a.dt_min / b.dt_min, 4.0, 1e-13);
  EXPECT_NEAR(a.dt_max / b.dt_max, 4.0, 1e-13);
}

TEST(Window, DependsOnlyOnTheMeshsizes) {
  const auto two = max_principle_window(1.7, 0.02, {0.01, 0.01});
  const auto three = max_principle_window(1.7, 0.02, {0.01, 0.01, 0.01});
  EXPECT_EQ(two.dt_min, three.dt_min);
  EXPECT_EQ(two.dt_max, three.dt_max);
}

TEST(Window, RejectsBadInput) {
  EXPECT_THROW(max_principle_window(2.2, 0.1, {0.1, 0.1}), std::domain_error);
  EXPECT_ANY_THROW(max_principle_window(1.5, 0.0, {0.1, 0.1}));
  EXPECT_ANY_THROW(max_principle_window(1.5, 0.1, {}));
}

TEST(TrackMax, DetectsViolations) {
  RunReport r;
  r.max_trace = {0.0, 0.0, 0.0};
  EXPECT_FALSE(track_max(r).first_violation);
  r.max_trace = {0.5, 1.0, 1.0 + 1e-13, 0.9};
  EXPECT_FALSE(track_max(r).first_violation);
  r.max_trace = {0.5, 0.99, 1.0 + 1e-11, 1.2, 0.9};
  ASSERT_TRUE(track_max(r).first_violation);
  EXPECT_EQ(*track_max(r).first_violation, 2);
  r.max_trace = {0.5, std::numeric_limits<double>::quiet_NaN()};
  ASSERT_TRUE(track_max(r).first_violation);
  EXPECT_EQ(*track_max(r).first_violation, 1);
  EXPECT_EQ(track_max(r).max_trace.size(), 2u);
}

TEST(ErrorNorm, InteriorMaximum) {
  const auto shape = GridShape::square(4, 4);
  Field a(shape), b(shape);
  a.at(1, 2) = 0.5;
  b.at(1, 2) = -0.25;
  b.at(2, 2) = 0.1;
  EXPECT_DOUBLE_EQ(error_norm(a, b), 0.75);
  a.at(3, 3) = std::numeric_limits<double>::quiet_NaN();
  EXPECT_TRUE(std::isnan(error_norm(a, b)));
  EXPECT_ANY_THROW(error_norm(a, Field(GridShape::square(4, 5))));
}

TEST(ObservedOrder, Examples) {
  auto o = observed_order({8.0, 2.0});
  ASSERT_EQ(o.size(), 1u);
  EXPECT_DOUBLE_EQ(o[0], 2.0);
  EXPECT_DOUBLE_EQ(observed_order({16.0, 1.0})[0], 4.0);
  EXPECT_NEAR(observed_order({1.79e-8, 4.37e-9})[0], 2.03, 0.005);
  EXPECT_TRUE(observed_order({1.0}).empty());
  EXPECT_THROW(observed_order({1.0, 0.0}), std::domain_error);
}
