#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "fracac/coefficients.hpp"
#include "oracles.hpp"

using fracac::build_coefficients;

TEST(Coefficients, KnownValuesAtAlphaOneAndAHalf) {
  const auto t = build_coefficients(1.5, 4);
  EXPECT_NEAR(t[0], 1.573787465354795, 1e-14);
  EXPECT_NEAR(t[1], -0.6744803422949121, 1e-14);
  EXPECT_DOUBLE_EQ(t[-1], t[1]);
}

TEST(Coefficients, AlphaTwoIsTheClassicalStencilExactly) {
  const auto t = build_coefficients(2.0, 4);
  EXPECT_EQ(t[0], 2.0);
  EXPECT_EQ(t[1], -1.0);
  EXPECT_EQ(t[2], 0.0);
  EXPECT_EQ(t[3], 0.0);
  EXPECT_EQ(t[4], 0.0);
}

TEST(Coefficients, RecurrenceMatchesClosedForm) {
  for (int k = 1; k <= 10; ++k) {
    const double alpha = 1.0 + 0.1 * k;
    const auto t = build_coefficients(alpha, 200);
    for (long s = 0; s <= 200; ++s) {
      const double ref = static_cast<double>(oracle::closed_form_coefficient(alpha, s));
      if (ref == 0.0) {
        EXPECT_EQ(t[s], 0.0) << "alpha=" << alpha << " s=" << s;
      } else {
        EXPECT_LE(std::abs(t[s] - ref), 1e-12 * std::abs(ref)) << "alpha=" << alpha << " s=" << s;
      }
    }
  }
}

TEST(Coefficients, OffDiagonalWeightsAreNonPositive) {
  for (double alpha : {1.05, 1.3, 1.7, 1.99, 2.0}) {
    const auto t = build_coefficients(alpha, 300);
    EXPECT_GT(t[0], 0.0);
    for (long s = 1; s <= 300; ++s) EXPECT_LE(t[s], 0.0) << alpha << " " << s;
  }
}

TEST(Coefficients, TruncatedRowSumsStayBelowTheCentre) {
  const int m = 200;
  const auto t = build_coefficients(1.2, m);
  for (int i = 1; i <= m - 1; ++i) {
    double off = 0.0;
    for (int p = i - m + 1; p <= i - 1; ++p)
      if (p != 0) off += std::abs(t[p]);
    EXPECT_LT(off, t[0]) << "row " << i;
  }
}

TEST(Coefficients, FullSumTendsToZero) {
  const auto t = build_coefficients(1.5, 100000);
  double sum = t[0];
  for (long s = 1; s <= 100000; ++s) sum += 2.0 * t[s];
  EXPECT_GT(sum, 0.0);
  EXPECT_LT(sum, 1e-6);
}

TEST(Coefficients, RejectsAlphaOutsideTheRange) {
  EXPECT_THROW(build_coefficients(1.0, 4), std::domain_error);
  EXPECT_THROW(build_coefficients(2.5, 4), std::domain_error);
  EXPECT_THROW(build_coefficients(std::nan(""), 4), std::domain_error);
  EXPECT_THROW(build_coefficients(1.5, 0), std::domain_error);
  EXPECT_NO_THROW(fracac::check_alpha(2.0));
}
