#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "monogenica/legendre.hpp"
#include "oracles.hpp"

using namespace monogenica;

namespace {

// |residual| / largest |term|, so factorial growth in m does not matter.
double scaled(double residual, std::initializer_list<double> terms) {
  double m = 1e-300;
  for (double t : terms) m = std::max(m, std::fabs(t));
  return std::fabs(residual) / m;
}

}  // namespace

TEST(Legendre, Examples) {
  EXPECT_DOUBLE_EQ(assoc_legendre(1, 0, 0.5).value, 0.5);
  EXPECT_DOUBLE_EQ(assoc_legendre(1, 1, 0.0).value, 1.0);
  const double t = 0.3;
  const double r = 2.0 * assoc_legendre(4, 2, t).value - 7.0 * t * assoc_legendre(3, 2, t).value +
                   5.0 * assoc_legendre(2, 2, t).value;
  EXPECT_NEAR(r, 0.0, 1e-13);
  EXPECT_FALSE(kCondonShortleyPhase);
}

TEST(Legendre, MatchesExplicitPolynomialForm) {
  for (double t : {-0.95, -0.4, 0.0, 0.27, 0.81, 1.0}) {
    for (int n = 0; n <= 14; ++n) {
      for (int m = 0; m <= n; ++m) {
        const double ref = oracle::legendre_explicit(n, m, t);
        EXPECT_NEAR(assoc_legendre(n, m, t).value, ref, 1e-12 * std::max(1.0, std::fabs(ref)))
            << n << "," << m << "," << t;
      }
    }
  }
}

TEST(Legendre, DerivativeMatchesDifferenceQuotient) {
  const double h = 1e-6;
  for (double t : {-0.7, 0.1, 0.55}) {
    for (int n = 0; n <= 10; ++n) {
      for (int m = 0; m <= n; ++m) {
        const double fd = (oracle::legendre_explicit(n, m, t + h) - oracle::legendre_explicit(n, m, t - h)) / (2 * h);
        const double d = assoc_legendre(n, m, t).derivative;
        EXPECT_NEAR(d, fd, 1e-6 * std::max(1.0, std::fabs(fd))) << n << "," << m;
      }
    }
  }
}

TEST(Legendre, TableMatchesSingleCalls) {
  const LegendreTable zero(0, 0.123);
  EXPECT_EQ(zero.value(0, 0), 1.0);
  EXPECT_THROW(zero.value(1, 0), IndexError);

  const LegendreTable table(5, 0.7);
  for (int n = 0; n <= 5; ++n) {
    for (int m = 0; m <= n; ++m) {
      const LegendreValue v = assoc_legendre(n, m, 0.7);
      EXPECT_NEAR(table.value(n, m), v.value, 1e-14 * std::max(1.0, std::fabs(v.value)));
      EXPECT_NEAR(table.derivative(n, m), v.derivative, 1e-14 * std::max(1.0, std::fabs(v.derivative)));
    }
  }
  EXPECT_THROW(table.value(2, 3), IndexError);
  EXPECT_EQ(table.value_or_zero(2, 3), 0.0);
}

TEST(Legendre, RecurrencesHoldAtRandomAbscissae) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-0.999, 0.999);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const double t = u(rng);
    const double s = std::sqrt(1.0 - t * t);
    const LegendreTable p(42, t);
    for (int n = 0; n <= 40; ++n) {
      for (int m = 0; m <= n; ++m) {
        const double pn = p.value(n, m);
        const double pn1 = p.value(n + 1, m);
        const double dpn1 = p.derivative(n + 1, m);
        // I
        worst = std::max(worst, scaled((1 - t * t) * dpn1 - (n + m + 1) * pn + (n + 1) * t * pn1,
                                       {(1 - t * t) * dpn1, (n + m + 1) * pn, (n + 1) * t * pn1}));
        // II
        const double p_up = p.value(n + 1, m + 1);
        worst = std::max(worst, scaled(s * dpn1 - p_up + m * t * pn1 / s, {s * dpn1, p_up, m * t * pn1 / s}));
        // III
        const double a = p.value(n + 2, m + 1);
        const double b = p.value_or_zero(n, m + 1);
        worst = std::max(worst, scaled((2 * n + 3) * s * pn1 - (a - b), {(2 * n + 3) * s * pn1, a, b}));
        // two-step
        if (n >= 1) {
          const double pm1 = p.value_or_zero(n - 1, m);
          worst = std::max(worst, scaled((n - m + 1) * pn1 - (2 * n + 1) * t * pn + (n + m) * pm1,
                                         {(n - m + 1) * pn1, (2 * n + 1) * t * pn, (n + m) * pm1}));
        }
      }
    }
  }
  EXPECT_LT(worst, 1e-12);
}

TEST(Legendre, PoleValues) {
  for (int n = 0; n <= 30; ++n) {
    EXPECT_DOUBLE_EQ(assoc_legendre(n, 0, 1.0).value, 1.0);
    EXPECT_DOUBLE_EQ(assoc_legendre(n, 0, -1.0).value, n % 2 == 0 ? 1.0 : -1.0);
    for (int m = 1; m <= n; ++m) {
      EXPECT_EQ(assoc_legendre(n, m, 1.0).value, 0.0);
      EXPECT_EQ(assoc_legendre(n, m, -1.0).value, 0.0);
    }
  }
}

TEST(Legendre, PoleDerivativesAreOneSidedLimits) {
  for (int n = 1; n <= 8; ++n) {
    for (int m = 3; m <= n; ++m) {
      EXPECT_EQ(assoc_legendre(n, m, 1.0).derivative, 0.0);
      EXPECT_EQ(assoc_legendre(n, m, -1.0).derivative, 0.0);
    }
    for (int m : {0, 2}) {
      if (m > n) continue;
      for (double t : {1.0, -1.0}) {
        const double inner = t * (1.0 - 1e-7);
        const double lim = assoc_legendre(n, m, inner).derivative;
        EXPECT_NEAR(assoc_legendre(n, m, t).derivative, lim, 1e-4 * std::max(1.0, std::fabs(lim)))
            << n << "," << m << "," << t;
      }
    }
  }
}

TEST(Legendre, Errors) {
  EXPECT_THROW(assoc_legendre(2, 3, 0.1), IndexError);
  EXPECT_THROW(assoc_legendre(-1, 0, 0.1), IndexError);
  EXPECT_THROW(assoc_legendre(2, 1, 1.5), DomainError);
  EXPECT_THROW(LegendreTable(kMaxLegendreDegree + 1, 0.0), IndexError);
  EXPECT_THROW(LegendreTable(3, std::nan("")), DomainError);
}
