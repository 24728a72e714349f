#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "monogenica/basis.hpp"
#include "oracles.hpp"

using namespace monogenica;
using oracle::kPi;

namespace {

void expect_near(const Quaternion& a, const Quaternion& b, double tol) {
  EXPECT_LE(max_abs(a - b), tol) << a << " vs " << b;
}

double scale_of(const Quaternion& q) { return std::max(1.0, max_abs(q)); }

}  // namespace

TEST(BasisIndex, Validity) {
  EXPECT_TRUE(is_valid({0, 0}));
  EXPECT_FALSE(is_valid({-1, 0}));
  EXPECT_FALSE(is_valid({2, 3}));
  EXPECT_TRUE(is_valid({-2, 0}));
  EXPECT_FALSE(is_valid({-2, 1}));
  EXPECT_TRUE(is_valid({-4, 2}));
  EXPECT_FALSE(is_valid({0, -1}));
  EXPECT_FALSE(is_valid({kMaxDegree + 1, 0}));
  EXPECT_THROW(require_valid({-1, 0}), IndexError);
  EXPECT_EQ(to_string(BasisIndex{-3, 1}), "-3:1");
  const auto range = indices_in_range(-3, 1);
  ASSERT_EQ(range.size(), 2u + 1u + 1u + 2u);
  EXPECT_EQ(range.front(), (BasisIndex{-3, 0}));
  EXPECT_EQ(range.back(), (BasisIndex{1, 1}));
}

TEST(CoeffFunctions, Examples) {
  const CoeffValues c = coeff_functions(0, 0, 1.1);
  EXPECT_NEAR(c.A, 0.5, 1e-15);
  EXPECT_NEAR(c.B, 0.0, 1e-15);
  EXPECT_NEAR(c.C, 0.0, 1e-15);
  EXPECT_NEAR(coeff_functions(0, 1, kPi / 2).C, 0.5, 1e-15);
  EXPECT_THROW(coeff_functions(2, 4, 0.3), IndexError);
}

TEST(CoeffFunctions, MatchDisplayedFormulasAwayFromPoles) {
  // A = 1/2 [sin^2 P' ... ] written with the explicit Legendre oracle and a
  // difference quotient for the derivative.
  for (double theta : {0.4, 1.3, 2.5}) {
    const double t = std::cos(theta);
    const double s = std::sin(theta);
    for (int n = 0; n <= 8; ++n) {
      for (int m = 0; m <= n + 1; ++m) {
        const double h = 1e-6;
        const double p = oracle::legendre_explicit(n + 1, m, t);
        const double dp = (oracle::legendre_explicit(n + 1, m, t + h) - oracle::legendre_explicit(n + 1, m, t - h)) / (2 * h);
        const double a = 0.5 * (s * s * dp + (n + 1) * t * p);
        const double b = 0.5 * (s * t * dp - (n + 1) * s * p);
        const double cc = 0.5 * m * p / s;
        const CoeffValues v = coeff_functions(n, m, theta);
        const double tol = 1e-6 * std::max({1.0, std::fabs(a), std::fabs(b), std::fabs(cc)});
        EXPECT_NEAR(v.A, a, tol) << n << "," << m;
        EXPECT_NEAR(v.B, b, tol) << n << "," << m;
        EXPECT_NEAR(v.C, cc, tol) << n << "," << m;
      }
    }
  }
}

TEST(CoeffFunctions, RelationsBetweenABC) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, kPi);
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const double theta = trial == 0 ? 0.0 : trial == 1 ? kPi : u(rng);
    for (int n = 0; n <= 12; ++n) {
      for (int m = 0; m <= n; ++m) {
        const CoeffValues c0 = coeff_functions(n, m, theta);
        const CoeffValues c1 = coeff_functions(n, m + 1, theta);
        const double scale = std::max({1.0, std::fabs(c0.A), std::fabs(c1.A), std::fabs(c1.B), std::fabs(c1.C)});
        worst = std::max(worst, std::fabs((n + m + 2) * c0.A - (c1.C - c1.B)) / scale);
        worst = std::max(worst, std::fabs(c1.A - (n + m + 2) * (c0.B + c0.C)) / ((n + m + 2) * scale));
      }
    }
  }
  EXPECT_LT(worst, 1e-11);
}

TEST(SphericalMonogenics, ExamplesAndMonogenicity) {
  expect_near(spherical_monogenic(Harmonic::X, 0, 0, 0.7, 1.9), Quaternion(0.5), 1e-15);
  EXPECT_THROW(spherical_monogenic(Harmonic::Y, 2, 0, 0.3, 0.1), IndexError);
  EXPECT_NEAR(solid_monogenic_norm(0, 0), std::sqrt(kPi / 3), 1e-15);

  const oracle::Fn f = [](const Point3& x) {
    const SphericalCoords s = to_spherical(x);
    return s.r * s.r * spherical_monogenic(Harmonic::X, 2, 1, s.theta, s.phi);
  };
  const oracle::Fn g = [](const Point3& x) {
    const SphericalCoords s = to_spherical(x);
    return s.r * s.r * s.r * spherical_monogenic(Harmonic::Y, 3, 2, s.theta, s.phi);
  };
  std::mt19937_64 rng(6);
  for (const auto& x : oracle::random_points(rng, 20, 0.4, 1.0)) {
    EXPECT_LT(max_abs(oracle::dbar(f, x)), 1e-6);
    EXPECT_LT(max_abs(oracle::dbar(g, x)), 1e-6);
    EXPECT_EQ(f(x).a3, 0.0);
  }
}

TEST(PhiInner, Examples) {
  std::mt19937_64 rng(7);
  for (const auto& x : oracle::random_points(rng, 5, 0.0, 1.0)) {
    expect_near(phi_inner(0, 0, x), Quaternion(std::sqrt(3.0 / (4.0 * kPi))), 1e-15);
  }
  EXPECT_NEAR(phi_inner(0, 0, {}).a0, 0.4886025119029199, 1e-15);
  expect_near(phi_inner(3, 1, {}), Quaternion{}, 0);
  expect_near(phi_inner_spherical(0, 0, {}), Quaternion(std::sqrt(3.0 / (4.0 * kPi))), 1e-15);
  expect_near(phi_inner_spherical(2, 2, {}), Quaternion{}, 0);
  EXPECT_THROW(phi_inner(2, 3, {0.1, 0.2, 0.3}), IndexError);
}

TEST(AppellInner, Examples) {
  std::mt19937_64 rng(8);
  for (const auto& x : oracle::random_points(rng, 20, 0.0, 1.5)) {
    expect_near(appell_inner_closed(0, 0, x), Quaternion(1.0), 1e-15);
    const Quaternion a10{x.x0, 0.5 * x.x1, 0.5 * x.x2, 0.0};
    expect_near(appell_inner_closed(1, 0, x), a10, 1e-15);
    expect_near(appell_inner_recur(1, 0, x), a10, 1e-15);
    expect_near(appell_inner_recur(1, 0, x, Recurrence::OneStep), a10, 1e-15);
  }
  expect_near(appell_inner_closed(2, 0, {1, 0, 0}), Quaternion(1.0), 1e-15);

  const Point3 x{0.3, -0.2, 0.5};
  const Quaternion q = x.to_quaternion();
  const Quaternion qb = conj(q);
  const Quaternion a20 = (5.0 * q * q + 2.0 * qb * q + qb * qb) / 8.0;
  expect_near(appell_inner_recur(2, 0, x), a20, 1e-15);
  expect_near(appell_inner_closed(2, 0, x), a20, 1e-15);
}

TEST(AppellInner, MonogenicConstantsArePowersOfZeta) {
  std::mt19937_64 rng(9);
  for (const auto& x : oracle::random_points(rng, 10, 0.2, 1.2)) {
    const Quaternion z{x.x1, 0, 0, -x.x2};
    for (int l = 0; l <= 8; ++l) {
      const Quaternion ref = oracle::qpow(z, l);
      expect_near(appell_inner_closed(l, l, x), ref, 1e-14 * scale_of(ref));
      const oracle::Fn f = [l](const Point3& y) { return appell_inner_closed(l, l, y); };
      EXPECT_LT(max_abs(oracle::hyper_derivative(f, x)), 1e-6);
    }
  }
}

TEST(AppellInner, OneStepRecurrencePair) {
  // x A_n^l = (1/(2(n+1))) [(2n+3) A_{n+1}^l - (2l+1) hat(A_{n+1}^l)]
  std::mt19937_64 rng(10);
  for (const auto& x : oracle::random_points(rng, 20, 0.1, 1.0)) {
    const int n = 3;
    const int l = 1;
    const Quaternion lhs = x.to_quaternion() * appell_inner_closed(n, l, x);
    const Quaternion next = appell_inner_closed(n + 1, l, x);
    const Quaternion rhs = ((2.0 * n + 3) * next - (2.0 * l + 1) * antimonogenic_involution(next)) / (2.0 * (n + 1));
    expect_near(lhs, rhs, 1e-12);
  }
}

TEST(AppellInner, TriplePathAgreement) {
  std::mt19937_64 rng(12);
  const auto points = oracle::random_points(rng, 100, 0.0, 1.0);
  for (int n = 0; n <= 12; ++n) {
    for (int l = 0; l <= n; ++l) {
      std::vector<Quaternion> closed;
      std::vector<Quaternion> two;
      std::vector<Quaternion> one;
      std::vector<Quaternion> legendre;
      std::vector<Quaternion> via_phi;
      const double c = family_convert({n, l}, Family::AppellA, Family::OrthonormalPhi);
      for (const auto& x : points) {
        closed.push_back(appell_inner_closed(n, l, x));
        two.push_back(appell_inner_recur(n, l, x, Recurrence::TwoStep));
        one.push_back(appell_inner_recur(n, l, x, Recurrence::OneStep));
        legendre.push_back(appell_inner_spherical(n, l, x));
        via_phi.push_back(c * phi_inner_spherical(n, l, x));
      }
      EXPECT_LT(oracle::relative_error(two, closed), 1e-11) << n << "," << l;
      EXPECT_LT(oracle::relative_error(one, closed), 1e-11) << n << "," << l;
      EXPECT_LT(oracle::relative_error(legendre, closed), 1e-11) << n << "," << l;
      EXPECT_LT(oracle::relative_error(via_phi, closed), 1e-11) << n << "," << l;
    }
  }
}

TEST(AppellInner, HighDegreeRecurrenceMatchesLegendreConstruction) {
  std::mt19937_64 rng(20);
  const auto pts = oracle::random_points(rng, 5, 0.2, 1.0);
  for (int n : {40, 64}) {
    for (int l = 0; l <= n; ++l) {
      std::vector<Quaternion> a;
      std::vector<Quaternion> b;
      for (const auto& x : pts) {
        a.push_back(appell_inner(n, l, x));
        b.push_back(appell_inner_spherical(n, l, x));
      }
      EXPECT_LT(oracle::relative_error(a, b), 1e-11) << n << "," << l;
    }
  }
}

TEST(Basis, EveryFamilyIsMonogenicAndHomogeneous) {
  std::mt19937_64 rng(13);
  const auto inner_pts = oracle::random_points(rng, 8, 0.5, 1.0);
  const auto outer_pts = oracle::random_points(rng, 8, 1.2, 2.0);
  for (const Family fam : {Family::OrthonormalPhi, Family::AppellA}) {
    for (const BasisIndex idx : indices_in_range(-7, 5)) {
      const oracle::Fn f = [fam, idx](const Point3& y) { return basis_value(fam, idx, y); };
      const auto& pts = idx.is_inner() ? inner_pts : outer_pts;
      for (const auto& x : pts) {
        const Quaternion v = f(x);
        EXPECT_LT(max_abs(oracle::dbar(f, x)), 1e-6 * scale_of(v)) << to_string(idx);
        for (double s : {0.5, 2.0}) {
          const Quaternion scaled = f(s * x);
          expect_near(scaled, std::pow(s, idx.k) * v, 1e-12 * scale_of(scaled));
        }
      }
    }
  }
}

TEST(Kelvin, Examples) {
  std::mt19937_64 rng(14);
  for (const auto& x : oracle::random_points(rng, 50, 1.05, 3.0)) {
    const double r = norm(x);
    const Quaternion one = kelvin([](const Point3&) { return Quaternion(1.0); }, x);
    expect_near(one, conj(x.to_quaternion()) / (r * r * r), 1e-15);
    const Quaternion k = std::sqrt(5.0 / 7.0) * kelvin([](const Point3& y) { return phi_inner(2, 1, y); }, x);
    expect_near(k, phi_outer(2, 1, x), 1e-12);
    const Quaternion a00 = kelvin([](const Point3& y) { return appell_inner_closed(0, 0, y); }, x);
    expect_near(a00, 4.0 * kPi * cauchy_kernel(x), 1e-14);
  }
  EXPECT_THROW(kelvin([](const Point3&) { return Quaternion(1.0); }, {}), PoleError);
}

TEST(Kelvin, DiagonalImagesMatchClosedForm) {
  std::mt19937_64 rng(15);
  for (const auto& x : oracle::random_points(rng, 20, 0.5, 2.0)) {
    for (int n = 0; n <= 10; ++n) {
      const double f = std::pow(-1.0, n) * oracle::factorial(2 * n + 1) / (oracle::factorial(n) * oracle::factorial(n + 1));
      const double k_scale = oracle::factorial(2 * n + 1) * oracle::factorial(0) / (oracle::factorial(n) * oracle::factorial(n + 1));
      const Quaternion z{x.x1, 0, 0, -x.x2};
      const Quaternion closed = f * conj(x.to_quaternion()) * oracle::qpow(z, n) / std::pow(norm(x), 2 * n + 3);
      const Quaternion via_kelvin = k_scale * kelvin([n](const Point3& y) { return appell_inner_closed(n, n, y); }, x);
      expect_near(via_kelvin, closed, 1e-12 * scale_of(closed));
      expect_near(appell_outer(n, n, x), closed, 1e-12 * scale_of(closed));
    }
  }
}

TEST(PhiOuter, Homogeneity) {
  const Point3 x{0.4, 1.1, -0.7};
  const Quaternion a = phi_outer(2, 1, x);
  const Quaternion b = phi_outer(2, 1, 2.0 * x);
  for (int i = 0; i < 4; ++i) {
    if (std::fabs(a[i]) > 1e-12) EXPECT_NEAR(b[i] / a[i], 1.0 / 16.0, 1e-13);
  }
  EXPECT_THROW(phi_outer(1, 0, {}), PoleError);
}

TEST(AppellOuter, Examples) {
  std::mt19937_64 rng(16);
  for (const auto& x : oracle::random_points(rng, 50, 0.5, 2.0)) {
    const double r = norm(x);
    const Quaternion xb = conj(x.to_quaternion());
    const Quaternion z{x.x1, 0, 0, -x.x2};
    expect_near(appell_outer(0, 0, x), xb / (r * r * r), 1e-13 * scale_of(xb / (r * r * r)));
    const Quaternion a31 = -3.0 * xb * z / std::pow(r, 5);
    expect_near(appell_outer(1, 1, x), a31, 1e-13 * scale_of(a31));
    // d/dx0 (conj(x)/|x|^3), scaled: A_{-3}^0 = -(1/2) d/dx0 A_{-2}^0
    const oracle::Fn base = [](const Point3& y) { return appell_outer(0, 0, y); };
    const Quaternion d = -0.5 * oracle::partial(base, x, 0);
    expect_near(appell_outer(1, 0, x), d, 1e-8 * scale_of(d));
  }
}

TEST(AppellOuter, X0RouteMatchesKelvinRoute) {
  std::mt19937_64 rng(17);
  const auto pts = oracle::random_points(rng, 50, 0.6, 2.5);
  for (int n = 0; n <= 12; ++n) {
    for (int l = 0; l <= n; ++l) {
      std::vector<Quaternion> a;
      std::vector<Quaternion> b;
      for (const auto& x : pts) {
        a.push_back(appell_outer_x0_route(n, l, x));
        b.push_back(appell_outer(n, l, x));
      }
      EXPECT_LT(oracle::relative_error(a, b), 1e-11) << n << "," << l;
    }
  }
}

TEST(CauchyKernel, Examples) {
  expect_near(cauchy_kernel({1, 0, 0}), Quaternion(1.0 / (4.0 * kPi)), 1e-17);
  std::mt19937_64 rng(18);
  const oracle::Fn e2 = [](const Point3& y) { return cauchy_kernel(y); };
  for (const auto& x : oracle::random_points(rng, 20, 0.5, 2.0)) {
    expect_near(4.0 * kPi * cauchy_kernel(x), appell_outer(0, 0, x), 1e-13 * scale_of(appell_outer(0, 0, x)));
    EXPECT_LT(max_abs(oracle::dbar(e2, x)), 1e-6);
  }
  EXPECT_THROW(cauchy_kernel({}), PoleError);
}

TEST(FamilyConvert, Examples) {
  EXPECT_NEAR(family_convert({0, 0}, Family::AppellA, Family::OrthonormalPhi), 2.0 * std::sqrt(kPi / 3.0), 1e-15);
  EXPECT_NEAR(family_convert({1, 0}, Family::AppellA, Family::OrthonormalPhi), 2.0 * std::sqrt(kPi / 10.0), 1e-15);
  EXPECT_NEAR(family_convert({-2, 0}, Family::AppellA, Family::OrthonormalPhi), 2.0 * std::sqrt(kPi), 1e-14);
  EXPECT_NEAR(family_convert({3, 1}, Family::OrthonormalPhi, Family::AppellA) *
                  family_convert({3, 1}, Family::AppellA, Family::OrthonormalPhi),
              1.0, 1e-15);
  EXPECT_EQ(family_convert({3, 1}, Family::AppellA, Family::AppellA), 1.0);
}

TEST(FamilyConvert, PointwiseRatio) {
  std::mt19937_64 rng(19);
  const auto pts = oracle::random_points(rng, 10, 1.1, 1.8);
  for (const BasisIndex idx : indices_in_range(-9, 7)) {
    const double c = family_convert(idx, Family::AppellA, Family::OrthonormalPhi);
    EXPECT_GT(c, 0.0);
    for (const auto& x : pts) {
      const Quaternion a = basis_value(Family::AppellA, idx, x);
      expect_near(a, c * basis_value(Family::OrthonormalPhi, idx, x), 1e-12 * scale_of(a));
    }
  }
}
