#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "monogenica/series.hpp"
#include "oracles.hpp"

using namespace monogenica;
using oracle::kPi;

namespace {

void expect_near(const Quaternion& a, const Quaternion& b, double tol) {
  EXPECT_LE(max_abs(a - b), tol) << a << " vs " << b;
}

void expect_only(const SeriesExpansion& s, const std::map<BasisIndex, Quaternion>& expected, double tol) {
  for (const auto& [idx, c] : s.coeffs) {
    const auto it = expected.find(idx);
    expect_near(c, it == expected.end() ? Quaternion{} : it->second, tol);
  }
  for (const auto& [idx, c] : expected) EXPECT_TRUE(s.coeffs.count(idx)) << to_string(idx);
}

PointFunction appell(int k, int l) {
  return [k, l](const Point3& y) { return basis_value(Family::AppellA, {k, l}, y); };
}

QuadratureRule unit_ball(int n) { return QuadratureRule::build(Domain::ball(), QuadratureOrders::for_degree(n)); }

// Random series with entries in [-1, 1].
SeriesExpansion random_series(std::mt19937_64& rng, SeriesKind kind, Family fam, int k_min, int k_max) {
  SeriesExpansion s{kind, fam, {}, {k_min, k_max}};
  for (const auto& idx : indices_in_range(k_min, k_max)) s.coeffs[idx] = oracle::random_quaternion(rng);
  return s;
}

}  // namespace

TEST(Fourier, Examples) {
  const auto ball = unit_ball(4);
  const PointFunction f = [](const Point3& x) { return phi_inner(2, 1, x) * (1.0 + kE2); };
  const SeriesExpansion s = fourier_expand(f, 4, ball);
  EXPECT_EQ(s.kind, SeriesKind::Fourier);
  EXPECT_EQ(s.family, Family::OrthonormalPhi);
  expect_only(s, {{{2, 1}, 1.0 + kE2}}, 1e-10);

  const SeriesExpansion a = fourier_expand(appell(1, 0), 4, ball);
  expect_only(a, {{{1, 0}, 2.0 * std::sqrt(kPi / 10.0)}}, 1e-10);

  const SeriesExpansion z = fourier_expand([](const Point3&) { return Quaternion{}; }, 3, ball);
  for (const auto& [idx, c] : z.coeffs) expect_near(c, 0.0, 0.0);
  EXPECT_THROW(fourier_expand(f, 2, QuadratureRule::build(Domain::ball(2.0), {4, 4, 4})), DomainError);
  EXPECT_THROW(fourier_expand(f, kMaxDegree + 1, ball), IndexError);
}

TEST(Evaluate, RoundtripAndEdgeCases) {
  const auto ball = unit_ball(4);
  const PointFunction f = [](const Point3& x) { return phi_inner(2, 1, x) * (1.0 + kE2); };
  const SeriesExpansion s = fourier_expand(f, 4, ball);
  std::mt19937_64 rng(41);
  for (const auto& x : oracle::random_points(rng, 30, 0.0, 1.0)) expect_near(evaluate(s, x), f(x), 1e-9);
  expect_near(evaluate(SeriesExpansion{}, {0.1, 0.2, 0.3}), 0.0, 0.0);
  SeriesExpansion outer{SeriesKind::Laurent, Family::AppellA, {{{-2, 0}, 1.0}}, {-2, -2}};
  EXPECT_THROW(evaluate(outer, {}), PoleError);
}

TEST(Evaluate, CoefficientsActFromTheRight) {
  SeriesExpansion s{SeriesKind::Fourier, Family::OrthonormalPhi, {{{2, 1}, kE1}}, {0, 2}};
  const Point3 x{0.2, 0.5, -0.3};
  expect_near(evaluate(s, x), phi_inner(2, 1, x) * kE1, 1e-16);
  EXPECT_GT(max_abs(evaluate(s, x) - kE1 * phi_inner(2, 1, x)), 1e-3);
}

TEST(DeriveSeries, Examples) {
  SeriesExpansion s{SeriesKind::Fourier, Family::OrthonormalPhi, {{{2, 0}, 1.0}}, {0, 2}};
  expect_only(derive_series(s), {{{1, 0}, std::sqrt(42.0 / 5.0)}}, 1e-14);
  SeriesExpansion c{SeriesKind::Fourier, Family::OrthonormalPhi, {{{3, 3}, 1.0}}, {0, 3}};
  EXPECT_TRUE(derive_series(c).coeffs.empty());
}

TEST(DeriveSeries, MatchesFiniteDifferences) {
  std::mt19937_64 rng(42);
  for (const Family fam : {Family::OrthonormalPhi, Family::AppellA}) {
    const SeriesExpansion s = random_series(rng, SeriesKind::Fourier, fam, 0, 5);
    const SeriesExpansion d = derive_series(s);
    const PointFunction f = [&](const Point3& y) { return evaluate(s, y); };
    for (const auto& x : oracle::random_points(rng, 10, 0.3, 1.0)) {
      const Quaternion ref = oracle::hyper_derivative(f, x);
      expect_near(evaluate(d, x), ref, 1e-5 * std::max(1.0, max_abs(ref)));
    }
  }
  const SeriesExpansion l = random_series(rng, SeriesKind::Laurent, Family::AppellA, -5, 3);
  const SeriesExpansion dl = derive_series(l);
  const PointFunction fl = [&](const Point3& y) { return evaluate(l, y); };
  for (const auto& x : oracle::random_points(rng, 10, 1.2, 1.8)) {
    const Quaternion ref = oracle::hyper_derivative(fl, x);
    expect_near(evaluate(dl, x), ref, 1e-5 * std::max(1.0, max_abs(ref)));
  }
}

TEST(DeriveSeries, ImagesOfSingletonsStayOrthogonal) {
  std::vector<PointFunction> fs;
  for (const auto& idx : indices_in_range(0, 6)) {
    const SeriesExpansion d = derive_series({SeriesKind::Fourier, Family::OrthonormalPhi, {{idx, 1.0}}, {0, 6}});
    if (d.coeffs.empty()) continue;
    fs.push_back([d](const Point3& x) { return evaluate(d, x); });
  }
  const GramMatrix g = gram_matrix(fs, unit_ball(6));
  for (std::size_t i = 0; i < g.size; ++i) {
    for (std::size_t j = 0; j < g.size; ++j) {
      if (i != j) expect_near(g(i, j), 0.0, 1e-10);
    }
  }
}

TEST(PrimitiveSeries, Examples) {
  SeriesExpansion s{SeriesKind::Fourier, Family::OrthonormalPhi, {{{0, 0}, 1.0}}, {0, 0}};
  expect_only(primitive_series(s), {{{1, 0}, std::sqrt(0.3)}}, 1e-15);
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const Family fam = trial % 2 ? Family::AppellA : Family::OrthonormalPhi;
    const SeriesExpansion r = random_series(rng, SeriesKind::Fourier, fam, 0, 6);
    const SeriesExpansion p = primitive_series(r);
    for (const auto& [idx, c] : p.coeffs) EXPECT_NE(idx.l, idx.k) << "diagonal term in primitive";
    const SeriesExpansion back = derive_series(p);
    ASSERT_EQ(back.coeffs.size(), r.coeffs.size());
    for (const auto& [idx, c] : r.coeffs) {
      expect_near(back.coefficient(idx), c, 1e-14 * std::max(1.0, max_abs(c)));
    }
  }
  SeriesExpansion bad{SeriesKind::Laurent, Family::OrthonormalPhi, {{{-3, 1}, 1.0}}, {-3, -3}};
  EXPECT_THROW(primitive_series(bad), UnsupportedError);
  EXPECT_THROW(primitive_series(bad), NoPrimitiveError);
}

TEST(Taylor, Examples) {
  expect_only(taylor_coeffs(appell(2, 1), 4, 1.0), {{{2, 1}, 1.0}}, 1e-9);
  const Quaternion c{0.3, -1.0, 2.0, 0.5};
  expect_only(taylor_coeffs([c](const Point3&) { return c; }, 3, 0.7), {{{0, 0}, c}}, 1e-9);
  const PointFunction f = [](const Point3& x) { return appell_inner(1, 0, x) + appell_inner(3, 3, x) * kE1; };
  const SeriesExpansion t = taylor_coeffs(f, 4, 1.0);
  EXPECT_EQ(t.kind, SeriesKind::Taylor);
  expect_only(t, {{{1, 0}, 1.0}, {{3, 3}, kE1}}, 1e-9);
}

TEST(Taylor, AgreesWithTaylorFunctionalsOnPolynomials) {
  // t_{n,l} is the Taylor functional applied to f; for f = sum A c the
  // functional picks out c exactly.
  std::mt19937_64 rng(44);
  const SeriesExpansion s = random_series(rng, SeriesKind::Taylor, Family::AppellA, 0, 5);
  const SeriesExpansion t = taylor_coeffs([&](const Point3& x) { return evaluate(s, x); }, 5, 0.9);
  for (const auto& [idx, c] : s.coeffs) {
    Quaternion via_functional;
    for (const auto& [jdx, d] : s.coeffs) via_functional += taylor_functional(idx, jdx) * d;
    expect_near(t.coefficient(idx), via_functional, 1e-9);
  }
}

TEST(FourierTaylor, Link) {
  SeriesExpansion t{SeriesKind::Taylor, Family::AppellA, {{{0, 0}, 1.0}}, {0, 0}};
  expect_only(fourier_from_taylor(t), {{{0, 0}, 2.0 * std::sqrt(kPi / 3.0)}}, 1e-15);
  std::mt19937_64 rng(45);
  const SeriesExpansion r = random_series(rng, SeriesKind::Taylor, Family::AppellA, 0, 8);
  const SeriesExpansion back = taylor_from_fourier(fourier_from_taylor(r));
  for (const auto& [idx, c] : r.coeffs) expect_near(back.coefficient(idx), c, 1e-14);
  const SeriesExpansion rf = random_series(rng, SeriesKind::Fourier, Family::OrthonormalPhi, 0, 8);
  const SeriesExpansion back2 = fourier_from_taylor(taylor_from_fourier(rf));
  for (const auto& [idx, c] : rf.coeffs) expect_near(back2.coefficient(idx), c, 1e-14);
  EXPECT_THROW(fourier_from_taylor(rf), UnsupportedError);

  const PointFunction f = [](const Point3& x) { return appell_inner(2, 0, x) + appell_inner(2, 2, x) * kE3; };
  const SeriesExpansion a = fourier_expand(f, 4, unit_ball(4));
  const SeriesExpansion b = fourier_from_taylor(taylor_coeffs(f, 4, 1.0));
  for (const auto& [idx, c] : a.coeffs) expect_near(b.coefficient(idx), c, 1e-8);
}

TEST(Laurent, Examples) {
  expect_only(laurent_expand(appell(-2, 0), 1.0, -6, 6), {{{-2, 0}, 1.0}}, 1e-8);
  const PointFunction f = [](const Point3& x) { return appell_inner(1, 0, x) + appell_outer(1, 1, x) * kE1; };
  expect_only(laurent_expand(f, 1.0, -6, 6), {{{1, 0}, 1.0}, {{-3, 1}, kE1}}, 1e-8);
  EXPECT_THROW(laurent_expand(f, 0.0, -2, 2), DomainError);
  EXPECT_THROW(laurent_expand(f, 1.0, 2, -2), IndexError);
}

TEST(Laurent, RandomRoundtripAtSeveralRadii) {
  std::mt19937_64 rng(46);
  for (int trial = 0; trial < 3; ++trial) {
    const SeriesExpansion s = random_series(rng, SeriesKind::Laurent, Family::AppellA, -6, 6);
    const PointFunction f = [&](const Point3& x) { return evaluate(s, x); };
    for (double rho : {0.8, 1.0, 1.25}) {
      const SeriesExpansion g = laurent_expand(f, rho, -6, 6);
      for (const auto& [idx, c] : s.coeffs) {
        expect_near(g.coefficient(idx), c, 1e-8 * std::max(1.0, std::pow(rho, -idx.k)));
      }
    }
  }
}

TEST(Laurent, PhiVariantMatchesOrthonormalSurfaceFormula) {
  std::mt19937_64 rng(47);
  const SeriesExpansion s = random_series(rng, SeriesKind::Laurent, Family::OrthonormalPhi, -5, 4);
  const PointFunction f = [&](const Point3& x) { return evaluate(s, x); };
  const SeriesExpansion g = laurent_expand(f, 1.0, -5, 4, LaurentVariant::Phi);
  EXPECT_EQ(g.family, Family::OrthonormalPhi);
  const auto sphere = QuadratureRule::build(Domain::sphere(), QuadratureOrders::for_degree(5));
  for (const auto& [idx, c] : s.coeffs) {
    expect_near(g.coefficient(idx), c, 1e-9);
    const BasisIndex dual{-(idx.k + 2), idx.l};
    const PointFunction d = [dual](const Point3& y) { return basis_value(Family::OrthonormalPhi, dual, y); };
    const double norm_factor = 1.0 / std::sqrt((2.0 * idx.k + 3.0) * (2.0 * idx.k + 1.0));
    expect_near(norm_factor * surface_integral_with_element(d, f, sphere), c, 1e-9);
  }
  const SeriesExpansion a = laurent_expand(f, 1.0, -5, 4, LaurentVariant::Appell);
  const SeriesExpansion converted = convert_family(a, Family::OrthonormalPhi);
  for (const auto& [idx, c] : g.coeffs) expect_near(converted.coefficient(idx), c, 1e-12);
}

TEST(Laurent, RadiusIndependenceForShellMonogenic) {
  // Two kernel singularities, one inside 0.5 and one outside 2.
  const Point3 inside{0.1, -0.3, 0.2};
  const Point3 outside{0.0, 2.5, 1.0};
  const PointFunction f = [&](const Point3& x) {
    return cauchy_kernel(x - inside) * (1.0 + kE3) + cauchy_kernel(x - outside) * kE2;
  };
  const QuadratureOrders orders = QuadratureOrders::for_degree(60);
  const SeriesExpansion a = laurent_expand(f, 0.8, -6, 6, LaurentVariant::Appell, &orders);
  const SeriesExpansion b = laurent_expand(f, 1.25, -6, 6, LaurentVariant::Appell, &orders);
  for (const auto& [idx, c] : a.coeffs) expect_near(b.coefficient(idx), c, 1e-8 * std::max(1.0, max_abs(c)));
}

TEST(Laurent, SecondaryPartIsTaylorSeries) {
  const Point3 center{0.0, 0.0, 1.5};
  const PointFunction f = [&](const Point3& x) { return cauchy_kernel(x - center); };
  const QuadratureOrders orders = QuadratureOrders::for_degree(60);
  const SeriesExpansion l = laurent_expand(f, 1.0, -8, 8, LaurentVariant::Appell, &orders);
  const SeriesExpansion t = taylor_coeffs(f, 8, 0.6, &orders);
  for (const auto& [idx, c] : l.coeffs) {
    if (idx.is_inner()) {
      expect_near(c, t.coefficient(idx), 1e-9 * std::max(1.0, max_abs(c)));
    } else {
      expect_near(c, 0.0, 1e-9);
    }
  }
}

TEST(Cauchy, IntegralFormula) {
  const auto sphere = QuadratureRule::build(Domain::sphere(), QuadratureOrders::for_degree(20));
  const PointFunction f = appell(2, 1);
  const Point3 in{0.2, 0.1, -0.3};
  expect_near(cauchy_integral(f, in, sphere), f(in), 1e-8);
  expect_near(cauchy_integral(f, {2, 0, 0}, sphere), 0.0, 1e-8);
  expect_near(cauchy_integral([](const Point3&) { return Quaternion(1.0); }, {0.1, 0.2, 0.0}, sphere), 1.0, 1e-8);
  EXPECT_THROW(cauchy_integral(f, {1, 0, 0}, sphere), DomainError);
}

TEST(Parseval, Examples) {
  const auto ball = unit_ball(4);
  const PointFunction f = [](const Point3& x) { return phi_inner(1, 0, x) * (2.0 * kE3); };
  const ParsevalResult p = parseval(fourier_expand(f, 4, ball), f, ball);
  EXPECT_NEAR(p.lhs, 4.0, 1e-10);
  EXPECT_NEAR(p.rhs, 4.0, 1e-10);
  const PointFunction zero = [](const Point3&) { return Quaternion{}; };
  const ParsevalResult z = parseval(fourier_expand(zero, 2, ball), zero, ball);
  EXPECT_EQ(z.lhs, 0.0);
  EXPECT_EQ(z.rhs, 0.0);
  const PointFunction a = appell(2, 0);
  const double c = family_convert({2, 0}, Family::AppellA, Family::OrthonormalPhi);
  const ParsevalResult q = parseval(fourier_expand(a, 4, ball), a, ball);
  EXPECT_NEAR(q.lhs, c * c, 1e-9);
  EXPECT_NEAR(q.rhs, c * c, 1e-9);
}

TEST(Truncation, ErrorDecaysForShiftedKernel) {
  const Point3 center{0.0, 0.0, 1.5};
  const PointFunction f = [&](const Point3& x) { return cauchy_kernel(x - center); };
  const auto ball = QuadratureRule::build(Domain::ball(), QuadratureOrders::for_degree(24));
  const SeriesExpansion full = fourier_expand(f, 10, ball);
  double previous = std::numeric_limits<double>::infinity();
  for (int n = 2; n <= 10; ++n) {
    const double r = l2_residual(truncate(full, 0, n), f, ball);
    EXPECT_LT(r, previous) << n;
    previous = r;
  }
}

TEST(ZetaPolynomialSeries, Conversion) {
  SeriesExpansion s{SeriesKind::Taylor, Family::AppellA, {{{0, 0}, 1.0}, {{3, 3}, kE2}}, {0, 3}};
  const ZetaPolynomial p = to_zeta_polynomial(s);
  const Point3 x{0.3, 0.4, -0.1};
  expect_near(p(x), evaluate(s, x), 1e-15);
  s.coeffs[{2, 1}] = 1.0;
  EXPECT_THROW(to_zeta_polynomial(s), UnsupportedError);
}

TEST(Json, RoundtripIsBitExact) {
  std::mt19937_64 rng(48);
  SeriesExpansion s = random_series(rng, SeriesKind::Laurent, Family::AppellA, -4, 3);
  s.coeffs[{1, 0}] = Quaternion{0.1, 1.0 / 3.0, -2e-300, 6.02214076e23};
  const std::string text = to_json(s);
  const SeriesExpansion back = series_from_json(text);
  EXPECT_EQ(back, s);
  EXPECT_EQ(to_json(back), text);
  EXPECT_LT(text.find("\"k\": -4"), text.find("\"k\": 3"));
  EXPECT_THROW(series_from_json("{\"kind\": \"fourier\""), ParseError);
  EXPECT_THROW(series_from_json(R"({"kind":"fourier","family":"phi","entries":[{"k":-3,"l":0,"c":[1,0,0,0]}]})"),
               UnsupportedError);
  EXPECT_THROW(series_from_json(R"({"kind":"laurent","family":"phi","entries":[{"k":-1,"l":0,"c":[1,0,0,0]}]})"),
               IndexError);
  EXPECT_THROW(series_from_json(R"({"kind":"odd","family":"phi","entries":[]})"), ParseError);
  const SeriesExpansion e = series_from_json(R"({"kind":"taylor","family":"appell","entries":[]})");
  EXPECT_TRUE(e.coeffs.empty());
}
