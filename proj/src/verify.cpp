#include "monogenica/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <nlohmann/json.hpp>
#include <random>

#include "monogenica/basis.hpp"
#include "monogenica/calculus.hpp"
#include "monogenica/legendre.hpp"
#include "monogenica/quadrature.hpp"
#include "monogenica/series.hpp"
#include "numeric_util.hpp"

namespace monogenica {

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

namespace {

using detail::kPi;
using Rng = std::mt19937_64;

std::vector<Point3> sample_points(Rng& rng, int count, double lo, double hi) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> radius(lo, hi);
  std::vector<Point3> out;
  while (static_cast<int>(out.size()) < count) {
    const Point3 d{gauss(rng), gauss(rng), gauss(rng)};
    const double n = norm(d);
    if (n < 1e-8) continue;
    out.push_back((radius(rng) / n) * d);
  }
  return out;
}

Quaternion random_quaternion(Rng& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  return {u(rng), u(rng), u(rng), u(rng)};
}

// max |a - b| / max(|b|, floor) over the samples.
class Discrepancy {
 public:
  explicit Discrepancy(double floor = 1e-300) : den_(floor) {}
  void add(const Quaternion& a, const Quaternion& b) {
    num_ = std::max(num_, max_abs(a - b));
    den_ = std::max(den_, max_abs(b));
  }
  double relative() const { return num_ / den_; }
  double absolute() const { return num_; }

 private:
  double num_ = 0.0;
  double den_;
};

struct Suite {
  VerifyOptions opt;
  std::vector<CheckResult> checks;

  void record(std::string name, double residual, double tolerance, std::string detail) {
    checks.push_back({std::move(name), residual <= tolerance && std::isfinite(residual), residual, tolerance,
                      std::move(detail)});
  }

  Rng rng_for(std::uint64_t salt) const { return Rng(opt.seed * 0x9E3779B97F4A7C15ULL + salt); }
};

void check_quaternion_algebra(Suite& s) {
  Rng rng = s.rng_for(1);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const Quaternion a = random_quaternion(rng);
    const Quaternion b = random_quaternion(rng);
    worst = std::max(worst, max_abs(conj(a * b) - conj(b) * conj(a)));
    worst = std::max(worst, std::fabs(norm(a * b) - norm(a) * norm(b)) / (norm(a) * norm(b)));
    worst = std::max(worst, max_abs(inv(a) * a - 1.0));
    worst = std::max(worst, max_abs(antimonogenic_involution(antimonogenic_involution(a)) - a));
  }
  s.record("quaternion_algebra", worst, 1e-14, "conjugation, norm multiplicativity, inverse, involution");
}

void check_legendre(Suite& s) {
  Rng rng = s.rng_for(2);
  std::uniform_real_distribution<double> u(-0.999, 0.999);
  double worst = 0.0;
  auto scaled = [](double r, std::initializer_list<double> terms) {
    double m = 1e-300;
    for (double t : terms) m = std::max(m, std::fabs(t));
    return std::fabs(r) / m;
  };
  for (int trial = 0; trial < 100; ++trial) {
    const double t = u(rng);
    const double st = std::sqrt(1.0 - t * t);
    const LegendreTable p(42, t);
    for (int n = 0; n <= 40; ++n) {
      for (int m = 0; m <= n; ++m) {
        const double pn = p.value(n, m);
        const double pn1 = p.value(n + 1, m);
        const double d = p.derivative(n + 1, m);
        worst = std::max(worst, scaled((1 - t * t) * d - (n + m + 1) * pn + (n + 1) * t * pn1,
                                       {(1 - t * t) * d, (n + m + 1) * pn, (n + 1) * t * pn1}));
        const double up = p.value(n + 1, m + 1);
        worst = std::max(worst, scaled(st * d - up + m * t * pn1 / st, {st * d, up, m * t * pn1 / st}));
        const double a = p.value(n + 2, m + 1);
        const double b = p.value_or_zero(n, m + 1);
        worst = std::max(worst, scaled((2 * n + 3) * st * pn1 - (a - b), {(2 * n + 3) * st * pn1, a, b}));
        if (n >= 1) {
          const double q = p.value_or_zero(n - 1, m);
          worst = std::max(worst, scaled((n - m + 1) * pn1 - (2 * n + 1) * t * pn + (n + m) * q,
                                         {(n - m + 1) * pn1, (2 * n + 1) * t * pn, (n + m) * q}));
        }
      }
    }
  }
  s.record("legendre_recurrences", worst, 1e-12, "recurrences I, II, III and the two-step formula, n <= 40");
}

void check_coeff_relations(Suite& s) {
  Rng rng = s.rng_for(3);
  std::uniform_real_distribution<double> u(0.0, kPi);
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const double theta = u(rng);
    for (int n = 0; n <= std::max(12, s.opt.n_max); ++n) {
      for (int m = 0; m <= n; ++m) {
        const CoeffValues c0 = coeff_functions(n, m, theta);
        const CoeffValues c1 = coeff_functions(n, m + 1, theta);
        const double scale = std::max({1.0, std::fabs(c0.A), std::fabs(c1.A), std::fabs(c1.B), std::fabs(c1.C)});
        worst = std::max(worst, std::fabs((n + m + 2) * c0.A - (c1.C - c1.B)) / scale);
        worst = std::max(worst, std::fabs(c1.A - (n + m + 2) * (c0.B + c0.C)) / ((n + m + 2) * scale));
      }
    }
  }
  s.record("coefficient_relations", worst, 1e-11, "(n+m+2)A^m = C^{m+1} - B^{m+1}, A^{m+1} = (n+m+2)(B^m + C^m)");
}

void check_triple_path(Suite& s) {
  Rng rng = s.rng_for(4);
  const int n_top = s.opt.deep ? std::max(12, s.opt.n_max) : s.opt.n_max;
  const auto pts = sample_points(rng, 100, 0.0, 1.0);
  double worst = 0.0;
  for (int n = 0; n <= n_top; ++n) {
    for (int l = 0; l <= n; ++l) {
      Discrepancy recur;
      Discrepancy one_step;
      Discrepancy legendre;
      const double c = family_convert({n, l}, Family::AppellA, Family::OrthonormalPhi);
      for (const auto& x : pts) {
        const Quaternion closed = appell_inner_closed(n, l, x);
        recur.add(appell_inner_recur(n, l, x, Recurrence::TwoStep), closed);
        one_step.add(appell_inner_recur(n, l, x, Recurrence::OneStep), closed);
        legendre.add(c * phi_inner_spherical(n, l, x), closed);
      }
      worst = std::max({worst, recur.relative(), one_step.relative(), legendre.relative()});
    }
  }
  s.record("triple_path_agreement", worst, 1e-11,
           "closed form vs recurrences vs Legendre construction, n <= " + std::to_string(n_top));
}

void check_monogenicity_and_homogeneity(Suite& s) {
  Rng rng = s.rng_for(5);
  const auto inner = sample_points(rng, 10, 0.5, 1.0);
  const auto outer = sample_points(rng, 10, 1.2, 2.0);
  double worst_dbar = 0.0;
  double worst_hom = 0.0;
  for (const Family fam : {Family::OrthonormalPhi, Family::AppellA}) {
    for (const BasisIndex idx : indices_in_range(-(s.opt.n_max + 2), s.opt.n_max)) {
      const PointFunction f = [fam, idx](const Point3& y) { return basis_value(fam, idx, y); };
      for (const auto& x : idx.is_inner() ? inner : outer) {
        const Quaternion v = f(x);
        const double scale = std::max(1.0, max_abs(v));
        worst_dbar = std::max(worst_dbar, max_abs(fd_dbar(f, x)) / scale);
        for (double t : {0.5, 2.0}) {
          const Quaternion w = f(t * x);
          worst_hom = std::max(worst_hom, max_abs(w - std::pow(t, idx.k) * v) / std::max(1.0, max_abs(w)));
        }
      }
    }
  }
  s.record("monogenicity", worst_dbar, 1e-6, "central-difference dbar of every basis element, h = 1e-5");
  s.record("homogeneity", worst_hom, 1e-12, "f(t x) = t^k f(x), t in {0.5, 2}");
}

void check_constants_and_kelvin(Suite& s) {
  Rng rng = s.rng_for(6);
  const auto pts = sample_points(rng, 20, 0.5, 2.0);
  double worst_const = 0.0;
  double worst_diag = 0.0;
  double worst_x0 = 0.0;
  for (const auto& x : pts) {
    const Quaternion z = zeta(x);
    Quaternion zp = 1.0;
    for (int l = 0; l <= s.opt.n_max; ++l) {
      worst_const = std::max(worst_const, max_abs(appell_inner_closed(l, l, x) - zp) / std::max(1.0, max_abs(zp)));
      const PointFunction f = [l](const Point3& y) { return appell_inner(l, l, y); };
      worst_const = std::max(worst_const, max_abs(fd_hyper_derivative(f, x)) * 1e-6);
      zp = zp * z;
    }
    for (int n = 0; n <= s.opt.n_max; ++n) {
      const double lf = detail::log_factorial(2 * n + 1) - detail::log_factorial(n) - detail::log_factorial(n + 1);
      const Quaternion via_kelvin =
          std::exp(lf) * kelvin([n](const Point3& y) { return appell_inner(n, n, y); }, x);
      const Quaternion diag = appell_outer(n, n, x);
      worst_diag = std::max(worst_diag, max_abs(via_kelvin - diag) / std::max(1.0, max_abs(diag)));
      for (int l = 0; l <= n; ++l) {
        const Quaternion a = appell_outer(n, l, x);
        worst_x0 = std::max(worst_x0, max_abs(appell_outer_x0_route(n, l, x) - a) / std::max(1.0, max_abs(a)));
      }
    }
  }
  s.record("monogenic_constants", worst_const, 1e-12, "A_l^l = zeta^l and d0 A_l^l = 0 (FD residual scaled by 1e-6)");
  s.record("kelvin_diagonal", worst_diag, 1e-12, "Kelvin images of A_n^n vs the diagonal closed form");
  s.record("outer_x0_route", worst_x0, 1e-10, "outer Appell elements from x0-derivatives vs the Kelvin route");
}

double gram_deviation(const std::vector<BasisIndex>& idx, const QuadratureRule& rule,
                      const std::function<double(const BasisIndex&)>& diagonal) {
  std::vector<PointFunction> fs;
  for (const auto& i : idx) fs.push_back([i](const Point3& y) { return basis_value(Family::OrthonormalPhi, i, y); });
  const GramMatrix g = gram_matrix(fs, rule);
  double worst = 0.0;
  for (std::size_t i = 0; i < g.size; ++i) {
    for (std::size_t j = 0; j < g.size; ++j) {
      worst = std::max(worst, max_abs(g(i, j) - (i == j ? diagonal(idx[i]) : 0.0)));
    }
  }
  return worst;
}

void check_orthogonality(Suite& s) {
  const int n = s.opt.n_max;
  const auto orders = QuadratureOrders::for_degree(n);
  s.record("ball_orthonormality",
           gram_deviation(indices_in_range(0, n), QuadratureRule::build(Domain::ball(), orders),
                          [](const BasisIndex&) { return 1.0; }),
           1e-10, "Gram matrix of phi_k^l, 0 <= k <= " + std::to_string(n) + ", unit ball");
  s.record("exterior_orthonormality",
           gram_deviation(indices_in_range(-(n + 2), -2), QuadratureRule::build(Domain::exterior(), orders),
                          [](const BasisIndex&) { return 1.0; }),
           1e-10, "Gram matrix of outer phi, degree <= " + std::to_string(n) + ", |x| > 1");
  s.record("sphere_products",
           gram_deviation(indices_in_range(-n, n), QuadratureRule::build(Domain::sphere(), orders),
                          [](const BasisIndex& i) { return std::fabs(2.0 * i.k + 3.0); }),
           1e-9, "<phi_k, phi_q> over the unit sphere equals |2k+3| delta");
}

void check_norms(Suite& s) {
  const auto ball = QuadratureRule::build(Domain::ball(), QuadratureOrders::for_degree(s.opt.n_max));
  double worst = 0.0;
  for (int n = 0; n < s.opt.n_max; ++n) {
    for (int m = 0; m <= n + 1; ++m) {
      for (const Harmonic which : {Harmonic::X, Harmonic::Y}) {
        if (which == Harmonic::Y && m == 0) continue;
        const PointFunction f = [=](const Point3& x) {
          const SphericalCoords sc = to_spherical(x);
          return std::pow(sc.r, n) * spherical_monogenic(which, n, m, sc.theta, sc.phi);
        };
        worst = std::max(worst, std::fabs(std::sqrt(inner_product(f, f, ball).a0) / solid_monogenic_norm(n, m) - 1.0));
      }
    }
  }
  s.record("norm_formulas", worst, 1e-10, "quadrature norms of r^n X_n^m, r^n Y_n^m vs closed formulas");
}

void check_operators(Suite& s) {
  Rng rng = s.rng_for(7);
  const auto inner = sample_points(rng, 20, 0.5, 1.0);
  const auto outer = sample_points(rng, 20, 1.2, 2.0);
  double worst = 0.0;
  for (const Family fam : {Family::OrthonormalPhi, Family::AppellA}) {
    for (const BasisIndex idx : indices_in_range(-(s.opt.n_max + 2), s.opt.n_max + 2)) {
      const OperatorAction a = basis_derivative(idx, fam);
      const PointFunction f = [fam, idx](const Point3& y) { return basis_value(fam, idx, y); };
      Discrepancy d(1e-300);
      double null_residual = 0.0;
      for (const auto& x : idx.is_inner() ? inner : outer) {
        const Quaternion fd = fd_hyper_derivative(f, x);
        if (a.target) {
          d.add(fd, basis_value(fam, *a.target, x) * a.factor);
        } else {
          null_residual = std::max(null_residual, max_abs(fd));
        }
      }
      worst = std::max({worst, a.target ? d.relative() : 0.0, null_residual});
    }
  }
  s.record("derivative_index_maps", worst, 1e-5, "FD hypercomplex derivative vs exact index maps, both families");

  double compose = 0.0;
  double max_factor = 0.0;
  BasisIndex arg{};
  for (const BasisIndex idx : indices_in_range(-(s.opt.n_max + 2), s.opt.n_max + 2)) {
    if (idx.k == -2 || (!idx.is_inner() && idx.l == idx.columns() - 1)) continue;
    for (const Family fam : {Family::OrthonormalPhi, Family::AppellA}) {
      const OperatorAction p = basis_primitive(idx, fam);
      const OperatorAction d = basis_derivative(*p.target, fam);
      compose = std::max(compose, std::fabs(p.factor * d.factor - 1.0));
      if (fam == Family::OrthonormalPhi && idx.is_inner() && std::fabs(p.factor) > max_factor) {
        max_factor = std::fabs(p.factor);
        arg = idx;
      }
    }
  }
  const double norm_gap = std::fabs(max_factor - std::sqrt(0.3)) + (arg == BasisIndex{0, 0} ? 0.0 : 1.0);
  s.record("primitive_composition", compose, 1e-14, "d0 after the primitive operator acts as the identity");
  s.record("primitive_operator_norm", norm_gap, 1e-15, "largest inner primitive factor is sqrt(3/10), at (0,0)");

  double functional = 0.0;
  for (const BasisIndex f : indices_in_range(0, s.opt.n_max)) {
    for (const BasisIndex e : indices_in_range(0, s.opt.n_max)) {
      functional = std::max(functional, std::fabs(taylor_functional(f, e) - (f == e ? 1.0 : 0.0)));
    }
  }
  s.record("taylor_functionals", functional, 1e-14, "(1/n!) dbar_C^l d0^{n-l} A = delta");
}

void check_cauchy(Suite& s) {
  Rng rng = s.rng_for(8);
  const auto sphere = QuadratureRule::build(Domain::sphere(), QuadratureOrders::for_degree(24));
  const auto inside = sample_points(rng, 5, 0.0, 0.6);
  const auto outside = sample_points(rng, 5, 1.6, 3.0);
  double worst = 0.0;
  for (const BasisIndex idx : indices_in_range(0, 4)) {
    const PointFunction f = [idx](const Point3& y) { return appell_inner(idx.k, idx.l, y); };
    for (const auto& x : inside) worst = std::max(worst, max_abs(cauchy_integral(f, x, sphere) - f(x)));
    for (const auto& x : outside) worst = std::max(worst, max_abs(cauchy_integral(f, x, sphere)));
  }
  s.record("cauchy_integral_formula", worst, 1e-8, "f(x) inside the unit sphere, 0 outside, f = A_n^l, n <= 4");
}

SeriesExpansion random_series(Rng& rng, SeriesKind kind, Family fam, int k_min, int k_max) {
  SeriesExpansion s{kind, fam, {}, {k_min, k_max}};
  for (const auto& idx : indices_in_range(k_min, k_max)) s.coeffs[idx] = random_quaternion(rng);
  return s;
}

double coefficient_gap(const SeriesExpansion& a, const SeriesExpansion& b) {
  double worst = 0.0;
  for (const auto& [idx, c] : a.coeffs) worst = std::max(worst, max_abs(c - b.coefficient(idx)));
  for (const auto& [idx, c] : b.coeffs) worst = std::max(worst, max_abs(c - a.coefficient(idx)));
  return worst;
}

void check_series(Suite& s) {
  Rng rng = s.rng_for(9);
  const int n = s.opt.n_max;

  double roundtrip = 0.0;
  for (int trial = 0; trial < 3; ++trial) {
    const SeriesExpansion ref = random_series(rng, SeriesKind::Laurent, Family::AppellA, -n, n);
    const PointFunction f = [&](const Point3& x) { return evaluate(ref, x); };
    for (double rho : {0.8, 1.0, 1.25}) roundtrip = std::max(roundtrip, coefficient_gap(laurent_expand(f, rho, -n, n), ref));
  }
  s.record("laurent_roundtrip", roundtrip, 1e-8, "random mixed series, |k| <= n_max, rho in {0.8, 1, 1.25}");

  const Point3 inner_pole{0.1, -0.2, 0.15};
  const Point3 outer_pole{0.0, 1.0, 2.0};
  const PointFunction shell = [&](const Point3& x) {
    return cauchy_kernel(x - inner_pole) * (1.0 + kE1) + cauchy_kernel(x - outer_pole) * kE3;
  };
  const auto fine = QuadratureOrders::for_degree(60);
  s.record("laurent_rho_independence",
           coefficient_gap(laurent_expand(shell, 0.8, -n, n, LaurentVariant::Appell, &fine),
                           laurent_expand(shell, 1.25, -n, n, LaurentVariant::Appell, &fine)),
           1e-8, "kernel poles at |x| = 0.25 and |x| = 2.2, rho = 0.8 vs 1.25");

  const Point3 center{0.0, 0.0, 1.5};
  const SeriesExpansion poly = random_series(rng, SeriesKind::Taylor, Family::AppellA, 0, n);
  const PointFunction entire = [&](const Point3& x) { return cauchy_kernel(x - center) + evaluate(poly, x); };
  const SeriesExpansion laurent = laurent_expand(entire, 1.0, -(n + 2), n + 2, LaurentVariant::Appell, &fine);
  const SeriesExpansion taylor = taylor_coeffs(entire, n + 2, 0.6, &fine);
  double secondary = 0.0;
  for (const auto& [idx, c] : laurent.coeffs) {
    secondary = std::max(secondary, max_abs(c - (idx.is_inner() ? taylor.coefficient(idx) : Quaternion{})));
  }
  s.record("secondary_part_is_taylor", secondary, 1e-9, "Laurent at rho = 1 vs Taylor at rho = 0.6, shifted kernel");

  const auto ball = QuadratureRule::build(Domain::ball(), QuadratureOrders::for_degree(n));
  double link = 0.0;
  double parseval_gap = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    const SeriesExpansion t = random_series(rng, SeriesKind::Taylor, Family::AppellA, 0, n);
    const PointFunction f = [&](const Point3& x) { return evaluate(t, x); };
    const SeriesExpansion direct = fourier_expand(f, n, ball);
    link = std::max(link, coefficient_gap(direct, fourier_from_taylor(taylor_coeffs(f, n, 1.0))));
    const ParsevalResult p = parseval(direct, f, ball);
    parseval_gap = std::max(parseval_gap, std::fabs(p.lhs - p.rhs) / std::max(1.0, p.rhs));
  }
  s.record("fourier_taylor_link", link, 1e-8, "ball Fourier coefficients vs converted sphere Taylor coefficients");
  s.record("parseval", parseval_gap, 1e-9, "sum |alpha|^2 vs Sc <f, f>, relative");

  double prim = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const SeriesExpansion r = random_series(rng, SeriesKind::Fourier, Family::OrthonormalPhi, 0, n);
    prim = std::max(prim, coefficient_gap(derive_series(primitive_series(r)), r));
  }
  s.record("series_derivative_of_primitive", prim, 1e-14, "derive(primitive(s)) = s on random Fourier series");
}

}  // namespace

VerifyReport run_verification(const VerifyOptions& options) {
  if (options.n_max < 1 || options.n_max > 20) throw DomainError("verification n_max must be in [1, 20]");
  Suite s{options, {}};
  check_quaternion_algebra(s);
  check_legendre(s);
  check_coeff_relations(s);
  check_triple_path(s);
  check_monogenicity_and_homogeneity(s);
  check_constants_and_kelvin(s);
  check_orthogonality(s);
  check_norms(s);
  check_operators(s);
  check_cauchy(s);
  check_series(s);
  return {options, std::move(s.checks)};
}

std::string to_json(const VerifyReport& report, int indent) {
  nlohmann::ordered_json doc;
  doc["n_max"] = report.options.n_max;
  doc["seed"] = report.options.seed;
  doc["deep"] = report.options.deep;
  doc["passed"] = report.all_passed();
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    nlohmann::ordered_json j;
    j["name"] = c.name;
    j["passed"] = c.passed;
    j["residual"] = c.residual;
    j["tolerance"] = c.tolerance;
    j["detail"] = c.detail;
    checks.push_back(std::move(j));
  }
  doc["checks"] = std::move(checks);
  return doc.dump(indent);
}

}  // namespace monogenica
