#include "monogenica/monogenica.h"

#include <cstdlib>
#include <cstring>
#include <optional>
#include <string>

#include "monogenica/basis.hpp"
#include "monogenica/calculus.hpp"
#include "monogenica/expression.hpp"
#include "monogenica/quadrature.hpp"
#include "monogenica/series.hpp"
#include "monogenica/verify.hpp"

using namespace monogenica;

struct mg_rule {
  QuadratureRule rule;
};

struct mg_function {
  PointFunction fn;
  std::optional<int> degree;
};

struct mg_series {
  SeriesExpansion series;
};

namespace {

thread_local std::string last_error;
thread_local long last_position = -1;

class InvalidArgument : public std::exception {
 public:
  explicit InvalidArgument(const char* what) : what_(what) {}
  const char* what() const noexcept override { return what_; }

 private:
  const char* what_;
};

mg_status fail(mg_status status, const char* message, long position = -1) {
  last_error = message;
  last_position = position;
  return status;
}

template <class Body>
mg_status guard(Body&& body) {
  try {
    body();
    last_error.clear();
    last_position = -1;
    return MG_OK;
  } catch (const ParseError& e) {
    return fail(MG_ERR_PARSE, e.what(), static_cast<long>(e.position()));
  } catch (const IndexError& e) {
    return fail(MG_ERR_INDEX, e.what());
  } catch (const DomainError& e) {
    return fail(MG_ERR_DOMAIN, e.what());
  } catch (const PoleError& e) {
    return fail(MG_ERR_POLE, e.what());
  } catch (const NoPrimitiveError& e) {
    return fail(MG_ERR_NO_PRIMITIVE, e.what());
  } catch (const UnsupportedError& e) {
    return fail(MG_ERR_UNSUPPORTED, e.what());
  } catch (const InvalidArgument& e) {
    return fail(MG_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(MG_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(MG_ERR_INTERNAL, "unknown error");
  }
}

template <class T>
void require(const T* p, const char* what) {
  if (p == nullptr) throw InvalidArgument(what);
}

Family family_of(mg_family f) {
  switch (f) {
    case MG_FAMILY_PHI: return Family::OrthonormalPhi;
    case MG_FAMILY_APPELL: return Family::AppellA;
  }
  throw InvalidArgument("unknown family");
}

mg_family to_c(Family f) { return f == Family::OrthonormalPhi ? MG_FAMILY_PHI : MG_FAMILY_APPELL; }

Point3 point(const double x[3]) { return {x[0], x[1], x[2]}; }

void store(const Quaternion& q, double out[4]) {
  out[0] = q.a0;
  out[1] = q.a1;
  out[2] = q.a2;
  out[3] = q.a3;
}

mg_action to_c(const OperatorAction& a) {
  mg_action out{};
  out.has_target = a.target ? 1 : 0;
  out.target_k = a.target ? a.target->k : 0;
  out.target_l = a.target ? a.target->l : 0;
  out.factor = a.factor;
  return out;
}

QuadratureOrders orders_of(const mg_orders& o) { return {o.n_r, o.n_theta, o.n_phi}; }

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class Make>
mg_status make_series(mg_series** out, Make&& make) {
  return guard([&] {
    require(out, "output pointer is null");
    *out = new mg_series{make()};
  });
}

}  // namespace

extern "C" {

const char* mg_version(void) { return "0.1.0"; }

const char* mg_status_name(mg_status status) {
  switch (status) {
    case MG_OK: return "ok";
    case MG_ERR_INDEX: return "index error";
    case MG_ERR_DOMAIN: return "domain error";
    case MG_ERR_POLE: return "pole error";
    case MG_ERR_UNSUPPORTED: return "unsupported";
    case MG_ERR_NO_PRIMITIVE: return "no primitive";
    case MG_ERR_PARSE: return "parse error";
    case MG_ERR_INVALID_ARGUMENT: return "invalid argument";
    case MG_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* mg_last_error(void) { return last_error.c_str(); }

long mg_last_error_position(void) { return last_position; }

int mg_max_threads(void) { return max_threads(); }

void mg_string_free(char* text) { std::free(text); }

mg_status mg_index_count(int k_min, int k_max, size_t* count) {
  return guard([&] {
    require(count, "count is null");
    *count = indices_in_range(k_min, k_max).size();
  });
}

mg_status mg_indices(int k_min, int k_max, int* ks, int* ls, size_t capacity) {
  return guard([&] {
    require(ks, "ks is null");
    require(ls, "ls is null");
    const auto idx = indices_in_range(k_min, k_max);
    if (idx.size() > capacity) throw InvalidArgument("capacity too small");
    for (std::size_t i = 0; i < idx.size(); ++i) {
      ks[i] = idx[i].k;
      ls[i] = idx[i].l;
    }
  });
}

mg_status mg_basis_eval(mg_family family, int k, int l, const double x[3], double out[4]) {
  return guard([&] {
    require(x, "x is null");
    require(out, "out is null");
    store(basis_value(family_of(family), {k, l}, point(x)), out);
  });
}

mg_status mg_family_convert(int k, int l, mg_family from, mg_family to, double* factor) {
  return guard([&] {
    require(factor, "factor is null");
    *factor = family_convert({k, l}, family_of(from), family_of(to));
  });
}

mg_status mg_norm_formula(int n, int m, double* norm) {
  return guard([&] {
    require(norm, "norm is null");
    *norm = solid_monogenic_norm(n, m);
  });
}

mg_status mg_spherical_monogenic(int y_part, int n, int m, double theta, double phi, double out[4]) {
  return guard([&] {
    require(out, "out is null");
    store(spherical_monogenic(y_part ? Harmonic::Y : Harmonic::X, n, m, theta, phi), out);
  });
}

mg_status mg_derivative_action(mg_family family, int k, int l, mg_action* out) {
  return guard([&] {
    require(out, "out is null");
    *out = to_c(basis_derivative({k, l}, family_of(family)));
  });
}

mg_status mg_primitive_action(mg_family family, int k, int l, mg_action* out) {
  return guard([&] {
    require(out, "out is null");
    *out = to_c(basis_primitive({k, l}, family_of(family)));
  });
}

mg_status mg_kernel_depth(int k, int l, int* depth) {
  return guard([&] {
    require(depth, "depth is null");
    *depth = kernel_depth({k, l});
  });
}

mg_status mg_taylor_functional(int fk, int fl, int ek, int el, double* value) {
  return guard([&] {
    require(value, "value is null");
    *value = taylor_functional({fk, fl}, {ek, el});
  });
}

mg_status mg_fd_hyper_derivative(const mg_function* f, const double x[3], double h, double out[4]) {
  return guard([&] {
    require(f, "function is null");
    require(x, "x is null");
    require(out, "out is null");
    store(fd_hyper_derivative(f->fn, point(x), h), out);
  });
}

mg_status mg_fd_dbar(const mg_function* f, const double x[3], double h, double out[4]) {
  return guard([&] {
    require(f, "function is null");
    require(x, "x is null");
    require(out, "out is null");
    store(fd_dbar(f->fn, point(x), h), out);
  });
}

mg_status mg_function_parse(const char* text, mg_function** out) {
  return guard([&] {
    require(text, "text is null");
    require(out, "output pointer is null");
    Expression e = Expression::parse(text);
    const auto degree = e.polynomial_degree();
    *out = new mg_function{[e = std::move(e)](const Point3& x) { return e(x); }, degree};
  });
}

mg_status mg_function_basis(mg_family family, int k, int l, mg_function** out) {
  return guard([&] {
    require(out, "output pointer is null");
    const Family fam = family_of(family);
    const BasisIndex idx{k, l};
    require_valid(idx);
    std::optional<int> degree;
    if (idx.is_inner()) degree = k;
    *out = new mg_function{[fam, idx](const Point3& x) { return basis_value(fam, idx, x); }, degree};
  });
}

mg_status mg_function_from_callback(mg_callback callback, void* user_data, mg_function** out) {
  return guard([&] {
    require(out, "output pointer is null");
    if (callback == nullptr) throw InvalidArgument("callback is null");
    *out = new mg_function{[callback, user_data](const Point3& x) {
                             const double in[3] = {x.x0, x.x1, x.x2};
                             double v[4] = {0, 0, 0, 0};
                             if (callback(in, v, user_data) != 0) throw Error("callback reported failure");
                             return Quaternion{v[0], v[1], v[2], v[3]};
                           },
                           std::nullopt};
  });
}

mg_status mg_function_from_series(const mg_series* series, mg_function** out) {
  return guard([&] {
    require(series, "series is null");
    require(out, "output pointer is null");
    std::optional<int> degree;
    if (!series->series.has_outer_terms()) {
      degree = 0;
      for (const auto& [idx, c] : series->series.coeffs) degree = std::max(*degree, idx.k);
    }
    *out = new mg_function{[s = series->series](const Point3& x) { return evaluate(s, x); }, degree};
  });
}

void mg_function_free(mg_function* f) { delete f; }

mg_status mg_function_eval(const mg_function* f, const double x[3], double out[4]) {
  return guard([&] {
    require(f, "function is null");
    require(x, "x is null");
    require(out, "out is null");
    store(f->fn(point(x)), out);
  });
}

mg_status mg_function_degree(const mg_function* f, int* degree) {
  return guard([&] {
    require(f, "function is null");
    require(degree, "degree is null");
    *degree = f->degree.value_or(-1);
  });
}

mg_orders mg_default_orders(int n_max) {
  const QuadratureOrders o = QuadratureOrders::for_degree(n_max < 0 ? 0 : n_max);
  return {o.n_r, o.n_theta, o.n_phi};
}

mg_status mg_rule_build(mg_domain_kind kind, double r_in, double r_out, mg_orders orders, mg_rule** out) {
  return guard([&] {
    require(out, "output pointer is null");
    Domain d;
    switch (kind) {
      case MG_DOMAIN_BALL: d = Domain::ball(r_out); break;
      case MG_DOMAIN_SPHERE: d = Domain::sphere(r_out); break;
      case MG_DOMAIN_SHELL: d = Domain::shell(r_in, r_out); break;
      case MG_DOMAIN_EXTERIOR: d = Domain::exterior(r_in); break;
      default: throw InvalidArgument("unknown domain kind");
    }
    *out = new mg_rule{QuadratureRule::build(d, orders_of(orders))};
  });
}

void mg_rule_free(mg_rule* rule) { delete rule; }

mg_status mg_rule_size(const mg_rule* rule, size_t* size) {
  return guard([&] {
    require(rule, "rule is null");
    require(size, "size is null");
    *size = rule->rule.size();
  });
}

mg_status mg_integrate(const mg_rule* rule, const mg_function* f, double out[4]) {
  return guard([&] {
    require(rule, "rule is null");
    require(f, "function is null");
    require(out, "out is null");
    store(integrate(f->fn, rule->rule), out);
  });
}

mg_status mg_inner_product(const mg_rule* rule, const mg_function* f, const mg_function* g, double out[4]) {
  return guard([&] {
    require(rule, "rule is null");
    require(f, "function is null");
    require(g, "function is null");
    require(out, "out is null");
    store(inner_product(f->fn, g->fn, rule->rule), out);
  });
}

mg_status mg_gram(const mg_rule* rule, mg_family family, const int* ks, const int* ls, size_t count, double* out) {
  return guard([&] {
    require(rule, "rule is null");
    if (count > 0) {
      require(ks, "ks is null");
      require(ls, "ls is null");
      require(out, "out is null");
    }
    const Family fam = family_of(family);
    std::vector<PointFunction> fs;
    for (std::size_t i = 0; i < count; ++i) {
      const BasisIndex idx{ks[i], ls[i]};
      require_valid(idx);
      fs.push_back([fam, idx](const Point3& x) { return basis_value(fam, idx, x); });
    }
    const GramMatrix g = gram_matrix(fs, rule->rule);
    for (std::size_t i = 0; i < count; ++i) {
      for (std::size_t j = 0; j < count; ++j) store(g(i, j), out + 4 * (i * count + j));
    }
  });
}

mg_status mg_cauchy_integral(const mg_rule* sphere, const mg_function* f, const double x[3], double out[4]) {
  return guard([&] {
    require(sphere, "rule is null");
    require(f, "function is null");
    require(x, "x is null");
    require(out, "out is null");
    store(cauchy_integral(f->fn, point(x), sphere->rule), out);
  });
}

mg_status mg_fourier_expand(const mg_function* f, int n_max, const mg_rule* ball, mg_series** out) {
  return make_series(out, [&] {
    require(f, "function is null");
    require(ball, "rule is null");
    return fourier_expand(f->fn, n_max, ball->rule);
  });
}

mg_status mg_taylor_coeffs(const mg_function* f, int n_max, double rho, const mg_orders* orders, mg_series** out) {
  return make_series(out, [&] {
    require(f, "function is null");
    std::optional<QuadratureOrders> o;
    if (orders) o = orders_of(*orders);
    return taylor_coeffs(f->fn, n_max, rho, o ? &*o : nullptr);
  });
}

mg_status mg_laurent_expand(const mg_function* f, double rho, int k_min, int k_max, mg_laurent_variant variant,
                            const mg_orders* orders, mg_series** out) {
  return make_series(out, [&] {
    require(f, "function is null");
    std::optional<QuadratureOrders> o;
    if (orders) o = orders_of(*orders);
    const LaurentVariant v = variant == MG_LAURENT_PHI ? LaurentVariant::Phi : LaurentVariant::Appell;
    return laurent_expand(f->fn, rho, k_min, k_max, v, o ? &*o : nullptr);
  });
}

void mg_series_free(mg_series* series) { delete series; }

mg_status mg_series_info(const mg_series* series, mg_series_kind* kind, mg_family* family, int* k_min, int* k_max,
                         size_t* size) {
  return guard([&] {
    require(series, "series is null");
    const SeriesExpansion& s = series->series;
    if (kind) *kind = static_cast<mg_series_kind>(s.kind);
    if (family) *family = to_c(s.family);
    if (k_min) *k_min = s.truncation.k_min;
    if (k_max) *k_max = s.truncation.k_max;
    if (size) *size = s.coeffs.size();
  });
}

mg_status mg_series_entry(const mg_series* series, size_t i, int* k, int* l, double c[4]) {
  return guard([&] {
    require(series, "series is null");
    const auto& coeffs = series->series.coeffs;
    if (i >= coeffs.size()) throw IndexError("series entry out of range");
    auto it = coeffs.begin();
    std::advance(it, static_cast<std::ptrdiff_t>(i));
    if (k) *k = it->first.k;
    if (l) *l = it->first.l;
    if (c) store(it->second, c);
  });
}

mg_status mg_series_eval(const mg_series* series, const double x[3], double out[4]) {
  return guard([&] {
    require(series, "series is null");
    require(x, "x is null");
    require(out, "out is null");
    store(evaluate(series->series, point(x)), out);
  });
}

mg_status mg_series_derive(const mg_series* series, mg_series** out) {
  return make_series(out, [&] {
    require(series, "series is null");
    return derive_series(series->series);
  });
}

mg_status mg_series_primitive(const mg_series* series, mg_series** out) {
  return make_series(out, [&] {
    require(series, "series is null");
    return primitive_series(series->series);
  });
}

mg_status mg_series_convert(const mg_series* series, mg_family to, mg_series** out) {
  return make_series(out, [&] {
    require(series, "series is null");
    return convert_family(series->series, family_of(to));
  });
}

mg_status mg_series_fourier_from_taylor(const mg_series* taylor, mg_series** out) {
  return make_series(out, [&] {
    require(taylor, "series is null");
    return fourier_from_taylor(taylor->series);
  });
}

mg_status mg_series_taylor_from_fourier(const mg_series* fourier, mg_series** out) {
  return make_series(out, [&] {
    require(fourier, "series is null");
    return taylor_from_fourier(fourier->series);
  });
}

mg_status mg_series_prune(const mg_series* series, double threshold, mg_series** out) {
  return make_series(out, [&] {
    require(series, "series is null");
    return prune(series->series, threshold);
  });
}

mg_status mg_series_truncate(const mg_series* series, int k_min, int k_max, mg_series** out) {
  return make_series(out, [&] {
    require(series, "series is null");
    return truncate(series->series, k_min, k_max);
  });
}

mg_status mg_series_l2_residual(const mg_series* series, const mg_function* f, const mg_rule* rule,
                                double* residual) {
  return guard([&] {
    require(series, "series is null");
    require(f, "function is null");
    require(rule, "rule is null");
    require(residual, "residual is null");
    *residual = l2_residual(series->series, f->fn, rule->rule);
  });
}

mg_status mg_series_parseval(const mg_series* series, const mg_function* f, const mg_rule* ball, double* lhs,
                             double* rhs) {
  return guard([&] {
    require(series, "series is null");
    require(f, "function is null");
    require(ball, "rule is null");
    const ParsevalResult p = parseval(series->series, f->fn, ball->rule);
    if (lhs) *lhs = p.lhs;
    if (rhs) *rhs = p.rhs;
  });
}

mg_status mg_series_to_json(const mg_series* series, char** json) {
  return guard([&] {
    require(series, "series is null");
    require(json, "output pointer is null");
    *json = copy_string(to_json(series->series));
  });
}

mg_status mg_series_from_json(const char* json, mg_series** out) {
  return make_series(out, [&] {
    require(json, "json is null");
    return series_from_json(json);
  });
}

mg_status mg_verify_run(int n_max, uint64_t seed, int deep, char** json, int* all_passed) {
  return guard([&] {
    require(json, "output pointer is null");
    const VerifyReport report = run_verification({n_max, seed, deep != 0});
    *json = copy_string(to_json(report));
    if (all_passed) *all_passed = report.all_passed() ? 1 : 0;
  });
}

}  // extern "C"
