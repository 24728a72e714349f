#include "monogenica/series.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <nlohmann/json.hpp>
#include <vector>

#include "numeric_util.hpp"

namespace monogenica {

using detail::kPi;

const char* to_string(SeriesKind kind) noexcept {
  switch (kind) {
    case SeriesKind::Fourier:
      return "fourier";
    case SeriesKind::Taylor:
      return "taylor";
    case SeriesKind::Laurent:
      return "laurent";
  }
  return "?";
}

Quaternion SeriesExpansion::coefficient(const BasisIndex& idx) const {
  const auto it = coeffs.find(idx);
  return it == coeffs.end() ? Quaternion{} : it->second;
}

bool SeriesExpansion::has_outer_terms() const {
  return !coeffs.empty() && !coeffs.begin()->first.is_inner();
}

void SeriesExpansion::validate() const {
  for (const auto& [idx, c] : coeffs) {
    require_valid(idx);
    if (kind != SeriesKind::Laurent && !idx.is_inner()) {
      throw UnsupportedError(std::string(to_string(kind)) + " series cannot hold outer index " + to_string(idx));
    }
  }
}

namespace {

void require_degree(int n_max) {
  if (n_max < 0 || n_max > kMaxDegree) throw IndexError("n_max outside [0, " + std::to_string(kMaxDegree) + "]");
}

std::vector<Quaternion> values_at_nodes(const PointFunction& f, const QuadratureRule& rule) {
  const auto& nodes = rule.nodes();
  std::vector<Quaternion> out(nodes.size());
  constexpr std::size_t kBlock = 256;
  parallel_for((nodes.size() + kBlock - 1) / kBlock, [&](std::size_t b) {
    const std::size_t end = std::min(nodes.size(), (b + 1) * kBlock);
    for (std::size_t i = b * kBlock; i < end; ++i) out[i] = f(nodes[i].x);
  });
  return out;
}

// Applies an index map termwise, accumulating coefficients at the targets.
template <typename Map>
SeriesExpansion apply_termwise(const SeriesExpansion& s, Map&& action, int shift) {
  SeriesExpansion out{s.kind, s.family, {}, s.truncation};
  for (const auto& [idx, c] : s.coeffs) {
    const OperatorAction a = action(idx, s.family);
    if (!a.target) continue;
    out.coeffs[*a.target] += c * a.factor;
  }
  auto shifted = [shift](int k) {
    const int m = k + shift;
    if (m == -1) return shift < 0 ? -2 : 0;
    return m;
  };
  out.truncation = {s.truncation.k_min >= 0 ? std::max(0, shifted(s.truncation.k_min)) : shifted(s.truncation.k_min),
                    shifted(s.truncation.k_max)};
  if (out.truncation.k_max < out.truncation.k_min) out.truncation.k_max = out.truncation.k_min;
  return out;
}

Family family_from_string(const std::string& s) {
  if (s == "phi") return Family::OrthonormalPhi;
  if (s == "appell") return Family::AppellA;
  throw ParseError("unknown family '" + s + "'", 0);
}

SeriesKind kind_from_string(const std::string& s) {
  if (s == "fourier") return SeriesKind::Fourier;
  if (s == "taylor") return SeriesKind::Taylor;
  if (s == "laurent") return SeriesKind::Laurent;
  throw ParseError("unknown series kind '" + s + "'", 0);
}

}  // namespace

SeriesExpansion fourier_expand(const PointFunction& f, int n_max, const QuadratureRule& rule) {
  require_degree(n_max);
  if (rule.domain().kind != DomainKind::Ball || rule.domain().r_out != 1.0) {
    throw DomainError("Fourier coefficients need a unit-ball rule");
  }
  const auto indices = indices_in_range(0, n_max);
  const std::vector<Quaternion> fv = values_at_nodes(f, rule);
  const auto& nodes = rule.nodes();
  std::vector<Quaternion> coeff(indices.size());
  parallel_for(indices.size(), [&](std::size_t i) {
    const BasisIndex idx = indices[i];
    std::vector<Quaternion> terms(nodes.size());
    for (std::size_t q = 0; q < nodes.size(); ++q) {
      terms[q] = nodes[q].weight * (conj(phi_inner(idx.k, idx.l, nodes[q].x)) * fv[q]);
    }
    coeff[i] = pairwise_sum(terms);
  });
  SeriesExpansion s{SeriesKind::Fourier, Family::OrthonormalPhi, {}, {0, n_max}};
  for (std::size_t i = 0; i < indices.size(); ++i) s.coeffs.emplace(indices[i], coeff[i]);
  return s;
}

Quaternion evaluate(const SeriesExpansion& series, const Point3& x) {
  std::vector<std::pair<BasisIndex, Quaternion>> terms(series.coeffs.begin(), series.coeffs.end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    return std::abs(a.first.k) < std::abs(b.first.k);
  });
  if (series.has_outer_terms() && norm2(x) == 0.0) throw PoleError("series with outer terms evaluated at the origin");
  Quaternion sum;
  for (const auto& [idx, c] : terms) sum += basis_value(series.family, idx, x) * c;
  return sum;
}

SeriesExpansion derive_series(const SeriesExpansion& series) {
  series.validate();
  return apply_termwise(series, [](const BasisIndex& i, Family f) { return basis_derivative(i, f); }, -1);
}

SeriesExpansion primitive_series(const SeriesExpansion& series) {
  series.validate();
  return apply_termwise(series, [](const BasisIndex& i, Family f) { return basis_primitive(i, f); }, +1);
}

SeriesExpansion laurent_expand(const PointFunction& f, double rho, int k_min, int k_max, LaurentVariant variant,
                               const QuadratureOrders* orders) {
  if (!(rho > 0.0) || !std::isfinite(rho)) throw DomainError("sphere radius must be positive");
  if (k_min > k_max) throw IndexError("empty Laurent index range");
  const auto indices = indices_in_range(k_min, k_max);
  int n_max = 0;
  for (const auto& idx : indices) n_max = std::max(n_max, idx.degree());
  const QuadratureRule rule =
      QuadratureRule::build(Domain::sphere(rho), orders ? *orders : QuadratureOrders::for_degree(n_max));
  const std::vector<Quaternion> fv = values_at_nodes(f, rule);
  const auto& nodes = rule.nodes();
  std::vector<Quaternion> coeff(indices.size());
  parallel_for(indices.size(), [&](std::size_t i) {
    const BasisIndex idx = indices[i];
    const BasisIndex dual{-(idx.k + 2), idx.l};
    std::vector<Quaternion> terms(nodes.size());
    for (std::size_t q = 0; q < nodes.size(); ++q) {
      const Point3& y = nodes[q].x;
      const Quaternion normal = y.to_quaternion() / norm(y);
      terms[q] = nodes[q].weight * (conj(basis_value(Family::AppellA, dual, conj(y))) * normal * fv[q]);
    }
    const double scale = std::abs(idx.k + 1) / (std::ldexp(1.0, 2 * (idx.l + 1)) * kPi);
    coeff[i] = scale * pairwise_sum(terms);
    if (variant == LaurentVariant::Phi) coeff[i] = family_convert(idx, Family::AppellA, Family::OrthonormalPhi) * coeff[i];
  });
  SeriesExpansion s{SeriesKind::Laurent, variant == LaurentVariant::Phi ? Family::OrthonormalPhi : Family::AppellA,
                    {}, {k_min, k_max}};
  for (std::size_t i = 0; i < indices.size(); ++i) s.coeffs.emplace(indices[i], coeff[i]);
  return s;
}

SeriesExpansion taylor_coeffs(const PointFunction& f, int n_max, double rho, const QuadratureOrders* orders) {
  require_degree(n_max);
  SeriesExpansion s = laurent_expand(f, rho, 0, n_max, LaurentVariant::Appell, orders);
  s.kind = SeriesKind::Taylor;
  return s;
}

SeriesExpansion convert_family(const SeriesExpansion& series, Family to) {
  SeriesExpansion out = series;
  out.family = to;
  for (auto& [idx, c] : out.coeffs) c = family_convert(idx, series.family, to) * c;
  return out;
}

SeriesExpansion fourier_from_taylor(const SeriesExpansion& taylor) {
  if (taylor.kind != SeriesKind::Taylor || taylor.family != Family::AppellA) {
    throw UnsupportedError("expected a Taylor series in the Appell family");
  }
  SeriesExpansion out = convert_family(taylor, Family::OrthonormalPhi);
  out.kind = SeriesKind::Fourier;
  return out;
}

SeriesExpansion taylor_from_fourier(const SeriesExpansion& fourier) {
  if (fourier.kind != SeriesKind::Fourier || fourier.family != Family::OrthonormalPhi) {
    throw UnsupportedError("expected a Fourier series in the orthonormal family");
  }
  SeriesExpansion out = convert_family(fourier, Family::AppellA);
  out.kind = SeriesKind::Taylor;
  return out;
}

Quaternion cauchy_integral(const PointFunction& f, const Point3& x, const QuadratureRule& rule) {
  if (rule.domain().kind != DomainKind::Sphere) throw DomainError("Cauchy integral needs a sphere rule");
  const double rho = rule.domain().r_in;
  if (std::fabs(norm(x) - rho) <= 1e-12 * rho) throw DomainError("point lies on the integration sphere");
  const std::vector<Quaternion> fv = values_at_nodes(f, rule);
  const auto& nodes = rule.nodes();
  std::vector<Quaternion> terms(nodes.size());
  for (std::size_t q = 0; q < nodes.size(); ++q) {
    const Point3& y = nodes[q].x;
    terms[q] = nodes[q].weight * (cauchy_kernel(y - x) * (y.to_quaternion() / norm(y)) * fv[q]);
  }
  return pairwise_sum(terms);
}

ParsevalResult parseval(const SeriesExpansion& series, const PointFunction& f, const QuadratureRule& rule) {
  if (series.kind != SeriesKind::Fourier || series.family != Family::OrthonormalPhi) {
    throw UnsupportedError("Parseval needs an orthonormal Fourier series");
  }
  ParsevalResult r;
  for (const auto& [idx, c] : series.coeffs) r.lhs += norm2(c);
  r.rhs = inner_product(f, f, rule).a0;
  return r;
}

double l2_residual(const SeriesExpansion& series, const PointFunction& f, const QuadratureRule& rule) {
  const PointFunction diff = [&](const Point3& x) { return f(x) - evaluate(series, x); };
  return std::sqrt(std::max(0.0, inner_product(diff, diff, rule).a0));
}

SeriesExpansion prune(const SeriesExpansion& series, double threshold) {
  SeriesExpansion out = series;
  std::erase_if(out.coeffs, [threshold](const auto& kv) { return max_abs(kv.second) <= threshold; });
  return out;
}

SeriesExpansion truncate(const SeriesExpansion& series, int k_min, int k_max) {
  SeriesExpansion out = series;
  std::erase_if(out.coeffs, [&](const auto& kv) { return kv.first.k < k_min || kv.first.k > k_max; });
  out.truncation = {k_min, k_max};
  return out;
}

ZetaPolynomial to_zeta_polynomial(const SeriesExpansion& series) {
  if (series.family != Family::AppellA) throw UnsupportedError("monogenic constants need the Appell family");
  std::map<int, Quaternion> terms;
  for (const auto& [idx, c] : series.coeffs) {
    if (!idx.is_inner() || idx.l != idx.k) {
      throw UnsupportedError("index " + to_string(idx) + " is not a monogenic constant");
    }
    terms.emplace(idx.k, c);
  }
  return ZetaPolynomial(std::move(terms));
}

std::string to_json(const SeriesExpansion& series, int indent) {
  nlohmann::ordered_json doc;
  doc["kind"] = to_string(series.kind);
  doc["family"] = to_string(series.family);
  doc["truncation"] = {{"k_min", series.truncation.k_min}, {"k_max", series.truncation.k_max}};
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const auto& [idx, c] : series.coeffs) {
    nlohmann::ordered_json e;
    e["k"] = idx.k;
    e["l"] = idx.l;
    e["c"] = {c.a0, c.a1, c.a2, c.a3};
    entries.push_back(std::move(e));
  }
  doc["entries"] = std::move(entries);
  return doc.dump(indent);
}

SeriesExpansion series_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed series JSON: ") + e.what(), e.byte);
  }
  try {
    SeriesExpansion s;
    s.kind = kind_from_string(doc.at("kind").get<std::string>());
    s.family = family_from_string(doc.at("family").get<std::string>());
    int k_min = 0;
    int k_max = 0;
    bool first = true;
    for (const auto& e : doc.at("entries")) {
      const BasisIndex idx{e.at("k").get<int>(), e.at("l").get<int>()};
      require_valid(idx);
      const auto& c = e.at("c");
      if (!c.is_array() || c.size() != 4) throw ParseError("coefficient must have four components", 0);
      if (!s.coeffs.emplace(idx, Quaternion{c[0].get<double>(), c[1].get<double>(), c[2].get<double>(), c[3].get<double>()}).second) {
        throw ParseError("duplicate entry " + to_string(idx), 0);
      }
      k_min = first ? idx.k : std::min(k_min, idx.k);
      k_max = first ? idx.k : std::max(k_max, idx.k);
      first = false;
    }
    if (doc.contains("truncation")) {
      s.truncation = {doc["truncation"].at("k_min").get<int>(), doc["truncation"].at("k_max").get<int>()};
    } else {
      s.truncation = {k_min, k_max};
    }
    s.validate();
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid series JSON: ") + e.what(), 0);
  }
}

}  // namespace monogenica
