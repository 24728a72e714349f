#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "monogenica/monogenica.h"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct CliFailure {
  int code;
  std::string message;
};

void check(mg_status status) {
  if (status == MG_OK) return;
  const int code = status == MG_ERR_INTERNAL ? kExitInternal : kExitUsage;
  throw CliFailure{code, std::string(mg_status_name(status)) + ": " + mg_last_error()};
}

struct RuleDeleter {
  void operator()(mg_rule* p) const { mg_rule_free(p); }
};
struct FunctionDeleter {
  void operator()(mg_function* p) const { mg_function_free(p); }
};
struct SeriesDeleter {
  void operator()(mg_series* p) const { mg_series_free(p); }
};
using Rule = std::unique_ptr<mg_rule, RuleDeleter>;
using Function = std::unique_ptr<mg_function, FunctionDeleter>;
using Series = std::unique_ptr<mg_series, SeriesDeleter>;

Rule make_rule(mg_domain_kind kind, double r_in, double r_out, mg_orders orders) {
  mg_rule* r = nullptr;
  check(mg_rule_build(kind, r_in, r_out, orders, &r));
  return Rule(r);
}

Function parse_function(const std::string& spec) {
  mg_function* f = nullptr;
  check(mg_function_parse(spec.c_str(), &f));
  return Function(f);
}

template <class Op>
Series series_from(Op&& op) {
  mg_series* s = nullptr;
  check(op(&s));
  return Series(s);
}

std::string take_string(char* text) {
  std::string out(text);
  mg_string_free(text);
  return out;
}

double qnorm(const double q[4]) { return std::sqrt(q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3]); }

std::string format_double(double v) {
  json j = v;
  return j.dump();
}

json quaternion_json(const double q[4]) { return json::array({q[0], q[1], q[2], q[3]}); }

struct IndexList {
  std::vector<int> ks;
  std::vector<int> ls;

  std::size_t size() const { return ks.size(); }
  std::string label(std::size_t i) const { return std::to_string(ks[i]) + ":" + std::to_string(ls[i]); }
};

IndexList indices(int k_min, int k_max) {
  std::size_t count = 0;
  check(mg_index_count(k_min, k_max, &count));
  IndexList out{std::vector<int>(count), std::vector<int>(count)};
  if (count > 0) check(mg_indices(k_min, k_max, out.ks.data(), out.ls.data(), count));
  return out;
}

struct SeriesEntry {
  int k;
  int l;
  double c[4];
};

std::vector<SeriesEntry> entries(const mg_series* s) {
  std::size_t size = 0;
  check(mg_series_info(s, nullptr, nullptr, nullptr, nullptr, &size));
  std::vector<SeriesEntry> out(size);
  for (std::size_t i = 0; i < size; ++i) check(mg_series_entry(s, i, &out[i].k, &out[i].l, out[i].c));
  return out;
}

// Largest entrywise gap between two coefficient sets, missing entries count as zero.
double coefficient_gap(const mg_series* a, const mg_series* b, bool inner_only = false) {
  const auto ea = entries(a);
  const auto eb = entries(b);
  auto lookup = [](const std::vector<SeriesEntry>& es, int k, int l) -> const SeriesEntry* {
    for (const auto& e : es) {
      if (e.k == k && e.l == l) return &e;
    }
    return nullptr;
  };
  double worst = 0.0;
  auto compare = [&](const std::vector<SeriesEntry>& from, const std::vector<SeriesEntry>& other) {
    for (const auto& e : from) {
      if (inner_only && e.k < 0) continue;
      const SeriesEntry* o = lookup(other, e.k, e.l);
      for (int i = 0; i < 4; ++i) worst = std::max(worst, std::fabs(e.c[i] - (o ? o->c[i] : 0.0)));
    }
  };
  compare(ea, eb);
  compare(eb, ea);
  return worst;
}

class Output {
 public:
  explicit Output(const std::string& path) : path_(path) {}

  void write(const std::string& text) const {
    if (path_.empty()) {
      std::cout << text;
      std::cout.flush();
      return;
    }
    std::ofstream file(path_, std::ios::binary | std::ios::trunc);
    file << text;
    file.close();
    if (!file) throw CliFailure{kExitInternal, "cannot write " + path_};
  }

  // Summaries go to stdout when the payload went to a file, otherwise to stderr.
  std::ostream& summary() const { return path_.empty() ? std::cerr : std::cout; }

 private:
  std::string path_;
};

mg_family parse_family(const std::string& name) { return name == "phi" ? MG_FAMILY_PHI : MG_FAMILY_APPELL; }

std::optional<mg_orders> parse_orders(const std::vector<int>& v) {
  if (v.empty()) return std::nullopt;
  return mg_orders{v[0], v[1], v[2]};
}

// Exact for polynomial inputs, generous for kernels and outer terms.
mg_orders default_orders(const mg_function* f, int n_max) {
  int degree = -1;
  check(mg_function_degree(f, &degree));
  return mg_default_orders(degree >= 0 ? std::max(n_max, degree) : std::max(n_max, 60));
}

// eval ---------------------------------------------------------------------

struct EvalOptions {
  std::string family = "phi";
  std::optional<int> k;
  int l = 0;
  std::string spec;
  std::vector<double> point;
  bool derivative = false;
  std::string output;
};

int run_eval(const EvalOptions& o) {
  Function f;
  if (!o.spec.empty()) {
    f = parse_function(o.spec);
  } else {
    if (!o.k) throw CliFailure{kExitUsage, "eval needs --spec or --k"};
    mg_function* raw = nullptr;
    check(mg_function_basis(parse_family(o.family), *o.k, o.l, &raw));
    f.reset(raw);
  }
  double value[4];
  check(mg_function_eval(f.get(), o.point.data(), value));
  json doc;
  doc["point"] = o.point;
  doc["value"] = quaternion_json(value);
  if (o.derivative) {
    double d[4];
    check(mg_fd_hyper_derivative(f.get(), o.point.data(), 1e-5, d));
    doc["fd_derivative"] = quaternion_json(d);
  }
  Output(o.output).write(doc.dump(2) + "\n");
  return 0;
}

// gram ---------------------------------------------------------------------

struct GramOptions {
  std::string domain = "ball";
  std::string family = "phi";
  int n_max = 4;
  double r_in = 1.0;
  double r_out = 2.0;
  std::vector<int> orders;
  std::string format = "json";
  int component = 0;
  std::string output;
};

int run_gram(const GramOptions& o) {
  IndexList idx;
  mg_domain_kind kind = MG_DOMAIN_BALL;
  double r_in = 0.0;
  double r_out = 1.0;
  if (o.domain == "ball") {
    idx = indices(0, o.n_max);
  } else if (o.domain == "exterior") {
    kind = MG_DOMAIN_EXTERIOR;
    r_in = 1.0;
    idx = indices(-(o.n_max + 2), -2);
  } else if (o.domain == "sphere") {
    kind = MG_DOMAIN_SPHERE;
    r_in = 1.0;
    idx = indices(-o.n_max, o.n_max);
  } else {
    kind = MG_DOMAIN_SHELL;
    r_in = o.r_in;
    r_out = o.r_out;
    idx = indices(-o.n_max, o.n_max);
  }
  const Rule rule = make_rule(kind, r_in, r_out, parse_orders(o.orders).value_or(mg_default_orders(o.n_max)));
  const std::size_t n = idx.size();
  std::vector<double> g(4 * n * n);
  check(mg_gram(rule.get(), parse_family(o.family), idx.ks.data(), idx.ls.data(), n, g.data()));
  auto entry = [&](std::size_t i, std::size_t j) { return g.data() + 4 * (i * n + j); };

  double off = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) off = std::max(off, qnorm(entry(i, j)));
    }
  }

  std::string text;
  if (o.format == "csv") {
    std::ostringstream out;
    for (std::size_t j = 0; j < n; ++j) out << (j ? "," : "") << idx.label(j);
    out << "\n";
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) out << (j ? "," : "") << format_double(entry(i, j)[o.component]);
      out << "\n";
    }
    text = out.str();
  } else {
    json doc;
    doc["domain"] = o.domain;
    doc["family"] = o.family;
    doc["n_max"] = o.n_max;
    json labels = json::array();
    for (std::size_t i = 0; i < n; ++i) labels.push_back(idx.label(i));
    doc["indices"] = labels;
    json rows = json::array();
    for (std::size_t i = 0; i < n; ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < n; ++j) row.push_back(quaternion_json(entry(i, j)));
      rows.push_back(row);
    }
    doc["matrix"] = rows;
    doc["max_off_diagonal"] = off;
    text = doc.dump(2) + "\n";
  }
  const Output out(o.output);
  out.write(text);
  out.summary() << "max off-diagonal: " << format_double(off) << "\n";
  return 0;
}

// expand / laurent ---------------------------------------------------------

struct ExpandOptions {
  std::string kind = "fourier";
  std::string spec;
  int n_max = 6;
  double rho = 1.0;
  std::optional<int> k_min;
  std::optional<int> k_max;
  std::string family = "appell";
  double threshold = 1e-12;
  std::vector<int> orders;
  std::string output;
  std::string table;
  std::vector<double> rho_list;
  std::optional<double> taylor_rho;
};

struct Expansion {
  Series series;
  int k_min;
  int k_max;
};

Series convert_and_prune(Series s, const ExpandOptions& o) {
  Series converted = series_from([&](mg_series** out) { return mg_series_convert(s.get(), parse_family(o.family), out); });
  return series_from([&](mg_series** out) { return mg_series_prune(converted.get(), o.threshold, out); });
}

Expansion compute_laurent(const mg_function* f, double rho, const ExpandOptions& o) {
  const int k_min = o.k_min.value_or(-o.n_max);
  const int k_max = o.k_max.value_or(o.n_max);
  const int degree = std::max(std::abs(k_max), k_min < 0 ? -(k_min + 2) : 0);
  const mg_orders orders = parse_orders(o.orders).value_or(default_orders(f, degree));
  Series s = series_from(
      [&](mg_series** out) { return mg_laurent_expand(f, rho, k_min, k_max, MG_LAURENT_APPELL, &orders, out); });
  return {convert_and_prune(std::move(s), o), k_min, k_max};
}

Expansion compute_expansion(const mg_function* f, const ExpandOptions& o) {
  if (o.kind == "laurent") return compute_laurent(f, o.rho, o);
  const mg_orders orders = parse_orders(o.orders).value_or(default_orders(f, o.n_max));
  Series s;
  if (o.kind == "fourier") {
    const Rule ball = make_rule(MG_DOMAIN_BALL, 0.0, 1.0, orders);
    s = series_from([&](mg_series** out) { return mg_fourier_expand(f, o.n_max, ball.get(), out); });
  } else {
    s = series_from([&](mg_series** out) { return mg_taylor_coeffs(f, o.n_max, o.rho, &orders, out); });
  }
  return {convert_and_prune(std::move(s), o), 0, o.n_max};
}

// L2 residual of the partial sums of degree <= n over the region the series describes.
std::string truncation_table(const mg_function* f, const Expansion& e, const ExpandOptions& o) {
  const int top = std::max(std::abs(e.k_max), e.k_min < 0 ? -(e.k_min + 2) : 0);
  int degree = -1;
  check(mg_function_degree(f, &degree));
  const mg_orders orders =
      parse_orders(o.orders).value_or(mg_default_orders(degree >= 0 ? std::max(top, degree) : std::max(top, 24)));
  Rule rule;
  if (o.kind == "fourier") {
    rule = make_rule(MG_DOMAIN_BALL, 0.0, 1.0, orders);
  } else if (o.kind == "taylor") {
    rule = make_rule(MG_DOMAIN_BALL, 0.0, o.rho, orders);
  } else {
    rule = make_rule(MG_DOMAIN_SPHERE, o.rho, o.rho, orders);
  }
  std::ostringstream out;
  out << "n,l2_residual\n";
  for (int n = 0; n <= top; ++n) {
    const Series partial = series_from([&](mg_series** s) {
      return mg_series_truncate(e.series.get(), std::max(e.k_min, -(n + 2)), std::min(e.k_max, n), s);
    });
    double r = 0.0;
    check(mg_series_l2_residual(partial.get(), f, rule.get(), &r));
    out << n << "," << format_double(r) << "\n";
  }
  return out.str();
}

void write_table(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cerr << text;
  } else {
    Output(path).write(text);
  }
}

int run_expand(const ExpandOptions& o) {
  const Function f = parse_function(o.spec);
  const Expansion e = compute_expansion(f.get(), o);
  char* text = nullptr;
  check(mg_series_to_json(e.series.get(), &text));
  Output(o.output).write(take_string(text) + "\n");
  write_table(truncation_table(f.get(), e, o), o.table);
  return 0;
}

int run_laurent(ExpandOptions o) {
  o.kind = "laurent";
  const Function f = parse_function(o.spec);
  const Expansion e = compute_expansion(f.get(), o);
  char* text = nullptr;
  check(mg_series_to_json(e.series.get(), &text));
  Output(o.output).write(take_string(text) + "\n");

  std::ostringstream table;
  table << "check,value\n";
  const std::vector<double> rhos = o.rho_list.empty() ? std::vector<double>{0.8 * o.rho, 1.25 * o.rho} : o.rho_list;
  for (double rho : rhos) {
    const Expansion other = compute_laurent(f.get(), rho, o);
    table << "rho_gap(" << format_double(rho) << ")," << format_double(coefficient_gap(e.series.get(), other.series.get()))
          << "\n";
  }
  const double taylor_rho = o.taylor_rho.value_or(0.6 * o.rho);
  ExpandOptions t = o;
  t.kind = "taylor";
  t.rho = taylor_rho;
  t.n_max = std::max(e.k_max, 0);
  const Expansion taylor = compute_expansion(f.get(), t);
  table << "secondary_vs_taylor(" << format_double(taylor_rho) << "),"
        << format_double(coefficient_gap(e.series.get(), taylor.series.get(), true)) << "\n";
  write_table(table.str(), o.table);
  return 0;
}

// table --------------------------------------------------------------------

struct TableOptions {
  std::string what = "derivative";
  std::string family = "phi";
  int n_max = 6;
  std::optional<int> k_min;
  std::optional<int> k_max;
  std::string format = "csv";
  std::string output;
};

std::string render(const std::vector<std::string>& header, const std::vector<std::vector<json>>& rows,
                   const std::string& format) {
  if (format == "json") {
    json doc = json::array();
    for (const auto& row : rows) {
      json obj;
      for (std::size_t i = 0; i < header.size(); ++i) obj[header[i]] = row[i];
      doc.push_back(obj);
    }
    return doc.dump(2) + "\n";
  }
  std::ostringstream out;
  for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
  out << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "," : "") << (row[i].is_string() ? row[i].get<std::string>() : row[i].is_null() ? "" : row[i].dump());
    }
    out << "\n";
  }
  return out.str();
}

int run_table(const TableOptions& o) {
  std::vector<std::string> header;
  std::vector<std::vector<json>> rows;
  const int k_min = o.k_min.value_or(-(o.n_max + 2));
  const int k_max = o.k_max.value_or(o.n_max);
  if (o.what == "derivative" || o.what == "primitive") {
    header = {"k", "l", "target_k", "target_l", "factor"};
    const IndexList idx = indices(k_min, k_max);
    for (std::size_t i = 0; i < idx.size(); ++i) {
      mg_action a{};
      const mg_status st = o.what == "derivative"
                               ? mg_derivative_action(parse_family(o.family), idx.ks[i], idx.ls[i], &a)
                               : mg_primitive_action(parse_family(o.family), idx.ks[i], idx.ls[i], &a);
      if (st == MG_ERR_NO_PRIMITIVE) {
        rows.push_back({idx.ks[i], idx.ls[i], nullptr, nullptr, "none"});
        continue;
      }
      check(st);
      if (a.has_target) {
        rows.push_back({idx.ks[i], idx.ls[i], a.target_k, a.target_l, a.factor});
      } else {
        rows.push_back({idx.ks[i], idx.ls[i], nullptr, nullptr, 0.0});
      }
    }
  } else if (o.what == "lattice") {
    header = {"k", "l", "region", "degree", "kernel_depth"};
    const IndexList idx = indices(k_min, k_max);
    for (std::size_t i = 0; i < idx.size(); ++i) {
      const int k = idx.ks[i];
      json depth = nullptr;
      if (k >= 0) {
        int d = 0;
        check(mg_kernel_depth(k, idx.ls[i], &d));
        depth = d;
      }
      rows.push_back({k, idx.ls[i], k >= 0 ? "inner" : "outer", k >= 0 ? k : -(k + 2), depth});
    }
  } else if (o.what == "norms") {
    header = {"n", "m", "norm"};
    for (int n = 0; n <= o.n_max; ++n) {
      for (int m = 0; m <= n + 1; ++m) {
        double v = 0.0;
        check(mg_norm_formula(n, m, &v));
        rows.push_back({n, m, v});
      }
    }
  } else {
    header = {"functional", "element", "value"};
    const IndexList idx = indices(0, o.n_max);
    for (std::size_t i = 0; i < idx.size(); ++i) {
      for (std::size_t j = 0; j < idx.size(); ++j) {
        double v = 0.0;
        check(mg_taylor_functional(idx.ks[i], idx.ls[i], idx.ks[j], idx.ls[j], &v));
        rows.push_back({idx.label(i), idx.label(j), v});
      }
    }
  }
  Output(o.output).write(render(header, rows, o.format));
  return 0;
}

// verify -------------------------------------------------------------------

struct VerifyOptions {
  int n_max = 6;
  std::uint64_t seed = 1;
  bool deep = false;
  std::string output;
};

int run_verify(const VerifyOptions& o) {
  char* text = nullptr;
  int passed = 0;
  check(mg_verify_run(o.n_max, o.seed, o.deep ? 1 : 0, &text, &passed));
  const std::string report = take_string(text);
  const Output out(o.output);
  out.write(report + "\n");
  const json doc = json::parse(report);
  int ok = 0;
  for (const auto& c : doc["checks"]) ok += c["passed"].get<bool>() ? 1 : 0;
  out.summary() << ok << "/" << doc["checks"].size() << " checks passed\n";
  return passed ? 0 : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quaternionic monogenic bases, series expansions and identity checks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(mg_version()));

  const auto family_check = CLI::IsMember({"phi", "appell"});
  const auto n_max_check = CLI::Range(0, 64);
  const auto orders_check = CLI::PositiveNumber;

  EvalOptions eval;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a basis element or expression at a point");
  eval_cmd->add_option("--family", eval.family, "Basis family")->check(family_check)->capture_default_str();
  eval_cmd->add_option("--k", eval.k, "Signed degree");
  eval_cmd->add_option("--l", eval.l, "Column")->capture_default_str();
  eval_cmd->add_option("--spec", eval.spec, "Expression instead of a basis element")->excludes("--k");
  eval_cmd->add_option("--point", eval.point, "Point x0 x1 x2")->expected(3)->required();
  eval_cmd->add_flag("--derivative", eval.derivative, "Also report the finite-difference hypercomplex derivative");
  eval_cmd->add_option("-o,--output", eval.output, "Output file (default stdout)");

  GramOptions gram;
  auto* gram_cmd = app.add_subcommand("gram", "Gram matrix of the basis over a domain");
  gram_cmd->add_option("--domain", gram.domain, "Integration domain")
      ->check(CLI::IsMember({"ball", "exterior", "sphere", "shell"}))
      ->capture_default_str();
  gram_cmd->add_option("--family", gram.family, "Basis family")->check(family_check)->capture_default_str();
  gram_cmd->add_option("--n-max", gram.n_max, "Largest degree")->check(n_max_check)->capture_default_str();
  gram_cmd->add_option("--r-in", gram.r_in, "Shell inner radius")->check(CLI::PositiveNumber)->capture_default_str();
  gram_cmd->add_option("--r-out", gram.r_out, "Shell outer radius")->check(CLI::PositiveNumber)->capture_default_str();
  gram_cmd->add_option("--orders", gram.orders, "Quadrature orders n_r n_theta n_phi")->expected(3)->check(orders_check);
  gram_cmd->add_option("--format", gram.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  gram_cmd->add_option("--component", gram.component, "Quaternion component written to CSV")
      ->check(CLI::Range(0, 3))
      ->capture_default_str();
  gram_cmd->add_option("-o,--output", gram.output, "Output file (default stdout)");

  ExpandOptions expand;
  auto add_expansion_options = [&](CLI::App* cmd, ExpandOptions& o) {
    cmd->add_option("--spec", o.spec, "Function expression")->required();
    cmd->add_option("--n-max", o.n_max, "Largest degree")->check(n_max_check)->capture_default_str();
    cmd->add_option("--rho", o.rho, "Sphere radius")->check(CLI::PositiveNumber)->capture_default_str();
    cmd->add_option("--k-min", o.k_min, "Smallest signed degree (Laurent)")->check(CLI::Range(-66, 64));
    cmd->add_option("--k-max", o.k_max, "Largest signed degree (Laurent)")->check(CLI::Range(-66, 64));
    cmd->add_option("--family", o.family, "Family of the written coefficients")
        ->check(family_check)
        ->capture_default_str();
    cmd->add_option("--threshold", o.threshold, "Drop coefficients with max entry at or below this")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    cmd->add_option("--orders", o.orders, "Quadrature orders n_r n_theta n_phi")->expected(3)->check(orders_check);
    cmd->add_option("-o,--output", o.output, "Series JSON file (default stdout)");
    cmd->add_option("--table", o.table, "Diagnostics CSV file (default stderr)");
  };
  auto* expand_cmd = app.add_subcommand("expand", "Expand an expression into a Fourier, Taylor or Laurent series");
  expand_cmd->add_option("--kind", expand.kind, "Series kind")
      ->check(CLI::IsMember({"fourier", "taylor", "laurent"}))
      ->capture_default_str();
  add_expansion_options(expand_cmd, expand);

  ExpandOptions laurent;
  auto* laurent_cmd = app.add_subcommand("laurent", "Laurent expansion with radius and Taylor cross-checks");
  add_expansion_options(laurent_cmd, laurent);
  laurent_cmd->add_option("--rho-list", laurent.rho_list, "Radii compared against --rho")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  laurent_cmd->add_option("--taylor-rho", laurent.taylor_rho, "Radius of the Taylor comparison")
      ->check(CLI::PositiveNumber);

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run the invariant suite");
  verify_cmd->add_option("--n-max", verify.n_max, "Largest degree")->check(CLI::Range(1, 20))->capture_default_str();
  verify_cmd->add_option("--seed", verify.seed, "Random seed")->capture_default_str();
  verify_cmd->add_flag("--deep", verify.deep, "Triple-path agreement up to degree 12");
  verify_cmd->add_option("-o,--output", verify.output, "Report file (default stdout)");

  TableOptions table;
  auto* table_cmd = app.add_subcommand("table", "Operator factors, index lattice, norms and Taylor functionals");
  table_cmd->add_option("--what", table.what, "Table to emit")
      ->check(CLI::IsMember({"derivative", "primitive", "lattice", "norms", "functionals"}))
      ->capture_default_str();
  table_cmd->add_option("--family", table.family, "Basis family")->check(family_check)->capture_default_str();
  table_cmd->add_option("--n-max", table.n_max, "Largest degree")->check(n_max_check)->capture_default_str();
  table_cmd->add_option("--k-min", table.k_min, "Smallest signed degree")->check(CLI::Range(-66, 64));
  table_cmd->add_option("--k-max", table.k_max, "Largest signed degree")->check(CLI::Range(-66, 64));
  table_cmd->add_option("--format", table.format, "csv or json")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  table_cmd->add_option("-o,--output", table.output, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*eval_cmd) return run_eval(eval);
    if (*gram_cmd) return run_gram(gram);
    if (*expand_cmd) return run_expand(expand);
    if (*laurent_cmd) return run_laurent(laurent);
    if (*verify_cmd) return run_verify(verify);
    if (*table_cmd) return run_table(table);
  } catch (const CliFailure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
