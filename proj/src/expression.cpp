#include "monogenica/expression.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <vector>

#include "monogenica/basis.hpp"
#include "monogenica/errors.hpp"

namespace monogenica {

struct Expression::Node {
  enum class Op { Constant, X0, X1, X2, X, XBar, Zeta, Basis, Kernel, Neg, Add, Sub, Mul, Pow };

  Op op = Op::Constant;
  Quaternion value;
  Family family = Family::AppellA;
  BasisIndex index;
  Point3 center;
  int exponent = 0;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

namespace {

using Node = Expression::Node;
using NodePtr = std::shared_ptr<const Node>;
using Op = Node::Op;

NodePtr make(Op op) {
  auto n = std::make_shared<Node>();
  n->op = op;
  return n;
}

NodePtr binary(Op op, NodePtr a, NodePtr b) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->lhs = std::move(a);
  n->rhs = std::move(b);
  return n;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  NodePtr parse() {
    skip();
    if (pos_ == s_.size()) throw ParseError("empty expression", pos_);
    NodePtr e = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return e;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ >= s_.size()) throw ParseError(std::string("expected '") + c + "' but input ended", pos_);
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
  }

  NodePtr expr() {
    NodePtr left = term();
    for (;;) {
      if (accept('+')) {
        left = binary(Op::Add, left, term());
      } else if (accept('-')) {
        left = binary(Op::Sub, left, term());
      } else {
        return left;
      }
    }
  }

  NodePtr term() {
    NodePtr left = unary();
    while (accept('*')) left = binary(Op::Mul, left, unary());
    return left;
  }

  NodePtr unary() {
    if (accept('-')) return binary(Op::Neg, unary(), nullptr);
    if (accept('+')) return unary();
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    if (accept('^')) {
      skip();
      const std::size_t at = pos_;
      const int e = integer();
      if (e < 0) throw ParseError("negative exponent", at);
      auto n = std::make_shared<Node>();
      n->op = Op::Pow;
      n->lhs = base;
      n->exponent = e;
      return n;
    }
    return base;
  }

  double number() {
    skip();
    const std::size_t start = pos_;
    const char* first = s_.data() + pos_;
    const char* last = s_.data() + s_.size();
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr == first) throw ParseError("expected a number", start);
    pos_ += static_cast<std::size_t>(ptr - first);
    return v;
  }

  int integer() {
    skip();
    const std::size_t start = pos_;
    bool negative = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      negative = s_[pos_] == '-';
      ++pos_;
    }
    const char* first = s_.data() + pos_;
    int v = 0;
    const auto [ptr, ec] = std::from_chars(first, s_.data() + s_.size(), v);
    if (ec != std::errc() || ptr == first) throw ParseError("expected an integer", start);
    pos_ += static_cast<std::size_t>(ptr - first);
    return negative ? -v : v;
  }

  double signed_number() {
    skip();
    if (accept('-')) return -number();
    accept('+');
    return number();
  }

  NodePtr primary() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr e = expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      auto n = std::make_shared<Node>();
      n->op = Op::Constant;
      n->value = number();
      return n;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const std::string name = s_.substr(start, pos_ - start);
      return named(name, start);
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  NodePtr named(const std::string& name, std::size_t start) {
    if (name == "x0") return make(Op::X0);
    if (name == "x1") return make(Op::X1);
    if (name == "x2") return make(Op::X2);
    if (name == "x") return make(Op::X);
    if (name == "xbar") return make(Op::XBar);
    if (name == "zeta") return make(Op::Zeta);
    if (name.size() == 2 && name[0] == 'e' && name[1] >= '0' && name[1] <= '3') {
      auto n = std::make_shared<Node>();
      n->op = Op::Constant;
      const Quaternion units[] = {kE0, kE1, kE2, kE3};
      n->value = units[name[1] - '0'];
      return n;
    }
    if (name == "A" || name == "phi") {
      expect('(');
      const int k = integer();
      expect(',');
      const int l = integer();
      expect(')');
      const BasisIndex idx{k, l};
      if (!is_valid(idx)) throw ParseError("invalid basis index " + to_string(idx), start);
      auto n = std::make_shared<Node>();
      n->op = Op::Basis;
      n->family = name == "A" ? Family::AppellA : Family::OrthonormalPhi;
      n->index = idx;
      return n;
    }
    if (name == "kernel") {
      expect('(');
      const double a = signed_number();
      expect(',');
      const double b = signed_number();
      expect(',');
      const double c = signed_number();
      expect(')');
      auto n = std::make_shared<Node>();
      n->op = Op::Kernel;
      n->center = {a, b, c};
      return n;
    }
    throw ParseError("unknown name '" + name + "'", start);
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

Quaternion eval(const Node& n, const Point3& x) {
  switch (n.op) {
    case Op::Constant:
      return n.value;
    case Op::X0:
      return x.x0;
    case Op::X1:
      return x.x1;
    case Op::X2:
      return x.x2;
    case Op::X:
      return x.to_quaternion();
    case Op::XBar:
      return conj(x.to_quaternion());
    case Op::Zeta:
      return zeta(x);
    case Op::Basis:
      return basis_value(n.family, n.index, x);
    case Op::Kernel:
      return cauchy_kernel(x - n.center);
    case Op::Neg:
      return -eval(*n.lhs, x);
    case Op::Add:
      return eval(*n.lhs, x) + eval(*n.rhs, x);
    case Op::Sub:
      return eval(*n.lhs, x) - eval(*n.rhs, x);
    case Op::Mul:
      return eval(*n.lhs, x) * eval(*n.rhs, x);
    case Op::Pow: {
      const Quaternion b = eval(*n.lhs, x);
      Quaternion r = kE0;
      for (int i = 0; i < n.exponent; ++i) r = r * b;
      return r;
    }
  }
  return {};
}

std::optional<int> degree(const Node& n) {
  switch (n.op) {
    case Op::Constant:
      return 0;
    case Op::X0:
    case Op::X1:
    case Op::X2:
    case Op::X:
    case Op::XBar:
    case Op::Zeta:
      return 1;
    case Op::Basis:
      if (!n.index.is_inner()) return std::nullopt;
      return n.index.k;
    case Op::Kernel:
      return std::nullopt;
    case Op::Neg:
      return degree(*n.lhs);
    case Op::Add:
    case Op::Sub:
    case Op::Mul: {
      const auto a = degree(*n.lhs);
      const auto b = degree(*n.rhs);
      if (!a || !b) return std::nullopt;
      return n.op == Op::Mul ? *a + *b : std::max(*a, *b);
    }
    case Op::Pow: {
      const auto a = degree(*n.lhs);
      if (!a) return std::nullopt;
      return *a * n.exponent;
    }
  }
  return std::nullopt;
}

}  // namespace

Expression Expression::parse(const std::string& text) { return Expression(text, Parser(text).parse()); }

Quaternion Expression::operator()(const Point3& x) const { return eval(*root_, x); }

std::optional<int> Expression::polynomial_degree() const { return degree(*root_); }

bool Expression::is_entire() const { return polynomial_degree().has_value(); }

}  // namespace monogenica
