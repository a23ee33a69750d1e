#include "orlicz_lab/func_dsl.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>

#include "orlicz_lab/errors.hpp"

namespace orlicz_lab {

namespace {

const std::vector<std::string> kFunctions = {"pow", "log", "log1p", "max", "min", "abs"};

std::size_t min_arity(const std::string& f) { return f == "pow" ? 2 : (f == "max" || f == "min") ? 2 : 1; }
std::size_t max_arity(const std::string& f) {
  return f == "pow" ? 2 : (f == "max" || f == "min") ? static_cast<std::size_t>(-1) : 1;
}

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  ExprPtr parse() {
    skip();
    if (pos_ == s_.size()) fail({"number", "r", "function", "("}, "empty profile");
    auto e = expr();
    skip();
    if (pos_ != s_.size()) fail({"+", "-", "*", "end of input"}, "unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(std::vector<std::string> expected, const std::string& msg) const {
    std::string text = "parse error at offset " + std::to_string(pos_) + ": " + msg + "; expected one of:";
    for (const auto& e : expected) text += " '" + e + "'";
    throw ParseError(pos_, std::move(expected), text);
  }

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

  static ExprPtr binary(Expr::Kind k, ExprPtr a, ExprPtr b) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->args = {std::move(a), std::move(b)};
    return e;
  }

  ExprPtr expr() {
    auto lhs = term();
    for (;;) {
      if (accept('+')) lhs = binary(Expr::Kind::add, lhs, term());
      else if (accept('-')) lhs = binary(Expr::Kind::sub, lhs, term());
      else return lhs;
    }
  }

  ExprPtr term() {
    auto lhs = factor();
    while (accept('*')) lhs = binary(Expr::Kind::mul, lhs, factor());
    return lhs;
  }

  ExprPtr number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      std::size_t k = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_, ++k;
      return k;
    };
    std::size_t mantissa = digits();
    if (pos_ < s_.size() && s_[pos_] == '.') {
      ++pos_;
      mantissa += digits();
    }
    if (mantissa == 0) {
      pos_ = start;
      fail({"number", "r", "function", "("}, "malformed number");
    }
    if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
      ++pos_;
      if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) ++pos_;
      if (digits() == 0) fail({"digit"}, "malformed exponent");
    }
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::number;
    const auto res = std::from_chars(s_.data() + start, s_.data() + pos_, e->value);
    if (res.ec != std::errc()) {
      pos_ = start;
      fail({"number"}, "number out of range");
    }
    return e;
  }

  ExprPtr factor() {
    skip();
    if (pos_ == s_.size()) fail({"number", "r", "function", "("}, "unexpected end of input");
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (c == '(') {
      ++pos_;
      auto e = expr();
      if (!accept(')')) fail({")", "+", "-", "*"}, "unbalanced parenthesis");
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const std::string name = s_.substr(start, pos_ - start);
      if (name == "r") {
        auto e = std::make_shared<Expr>();
        e->kind = Expr::Kind::variable;
        return e;
      }
      if (std::find(kFunctions.begin(), kFunctions.end(), name) == kFunctions.end()) {
        std::vector<std::string> expected = {"r"};
        expected.insert(expected.end(), kFunctions.begin(), kFunctions.end());
        throw UnknownFunction(start, expected, "unknown function '" + name + "' at offset " + std::to_string(start));
      }
      if (!accept('(')) fail({"("}, "expected '(' after function name");
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::call;
      e->function = name;
      e->args.push_back(expr());
      while (accept(',')) {
        if (e->args.size() >= max_arity(name)) {
          --pos_;
          fail({")"}, name + " takes " + std::to_string(max_arity(name)) + " argument(s)");
        }
        e->args.push_back(expr());
      }
      skip();
      if (e->args.size() < min_arity(name)) fail({","}, name + " needs at least " + std::to_string(min_arity(name)) + " arguments");
      if (!accept(')')) fail({")", ",", "+", "-", "*"}, "unterminated argument list");
      return e;
    }
    fail({"number", "r", "function", "("}, std::string("unexpected character '") + c + "'");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

std::string format_number(double v) {
  char buf[40];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

}  // namespace

double Expr::eval(double r) const {
  switch (kind) {
    case Kind::number: return value;
    case Kind::variable: return r;
    case Kind::add: return args[0]->eval(r) + args[1]->eval(r);
    case Kind::sub: return args[0]->eval(r) - args[1]->eval(r);
    case Kind::mul: {
      const double a = args[0]->eval(r);
      const double b = args[1]->eval(r);
      // 0 * inf from an overflowing factor at r = 0 is taken as 0.
      if (a == 0.0 || b == 0.0) return 0.0;
      return a * b;
    }
    case Kind::call: break;
  }
  if (function == "pow") {
    const double base = args[0]->eval(r);
    const double ex = args[1]->eval(r);
    if (base == 0.0 && ex > 0.0) return 0.0;
    return std::pow(base, ex);
  }
  if (function == "log") return std::log(args[0]->eval(r));
  if (function == "log1p") return std::log1p(args[0]->eval(r));
  if (function == "abs") return std::abs(args[0]->eval(r));
  double acc = args[0]->eval(r);
  for (std::size_t i = 1; i < args.size(); ++i) {
    const double v = args[i]->eval(r);
    acc = function == "max" ? std::max(acc, v) : std::min(acc, v);
  }
  return acc;
}

bool structurally_equal(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.args.size() != b.args.size()) return false;
  if (a.kind == Expr::Kind::number && a.value != b.value) return false;
  if (a.kind == Expr::Kind::call && a.function != b.function) return false;
  for (std::size_t i = 0; i < a.args.size(); ++i)
    if (!structurally_equal(*a.args[i], *b.args[i])) return false;
  return true;
}

std::string print(const Expr& e) {
  using K = Expr::Kind;
  auto is_sum = [](const Expr& x) { return x.kind == K::add || x.kind == K::sub; };
  switch (e.kind) {
    case K::number: return format_number(e.value);
    case K::variable: return "r";
    case K::add: return print(*e.args[0]) + " + " + (is_sum(*e.args[1]) ? "(" + print(*e.args[1]) + ")" : print(*e.args[1]));
    case K::sub: return print(*e.args[0]) + " - " + (is_sum(*e.args[1]) ? "(" + print(*e.args[1]) + ")" : print(*e.args[1]));
    case K::mul: {
      auto wrap = [&](const Expr& x) { return is_sum(x) ? "(" + print(x) + ")" : print(x); };
      const Expr& rhs = *e.args[1];
      std::string right = rhs.kind == K::mul ? "(" + print(rhs) + ")" : wrap(rhs);
      return wrap(*e.args[0]) + "*" + right;
    }
    case K::call: {
      std::string out = e.function + "(";
      for (std::size_t i = 0; i < e.args.size(); ++i) out += (i ? ", " : "") + print(*e.args[i]);
      return out + ")";
    }
  }
  return {};
}

std::vector<double> default_profile_grid() {
  std::vector<double> g;
  for (int i = 0; i <= 100; ++i) g.push_back(0.1 * i);
  return g;
}

ValidationReport validate_profile(const YoungProfile& p, const std::vector<double>& grid) {
  ValidationReport rep;
  std::vector<double> v(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) v[i] = p(grid[i]);
  auto tol = [](double x) { return 1e-9 * (1.0 + std::abs(x)); };

  const double v0 = p(0.0);
  rep.zero_at_origin = v0 == 0.0;
  if (!rep.zero_at_origin) rep.violations.push_back({"origin", 0.0, 0.0, 0.0, v0, 0.0});

  rep.positive = true;
  rep.monotone = true;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] > 0.0 && !(v[i] > 0.0)) {
      rep.positive = false;
      rep.violations.push_back({"positivity", grid[i], grid[i], grid[i], v[i], 0.0});
    }
    if (i > 0 && !(v[i] >= v[i - 1] - tol(v[i - 1]))) {
      rep.monotone = false;
      rep.violations.push_back({"monotonicity", grid[i - 1], grid[i], grid[i], v[i - 1], v[i]});
    }
  }

  rep.convex = true;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = i + 2; j < grid.size(); ++j) {
      const double mid = 0.5 * (grid[i] + grid[j]);
      const double lhs = p(mid);
      const double rhs = 0.5 * (v[i] + v[j]);
      if (!(lhs <= rhs + tol(lhs))) {
        rep.convex = false;
        rep.violations.push_back({"convexity", grid[i], mid, grid[j], lhs, rhs});
      }
    }
  }
  return rep;
}

YoungProfile parse_young(const std::string& src) {
  YoungProfile p;
  p.source = src;
  p.ast = Parser(src).parse();
  const auto rep = validate_profile(p, default_profile_grid());
  p.claims_convex = rep.convex;
  p.claims_young = rep.zero_at_origin && rep.positive && rep.monotone;
  return p;
}

bool is_pure_power(const Expr& e, double* order) {
  if (e.kind != Expr::Kind::call || e.function != "pow" || e.args.size() != 2) return false;
  if (e.args[0]->kind != Expr::Kind::variable || e.args[1]->kind != Expr::Kind::number) return false;
  if (order) *order = e.args[1]->value;
  return true;
}

ConvexFunctionOracle lift_radial(const YoungProfile& p, const NormSpec& norm, std::size_t n) {
  const auto rep = validate_profile(p, default_profile_grid());
  if (!rep.valid()) {
    const auto& v = rep.violations.front();
    throw InvalidProfile("profile '" + p.source + "' is not a Young function: " + v.kind + " fails near r = " +
                         format_number(v.r_mid) + " (" + std::to_string(rep.violations.size()) + " violation(s))");
  }
  ConvexFunctionOracle::Parts parts;
  parts.dim = n;
  parts.name = p.source;
  auto ast = p.ast;
  parts.eval = [ast, norm](ConstVecView x) { return ast->eval(norm(x)); };
  double order = 0.0;
  if (is_pure_power(*p.ast, &order)) parts.homogeneity_order = order;
  parts.radial = RadialStructure{[ast](double r) { return ast->eval(r); }, norm};
  return ConvexFunctionOracle::create(std::move(parts));
}

}  // namespace orlicz_lab
