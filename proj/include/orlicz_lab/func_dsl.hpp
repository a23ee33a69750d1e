#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "orlicz_lab/norm_spec.hpp"
#include "orlicz_lab/oracle.hpp"

namespace orlicz_lab {

/// Expression tree for a scalar profile V(r).
///
///   expr   := term (('+' | '-') term)*
///   term   := factor ('*' factor)*
///   factor := number | 'r' | ident '(' expr {',' expr} ')' | '(' expr ')'
///   ident  := pow | log | log1p | max | min | abs
struct Expr {
  enum class Kind { number, variable, add, sub, mul, call };

  Kind kind = Kind::number;
  double value = 0.0;
  std::string function;
  std::vector<std::shared_ptr<const Expr>> args;

  double eval(double r) const;
};

using ExprPtr = std::shared_ptr<const Expr>;

bool structurally_equal(const Expr& a, const Expr& b);

/// Canonical text; parsing it yields a structurally equal tree.
std::string print(const Expr& e);

struct YoungProfile {
  ExprPtr ast;
  std::string source;
  bool claims_convex = false;
  bool claims_young = false;

  double operator()(double r) const { return ast->eval(r); }
};

/// Throws ParseError (with byte offset and the expected tokens) or
/// UnknownFunction.
YoungProfile parse_young(const std::string& src);

struct ProfileViolation {
  std::string kind;  // "origin", "positivity", "monotonicity", "convexity"
  double r_left = 0.0;
  double r_mid = 0.0;
  double r_right = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
};

struct ValidationReport {
  bool zero_at_origin = false;
  bool positive = false;
  bool monotone = false;
  bool convex = false;
  std::vector<ProfileViolation> violations;

  bool valid() const { return violations.empty(); }
};

/// 0, 0.1, ..., 10.
std::vector<double> default_profile_grid();

/// Checks V(0) = 0, V > 0 and non-decreasing on the grid, and midpoint
/// convexity over all grid pairs.
ValidationReport validate_profile(const YoungProfile& p, const std::vector<double>& grid);

/// True iff the tree is pow(r, <literal>); writes the literal to `order`.
bool is_pure_power(const Expr& e, double* order = nullptr);

/// L(x) = V(norm(x)) on R^n. Throws InvalidProfile when validation on the
/// default grid fails.
ConvexFunctionOracle lift_radial(const YoungProfile& p, const NormSpec& norm, std::size_t n);

}  // namespace orlicz_lab
