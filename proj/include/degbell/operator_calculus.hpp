#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "degbell/numbers.hpp"
#include "degbell/polynomial.hpp"

namespace degbell {

/// coeff * x^(x_int + x_lam*lambda) * e^(exp_coeff * x^exp_power).
/// exp_coeff = 0 encodes a pure power; its exp_power is normalized to 1.
struct ExpTerm {
  LambdaPoly coeff;
  int x_int = 0;
  int x_lam = 0;
  Rational exp_coeff;
  int exp_power = 1;

  /// Terms with equal keys merge by adding coefficients.
  [[nodiscard]] auto merge_key() const { return std::tie(exp_coeff, exp_power, x_int, x_lam); }
  friend bool operator==(const ExpTerm&, const ExpTerm&) = default;
};

/// Finite sum of ExpTerms in canonical form: sorted by
/// (exp_coeff, exp_power, x_int, x_lam), merged, zero terms dropped.
/// This is the class closed under x^{1-lambda} d/dx.
class ExpExpr {
 public:
  ExpExpr() = default;
  explicit ExpExpr(std::vector<ExpTerm> terms);

  /// e^(a x^p).
  static ExpExpr exponential(const Rational& a, int p = 1);
  /// c * x^(m + k*lambda).
  static ExpExpr power(int m, int k = 0, LambdaPoly c = LambdaPoly(1));
  /// x^(lam_shift*lambda) * p(x) * e^(a x^exp_power).
  static ExpExpr from_xpoly(const XPoly& p, int lam_shift, const Rational& a = Rational(), int exp_power = 1);

  [[nodiscard]] const std::vector<ExpTerm>& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }

  [[nodiscard]] ExpExpr scaled(const LambdaPoly& c) const;
  /// Multiplies by x^(m + k*lambda).
  [[nodiscard]] ExpExpr shifted(int m, int k) const;

  /// Product; exponential factors e^(a x^p) and e^(b x^q) combine only when
  /// one of them is trivial or p = q. Throws std::domain_error otherwise.
  friend ExpExpr operator*(const ExpExpr& lhs, const ExpExpr& rhs);
  friend ExpExpr operator+(const ExpExpr& lhs, const ExpExpr& rhs);
  friend ExpExpr operator-(const ExpExpr& lhs, const ExpExpr& rhs);
  friend bool operator==(const ExpExpr&, const ExpExpr&) = default;

 private:
  std::vector<ExpTerm> terms_;
};

/// Renders terms as "coeff * x^(m±k·λ) * exp(a·x^p)" in canonical order.
std::string render(const ExpExpr& e);

/// One application of x^{1-lambda} d/dx.
ExpExpr op_apply(const ExpExpr& e);
/// n-fold application; n = 0 returns the input. Throws on negative n.
ExpExpr op_power(const ExpExpr& e, int n);
/// Ordinary d/dx on the same class.
ExpExpr plain_derivative(const ExpExpr& e);

/// sum_k S2(n,k) scale^k x^(k - n*lambda) e^(scale*x).
/// Throws std::invalid_argument("degenerate exponential argument") for scale = 0.
ExpExpr theorem3_rhs(int n, const Rational& scale, const NumberTables& tables);
ExpExpr theorem3_rhs(int n, const Rational& scale);

/// p^n sum_k S2_{lambda/p}(n,k) a^k x^(pk - n*lambda) e^(a x^p).
ExpExpr prop10_rhs(int n, const Rational& a, int p, const NumberTables& tables);
ExpExpr prop10_rhs(int n, const Rational& a, int p);

/// sum_k S2(n,k) x^(k - n*lambda) D^k f, with D the ordinary derivative.
ExpExpr stirling_operator_expansion(const ExpExpr& f, int n, const NumberTables& tables);

/// The expansion above for f = x^r, built directly:
/// sum_k S2(n,k) (r)_k x^(r - n*lambda).
ExpExpr theorem11_apply_monomial(int n, int r, const NumberTables& tables);
ExpExpr theorem11_apply_monomial(int n, int r);

/// Sets x = 1 in a pure e^x expression and returns the result in units of e.
/// Throws std::domain_error("not a pure e^x expression") otherwise.
EUnitScalar eval_at_x1_in_e_units(const ExpExpr& e);

}  // namespace degbell
