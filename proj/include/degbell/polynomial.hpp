#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "degbell/rational.hpp"

namespace degbell {

/// Dense univariate polynomial; index i of the coefficient sequence holds the
/// coefficient of the i-th power. The sequence never ends in a zero
/// coefficient, so the zero polynomial is the empty sequence and equality is
/// structural.
template <class Coeff>
class Polynomial {
 public:
  using coeff_type = Coeff;

  Polynomial() = default;

  Polynomial(Coeff constant) {  // NOLINT(google-explicit-constructor)
    if (!constant.is_zero()) {
      coeffs_.push_back(std::move(constant));
    }
  }

  template <std::integral T>
  Polynomial(T constant) : Polynomial(Coeff(constant)) {}  // NOLINT(google-explicit-constructor)

  explicit Polynomial(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  /// c * v^power, where v is this ring's indeterminate.
  static Polynomial monomial(Coeff c, std::size_t power) {
    if (c.is_zero()) {
      return {};
    }
    std::vector<Coeff> coeffs(power + 1);
    coeffs[power] = std::move(c);
    return Polynomial(std::move(coeffs));
  }

  /// The indeterminate itself.
  static Polynomial variable() { return monomial(Coeff(1), 1); }

  [[nodiscard]] std::span<const Coeff> coeffs() const { return coeffs_; }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] std::size_t size() const { return coeffs_.size(); }

  /// Degree, or nullopt for the zero polynomial.
  [[nodiscard]] std::optional<std::size_t> degree() const {
    if (coeffs_.empty()) {
      return std::nullopt;
    }
    return coeffs_.size() - 1;
  }

  /// Coefficient of v^i; zero beyond the stored range.
  [[nodiscard]] Coeff coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Coeff(); }

  [[nodiscard]] const Coeff& leading() const { return coeffs_.back(); }

  /// Horner evaluation at a value from the coefficient ring.
  [[nodiscard]] Coeff operator()(const Coeff& at) const {
    Coeff acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * at + *it;
    }
    return acc;
  }

  /// Multiplies every coefficient by a rational scalar.
  [[nodiscard]] Polynomial scaled(const Rational& factor) const {
    if (factor.is_zero()) {
      return {};
    }
    std::vector<Coeff> out(coeffs_);
    for (auto& c : out) {
      c = scale_coeff(c, factor);
    }
    return Polynomial(std::move(out));
  }

  /// Formal derivative with respect to this ring's indeterminate.
  [[nodiscard]] Polynomial derivative() const {
    if (coeffs_.size() <= 1) {
      return {};
    }
    std::vector<Coeff> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
      out[i - 1] = scale_coeff(coeffs_[i], Rational(static_cast<long>(i)));
    }
    return Polynomial(std::move(out));
  }

  /// Formal antiderivative with zero constant term.
  [[nodiscard]] Polynomial antiderivative() const {
    if (coeffs_.empty()) {
      return {};
    }
    std::vector<Coeff> out(coeffs_.size() + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      out[i + 1] = scale_coeff(coeffs_[i], Rational(1, static_cast<long>(i + 1)));
    }
    return Polynomial(std::move(out));
  }

  /// p(c * v): coefficient i is multiplied by c^i.
  [[nodiscard]] Polynomial substitute_scaled(const Coeff& c) const {
    std::vector<Coeff> out(coeffs_);
    Coeff power(1);
    for (auto& coeff : out) {
      coeff = coeff * power;
      power = power * c;
    }
    return Polynomial(std::move(out));
  }

  /// p(q(v)) by Horner accumulation.
  [[nodiscard]] Polynomial compose(const Polynomial& inner) const {
    Polynomial acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * inner + Polynomial(*it);
    }
    return acc;
  }

  Polynomial& operator+=(const Polynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) {
      coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
      coeffs_[i] += rhs.coeffs_[i];
    }
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) {
      coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
      coeffs_[i] -= rhs.coeffs_[i];
    }
    trim();
    return *this;
  }

  Polynomial& operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator-(const Polynomial& p) { return p.scaled(Rational(-1)); }

  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) {
      return {};
    }
    std::vector<Coeff> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
      if (lhs.coeffs_[i].is_zero()) {
        continue;
      }
      for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
        if (!rhs.coeffs_[j].is_zero()) {
          out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
        }
      }
    }
    return Polynomial(std::move(out));
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  static Coeff scale_coeff(const Coeff& c, const Rational& factor) {
    if constexpr (std::same_as<Coeff, Rational>) {
      return c * factor;
    } else {
      return c.scaled(factor);
    }
  }

  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
      coeffs_.pop_back();
    }
  }

  std::vector<Coeff> coeffs_;
};

/// Polynomial in the deformation parameter lambda with rational coefficients.
using LambdaPoly = Polynomial<Rational>;
/// Polynomial in x whose coefficients are polynomials in lambda.
using XPoly = Polynomial<LambdaPoly>;

/// Exact value of p at lambda = lam.
inline Rational lambda_poly_eval(const LambdaPoly& p, const Rational& lam) { return p(lam); }

/// q(lambda) = p(c * lambda).
inline LambdaPoly lambda_scale(const LambdaPoly& p, const Rational& c) { return p.substitute_scaled(c); }

/// Exact value of p at (x0, lam): coefficients are evaluated at lam, then
/// Horner in x0.
Rational xpoly_eval(const XPoly& p, const Rational& x0, const Rational& lam);

/// Specializes lambda to a number, leaving a polynomial in x.
XPoly xpoly_at_lambda(const XPoly& p, const Rational& lam);

inline XPoly xpoly_derivative(const XPoly& p) { return p.derivative(); }
inline XPoly xpoly_antiderivative(const XPoly& p) { return p.antiderivative(); }

/// The polynomial lambda.
inline LambdaPoly lambda_var() { return LambdaPoly::variable(); }
/// The polynomial x.
inline XPoly x_var() { return XPoly::variable(); }

/// a + b*lambda.
inline LambdaPoly lambda_linear(const Rational& a, const Rational& b) { return LambdaPoly(std::vector<Rational>{a, b}); }

}  // namespace degbell
