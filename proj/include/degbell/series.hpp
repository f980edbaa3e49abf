#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "degbell/polynomial.hpp"

namespace degbell {

inline constexpr std::size_t kDefaultSeriesOrder = 16;

/// Truncated formal power series in t with XPoly coefficients, keeping the
/// coefficients of t^0 .. t^order. Binary arithmetic truncates to the smaller
/// of the two orders.
class Series {
 public:
  /// Zero series of the given order.
  explicit Series(std::size_t order) : coeffs_(order + 1) {}
  /// Order is coeffs.size() - 1; coeffs must be nonempty.
  explicit Series(std::vector<XPoly> coeffs);

  static Series constant(const XPoly& value, std::size_t order);
  /// The series t (requires order >= 1 to be meaningful; order 0 gives 0).
  static Series variable(std::size_t order);

  [[nodiscard]] std::size_t order() const { return coeffs_.size() - 1; }
  [[nodiscard]] const XPoly& operator[](std::size_t n) const { return coeffs_[n]; }
  /// Coefficient of t^n, zero beyond the order.
  [[nodiscard]] XPoly coeff(std::size_t n) const { return n < coeffs_.size() ? coeffs_[n] : XPoly(); }
  [[nodiscard]] std::span<const XPoly> coeffs() const { return coeffs_; }

  [[nodiscard]] Series truncated(std::size_t order) const;
  /// Multiplies every coefficient by an XPoly (no truncation change).
  [[nodiscard]] Series times(const XPoly& factor) const;
  [[nodiscard]] Series scaled(const Rational& factor) const;
  /// d/dt: coefficient shift and scale; the result has order one less.
  /// Throws std::domain_error for an order-0 series.
  [[nodiscard]] Series derivative() const;
  /// Drops the t^0 coefficient and divides by t (order one less). The
  /// constant term must be zero.
  [[nodiscard]] Series divided_by_t() const;

  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend Series operator*(const Series& a, const Series& b);
  friend bool operator==(const Series&, const Series&) = default;

 private:
  std::vector<XPoly> coeffs_;
};

Series series_mul(const Series& a, const Series& b);

/// Multiplicative inverse; the constant term must be a nonzero rational.
/// Throws std::domain_error("non-unit constant term").
Series series_recip_unit(const Series& a);

/// exp of a series with zero constant term.
/// Throws std::domain_error("exp of non-nilpotent series").
Series series_exp(const Series& a);

/// outer(inner(t)); inner must have zero constant term.
/// Throws std::domain_error("composition requires zero constant term").
Series series_compose(const Series& outer, const Series& inner);

/// p(s(t)) for a polynomial p in x; s may have any constant term since p is
/// a finite sum.
Series series_eval_poly(const XPoly& p, const Series& s);

/// Degenerate exponential e_lambda^w(t): coefficient of t^k is (w)_{k,lambda}/k!.
Series e_lambda_series(const XPoly& exponent, std::size_t order);

/// Degenerate logarithm log_lambda(1+t): coefficient of t^n/n! is
/// (lambda-1)(lambda-2)...(lambda-n+1). Requires order >= 1.
Series log_lambda_series(std::size_t order);

/// (1 + shift*t)^w: coefficient of t^n is shift^n (w)_n / n! with the
/// classical falling factorial (w)_n.
Series binomial_power_series(const LambdaPoly& base_shift, const XPoly& exponent, std::size_t order);

}  // namespace degbell
