#pragma once

#include <memory>
#include <string_view>
#include <vector>

#include "degbell/polynomial.hpp"

namespace degbell {

enum class FactorialBasis {
  falling_classical,   // (x)_k
  falling_degenerate,  // (x)_{k,lambda}
  rising_classical,    // <x>_k
  rising_degenerate,   // <x>_{k,lambda}
};

/// A multiple of Euler's number e, kept symbolic: value = coeff * e.
struct EUnitScalar {
  LambdaPoly coeff;

  /// Numeric value at a given lambda; e enters only here.
  [[nodiscard]] double to_double(const Rational& lam) const;
  friend bool operator==(const EUnitScalar&, const EUnitScalar&) = default;
};

XPoly falling_classical(int n);
XPoly rising_classical(int n);
/// (x)_{n,lambda} = x(x-lambda)...(x-(n-1)lambda).
XPoly falling_deg(int n);
/// <x>_{n,lambda} = x(x+lambda)...(x+(n-1)lambda).
XPoly rising_deg(int n);
/// k-th element of a factorial basis (monic, degree k).
XPoly basis_element(FactorialBasis basis, int k);

/// (w)_{n,lambda} = w(w-lambda)...(w-(n-1)lambda) for a lambda-polynomial w,
/// e.g. (1)_{n,lambda}, (m*lambda)_{n,lambda}, (alpha)_{n,lambda} with
/// alpha = m + k*lambda.
LambdaPoly degenerate_falling_value(const LambdaPoly& w, int n);

/// Coefficients c_0..c_d with p = sum c_k * basis_k(x), by descending-degree
/// elimination.
std::vector<LambdaPoly> basis_expand(const XPoly& p, FactorialBasis basis);

/// Memoized triangular tables up to a fixed row bound. Instances are
/// immutable, so they can be shared between threads.
///
/// Stirling numbers of the second kind come from the triangular recurrence
/// S(n+1,k) = S(n,k-1) + (k - n*lambda) S(n,k); Bell polynomials are built
/// from that table, so a corrupted entry propagates to every consumer.
/// First-kind numbers are computed independently by basis elimination, and
/// Bernoulli numbers by series inversion.
class NumberTables {
 public:
  explicit NumberTables(int n_max);

  [[nodiscard]] int n_max() const { return n_max_; }

  /// Zero outside 0 <= k <= n. Throws std::out_of_range beyond n_max and
  /// std::invalid_argument for negative n.
  [[nodiscard]] const LambdaPoly& stirling2(int n, int k) const;
  [[nodiscard]] const LambdaPoly& stirling1(int n, int k) const;
  /// Degenerate absolute Stirling numbers (-1)^{n-k} S1(n,k).
  [[nodiscard]] const LambdaPoly& bracket(int n, int k) const;
  [[nodiscard]] const LambdaPoly& bernoulli(int n) const;
  [[nodiscard]] const XPoly& bell(int n) const;

  /// Copy with one second-kind entry replaced (fault injection). Bell
  /// polynomials are rebuilt from the modified table; nothing else changes.
  [[nodiscard]] NumberTables with_stirling2_entry(int n, int k, LambdaPoly value) const;

 private:
  void check_row(int n) const;
  void rebuild_bell();

  int n_max_;
  std::vector<std::vector<LambdaPoly>> stirling2_;
  std::vector<std::vector<LambdaPoly>> stirling1_;
  std::vector<std::vector<LambdaPoly>> bracket_;
  std::vector<LambdaPoly> bernoulli_;
  std::vector<XPoly> bell_;
};

/// Process-wide tables covering at least rows 0..n_max. Grows on demand;
/// returned snapshots stay valid and immutable.
std::shared_ptr<const NumberTables> shared_tables(int n_max);

LambdaPoly stirling2_deg(int n, int k);
LambdaPoly stirling1_deg(int n, int k);
LambdaPoly bracket_deg(int n, int k);
/// Second route to the bracket numbers: expand <x>_n in the degenerate
/// rising basis.
LambdaPoly bracket_deg_by_basis(int n, int k);
LambdaPoly bernoulli_deg(int n);
XPoly bell_deg(int n);
EUnitScalar s_n_lambda(int n);

/// (1/k!) sum_j C(k,j) (-1)^{k-j} (j)_{n,lambda}, computed directly.
LambdaPoly stirling2_alt_sum(int n, int k);

/// Truncated Dobinski sum e^{-x} sum_{k<terms} (k)_{n,lambda} x^k / k! in
/// floating point. Throws std::invalid_argument for n < 0, terms < 1,
/// x <= 0 or non-finite inputs.
double bell_dobinski_numeric(int n, double x, double lam, int terms);

}  // namespace degbell
