#include "degbell/numbers.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>

#include "degbell/series.hpp"

namespace degbell {

namespace {

void require_nonnegative(int n, const char* what) {
  if (n < 0) {
    throw std::invalid_argument(std::string(what) + ": negative index " + std::to_string(n));
  }
}

const LambdaPoly& zero_lambda() {
  static const LambdaPoly zero;
  return zero;
}

// x + shift, with shift a lambda-polynomial.
XPoly x_plus(const LambdaPoly& shift) { return XPoly(std::vector<LambdaPoly>{shift, LambdaPoly(1)}); }

XPoly factorial_product(int n, const LambdaPoly& step) {
  XPoly out(1);
  for (int j = 0; j < n; ++j) {
    out = out * x_plus(step.scaled(Rational(j)));
  }
  return out;
}

}  // namespace

double EUnitScalar::to_double(const Rational& lam) const {
  return lambda_poly_eval(coeff, lam).to_double() * std::numbers::e;
}

XPoly falling_classical(int n) {
  require_nonnegative(n, "falling factorial");
  return factorial_product(n, LambdaPoly(-1));
}

XPoly rising_classical(int n) {
  require_nonnegative(n, "rising factorial");
  return factorial_product(n, LambdaPoly(1));
}

XPoly falling_deg(int n) {
  require_nonnegative(n, "falling_deg");
  return factorial_product(n, -lambda_var());
}

XPoly rising_deg(int n) {
  require_nonnegative(n, "rising_deg");
  return factorial_product(n, lambda_var());
}

XPoly basis_element(FactorialBasis basis, int k) {
  switch (basis) {
    case FactorialBasis::falling_classical:
      return falling_classical(k);
    case FactorialBasis::falling_degenerate:
      return falling_deg(k);
    case FactorialBasis::rising_classical:
      return rising_classical(k);
    case FactorialBasis::rising_degenerate:
      return rising_deg(k);
  }
  throw std::invalid_argument("unknown factorial basis");
}

LambdaPoly degenerate_falling_value(const LambdaPoly& w, int n) {
  require_nonnegative(n, "degenerate falling factorial");
  LambdaPoly out(1);
  for (int j = 0; j < n; ++j) {
    out = out * (w - lambda_var().scaled(Rational(j)));
  }
  return out;
}

std::vector<LambdaPoly> basis_expand(const XPoly& p, FactorialBasis basis) {
  if (p.is_zero()) {
    return {};
  }
  const std::size_t degree = *p.degree();
  std::vector<LambdaPoly> out(degree + 1);
  XPoly rest = p;
  for (std::size_t d = degree + 1; d-- > 0;) {
    LambdaPoly c = rest.coeff(d);
    if (!c.is_zero()) {
      rest -= basis_element(basis, static_cast<int>(d)) * XPoly(c);
    }
    out[d] = std::move(c);
  }
  return out;
}

NumberTables::NumberTables(int n_max) : n_max_(n_max) {
  require_nonnegative(n_max, "NumberTables");
  const auto rows = static_cast<std::size_t>(n_max) + 1;

  stirling2_.resize(rows);
  stirling2_[0] = {LambdaPoly(1)};
  for (int n = 0; n < n_max; ++n) {
    const auto& prev = stirling2_[static_cast<std::size_t>(n)];
    auto& next = stirling2_[static_cast<std::size_t>(n) + 1];
    next.resize(static_cast<std::size_t>(n) + 2);
    for (int k = 0; k <= n + 1; ++k) {
      LambdaPoly value;
      if (k >= 1) {
        value += prev[static_cast<std::size_t>(k) - 1];
      }
      if (k <= n) {
        value += prev[static_cast<std::size_t>(k)] * lambda_linear(Rational(k), Rational(-n));
      }
      next[static_cast<std::size_t>(k)] = std::move(value);
    }
  }

  stirling1_.resize(rows);
  bracket_.resize(rows);
  for (int n = 0; n <= n_max; ++n) {
    auto row = basis_expand(falling_classical(n), FactorialBasis::falling_degenerate);
    row.resize(static_cast<std::size_t>(n) + 1);
    auto& brackets = bracket_[static_cast<std::size_t>(n)];
    brackets.reserve(row.size());
    for (int k = 0; k <= n; ++k) {
      const LambdaPoly& s1 = row[static_cast<std::size_t>(k)];
      brackets.push_back((n - k) % 2 == 0 ? s1 : -s1);
    }
    stirling1_[static_cast<std::size_t>(n)] = std::move(row);
  }

  // t / (e_lambda(t) - 1) as the reciprocal of (e_lambda(t) - 1) / t.
  const auto order = static_cast<std::size_t>(n_max);
  const Series shifted = (e_lambda_series(XPoly(1), order + 1) - Series::constant(XPoly(1), order + 1)).divided_by_t();
  const Series recip = series_recip_unit(shifted);
  bernoulli_.reserve(rows);
  for (std::size_t n = 0; n <= order; ++n) {
    bernoulli_.push_back(recip[n].coeff(0).scaled(factorial(static_cast<int>(n))));
  }

  rebuild_bell();
}

void NumberTables::rebuild_bell() {
  bell_.assign(stirling2_.size(), XPoly());
  for (std::size_t n = 0; n < stirling2_.size(); ++n) {
    bell_[n] = XPoly(stirling2_[n]);
  }
}

void NumberTables::check_row(int n) const {
  require_nonnegative(n, "NumberTables lookup");
  if (n > n_max_) {
    throw std::out_of_range("row " + std::to_string(n) + " beyond table bound " + std::to_string(n_max_));
  }
}

const LambdaPoly& NumberTables::stirling2(int n, int k) const {
  check_row(n);
  if (k < 0 || k > n) {
    return zero_lambda();
  }
  return stirling2_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

const LambdaPoly& NumberTables::stirling1(int n, int k) const {
  check_row(n);
  if (k < 0 || k > n) {
    return zero_lambda();
  }
  return stirling1_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

const LambdaPoly& NumberTables::bracket(int n, int k) const {
  check_row(n);
  if (k < 0 || k > n) {
    return zero_lambda();
  }
  return bracket_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

const LambdaPoly& NumberTables::bernoulli(int n) const {
  check_row(n);
  return bernoulli_[static_cast<std::size_t>(n)];
}

const XPoly& NumberTables::bell(int n) const {
  check_row(n);
  return bell_[static_cast<std::size_t>(n)];
}

NumberTables NumberTables::with_stirling2_entry(int n, int k, LambdaPoly value) const {
  check_row(n);
  if (k < 0 || k > n) {
    throw std::out_of_range("stirling2 entry outside 0 <= k <= n");
  }
  NumberTables copy(*this);
  copy.stirling2_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] = std::move(value);
  copy.rebuild_bell();
  return copy;
}

std::shared_ptr<const NumberTables> shared_tables(int n_max) {
  require_nonnegative(n_max, "shared_tables");
  static std::mutex mutex;
  static std::shared_ptr<const NumberTables> current;
  const std::lock_guard lock(mutex);
  if (!current || current->n_max() < n_max) {
    const int size = std::max(n_max, current ? 2 * current->n_max() : 16);
    current = std::make_shared<const NumberTables>(size);
  }
  return current;
}

LambdaPoly stirling2_deg(int n, int k) {
  require_nonnegative(n, "stirling2_deg");
  return shared_tables(n)->stirling2(n, k);
}

LambdaPoly stirling1_deg(int n, int k) {
  require_nonnegative(n, "stirling1_deg");
  return shared_tables(n)->stirling1(n, k);
}

LambdaPoly bracket_deg(int n, int k) {
  require_nonnegative(n, "bracket_deg");
  return shared_tables(n)->bracket(n, k);
}

LambdaPoly bracket_deg_by_basis(int n, int k) {
  require_nonnegative(n, "bracket_deg_by_basis");
  if (k < 0 || k > n) {
    return {};
  }
  const auto row = basis_expand(rising_classical(n), FactorialBasis::rising_degenerate);
  return static_cast<std::size_t>(k) < row.size() ? row[static_cast<std::size_t>(k)] : LambdaPoly();
}

LambdaPoly bernoulli_deg(int n) {
  require_nonnegative(n, "bernoulli_deg");
  return shared_tables(n)->bernoulli(n);
}

XPoly bell_deg(int n) {
  require_nonnegative(n, "bell_deg");
  return shared_tables(n)->bell(n);
}

EUnitScalar s_n_lambda(int n) { return EUnitScalar{bell_deg(n)(LambdaPoly(1))}; }

LambdaPoly stirling2_alt_sum(int n, int k) {
  require_nonnegative(n, "stirling2_alt_sum");
  require_nonnegative(k, "stirling2_alt_sum");
  LambdaPoly sum;
  for (int j = 0; j <= k; ++j) {
    const LambdaPoly term = degenerate_falling_value(LambdaPoly(j), n).scaled(binomial(k, j));
    if ((k - j) % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum.scaled(factorial(k).inverse());
}

double bell_dobinski_numeric(int n, double x, double lam, int terms) {
  if (!std::isfinite(x) || !std::isfinite(lam)) {
    throw std::invalid_argument("bell_dobinski_numeric: non-finite input");
  }
  if (n < 0 || terms < 1 || !(x > 0.0)) {
    throw std::invalid_argument("bell_dobinski_numeric: requires n >= 0, terms >= 1, x > 0");
  }
  // Extended precision, compensated summation.
  const long double xl = x;
  const long double laml = lam;
  long double power_over_factorial = 1.0L;  // x^k / k!
  long double sum = 0.0L;
  long double carry = 0.0L;
  for (int k = 0; k < terms; ++k) {
    long double falling = 1.0L;
    for (int j = 0; j < n; ++j) {
      falling *= static_cast<long double>(k) - static_cast<long double>(j) * laml;
    }
    const long double term = falling * power_over_factorial - carry;
    const long double next = sum + term;
    carry = (next - sum) - term;
    sum = next;
    power_over_factorial *= xl / static_cast<long double>(k + 1);
  }
  const auto result = static_cast<double>(std::exp(-xl) * sum);
  if (!std::isfinite(result)) {
    throw std::invalid_argument("bell_dobinski_numeric: result overflowed");
  }
  return result;
}

}  // namespace degbell
