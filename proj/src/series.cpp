#include "degbell/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace degbell {

namespace {

bool is_rational_constant(const XPoly& p) {
  return p.size() == 1 && p.coeffs()[0].size() == 1;
}

}  // namespace

Series::Series(std::vector<XPoly> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw std::invalid_argument("series needs at least one coefficient");
  }
}

Series Series::constant(const XPoly& value, std::size_t order) {
  Series out(order);
  out.coeffs_[0] = value;
  return out;
}

Series Series::variable(std::size_t order) {
  Series out(order);
  if (order >= 1) {
    out.coeffs_[1] = XPoly(1);
  }
  return out;
}

Series Series::truncated(std::size_t order) const {
  if (order >= this->order()) {
    return *this;
  }
  return Series(std::vector<XPoly>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order + 1)));
}

Series Series::times(const XPoly& factor) const {
  Series out(*this);
  for (auto& c : out.coeffs_) {
    c = c * factor;
  }
  return out;
}

Series Series::scaled(const Rational& factor) const {
  Series out(*this);
  for (auto& c : out.coeffs_) {
    c = c.scaled(factor);
  }
  return out;
}

Series Series::derivative() const {
  if (order() == 0) {
    throw std::domain_error("derivative of an order-0 series is undetermined");
  }
  std::vector<XPoly> out(order());
  for (std::size_t n = 1; n <= order(); ++n) {
    out[n - 1] = coeffs_[n].scaled(Rational(static_cast<long>(n)));
  }
  return Series(std::move(out));
}

Series Series::divided_by_t() const {
  if (!coeffs_[0].is_zero()) {
    throw std::domain_error("series has a nonzero constant term");
  }
  if (order() == 0) {
    throw std::domain_error("cannot divide an order-0 series by t");
  }
  return Series(std::vector<XPoly>(coeffs_.begin() + 1, coeffs_.end()));
}

Series operator+(const Series& a, const Series& b) {
  Series out(std::min(a.order(), b.order()));
  for (std::size_t n = 0; n <= out.order(); ++n) {
    out.coeffs_[n] = a.coeffs_[n] + b.coeffs_[n];
  }
  return out;
}

Series operator-(const Series& a, const Series& b) {
  Series out(std::min(a.order(), b.order()));
  for (std::size_t n = 0; n <= out.order(); ++n) {
    out.coeffs_[n] = a.coeffs_[n] - b.coeffs_[n];
  }
  return out;
}

Series operator*(const Series& a, const Series& b) {
  Series out(std::min(a.order(), b.order()));
  const std::size_t order = out.order();
  for (std::size_t i = 0; i <= order; ++i) {
    if (a.coeffs_[i].is_zero()) {
      continue;
    }
    for (std::size_t j = 0; i + j <= order; ++j) {
      if (!b.coeffs_[j].is_zero()) {
        out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
  }
  return out;
}

Series series_mul(const Series& a, const Series& b) { return a * b; }

Series series_recip_unit(const Series& a) {
  if (!is_rational_constant(a[0])) {
    throw std::domain_error("non-unit constant term");
  }
  const Rational inv = a[0].coeffs()[0].coeffs()[0].inverse();
  std::vector<XPoly> out(a.order() + 1);
  out[0] = XPoly(LambdaPoly(inv));
  for (std::size_t n = 1; n <= a.order(); ++n) {
    XPoly acc;
    for (std::size_t i = 1; i <= n; ++i) {
      if (!a[i].is_zero()) {
        acc += a[i] * out[n - i];
      }
    }
    out[n] = acc.scaled(-inv);
  }
  return Series(std::move(out));
}

Series series_exp(const Series& a) {
  if (!a[0].is_zero()) {
    throw std::domain_error("exp of non-nilpotent series");
  }
  // E' = A'E, so n E_n = sum_{k=1..n} k A_k E_{n-k}.
  std::vector<XPoly> out(a.order() + 1);
  out[0] = XPoly(1);
  for (std::size_t n = 1; n <= a.order(); ++n) {
    XPoly acc;
    for (std::size_t k = 1; k <= n; ++k) {
      if (!a[k].is_zero()) {
        acc += (a[k] * out[n - k]).scaled(Rational(static_cast<long>(k)));
      }
    }
    out[n] = acc.scaled(Rational(1, static_cast<long>(n)));
  }
  return Series(std::move(out));
}

Series series_compose(const Series& outer, const Series& inner) {
  if (!inner[0].is_zero()) {
    throw std::domain_error("composition requires zero constant term");
  }
  const std::size_t order = std::min(outer.order(), inner.order());
  const Series in = inner.truncated(order);
  Series acc(order);
  for (std::size_t i = order + 1; i-- > 0;) {
    acc = acc * in + Series::constant(outer[i], order);
  }
  return acc;
}

Series series_eval_poly(const XPoly& p, const Series& s) {
  Series acc(s.order());
  const auto coeffs = p.coeffs();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * s + Series::constant(XPoly(*it), s.order());
  }
  return acc;
}

Series e_lambda_series(const XPoly& exponent, std::size_t order) {
  std::vector<XPoly> out(order + 1);
  XPoly falling(1);
  for (std::size_t k = 0; k <= order; ++k) {
    out[k] = falling.scaled(factorial(static_cast<int>(k)).inverse());
    falling = falling * (exponent - XPoly(lambda_var().scaled(Rational(static_cast<long>(k)))));
  }
  return Series(std::move(out));
}

Series log_lambda_series(std::size_t order) {
  if (order < 1) {
    throw std::invalid_argument("log_lambda series needs order >= 1");
  }
  std::vector<XPoly> out(order + 1);
  LambdaPoly product(1);
  for (std::size_t n = 1; n <= order; ++n) {
    if (n >= 2) {
      product = product * lambda_linear(Rational(-static_cast<long>(n - 1)), Rational(1));
    }
    out[n] = XPoly(product.scaled(factorial(static_cast<int>(n)).inverse()));
  }
  return Series(std::move(out));
}

Series binomial_power_series(const LambdaPoly& base_shift, const XPoly& exponent, std::size_t order) {
  std::vector<XPoly> out(order + 1);
  XPoly falling(1);
  LambdaPoly shift_power(1);
  for (std::size_t n = 0; n <= order; ++n) {
    out[n] = (falling * XPoly(shift_power)).scaled(factorial(static_cast<int>(n)).inverse());
    falling = falling * (exponent - XPoly(static_cast<long>(n)));
    shift_power = shift_power * base_shift;
  }
  return Series(std::move(out));
}

}  // namespace degbell
