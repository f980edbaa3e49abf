#include <doctest.h>

#include <random>
#include <stdexcept>

#include "degbell/series.hpp"
#include "oracles.hpp"

using namespace degbell;

namespace {

Series scalar_series(const std::vector<Rational>& c) {
  std::vector<XPoly> out;
  for (const auto& r : c) {
    out.emplace_back(LambdaPoly(r));
  }
  return Series(std::move(out));
}

Rational scalar(const Series& s, std::size_t n) { return s[n].coeff(0).coeff(0); }

Series at_lambda(const Series& s, const Rational& lam) {
  std::vector<XPoly> out;
  for (const auto& c : s.coeffs()) {
    out.push_back(xpoly_at_lambda(c, lam));
  }
  return Series(std::move(out));
}

}  // namespace

TEST_CASE("series construction and accessors") {
  const Series z(3);
  CHECK(z.order() == 3);
  CHECK(z[2].is_zero());
  CHECK(Series::variable(4)[1] == XPoly(1));
  CHECK(Series::constant(x_var(), 2)[0] == x_var());
  CHECK(z.coeff(10).is_zero());
  CHECK_THROWS_AS((void)Series(std::vector<XPoly>{}), std::invalid_argument);
  CHECK_THROWS_AS((void)Series(0).derivative(), std::domain_error);
  CHECK_THROWS((void)Series::constant(XPoly(1), 3).divided_by_t());
}

TEST_CASE("binary operations truncate to the smaller order") {
  const Series a = scalar_series({Rational(1), Rational(2), Rational(3), Rational(4)});
  const Series b = scalar_series({Rational(1), Rational(1)});
  CHECK((a + b).order() == 1);
  CHECK((a * b).order() == 1);
  CHECK(scalar(a * b, 1) == Rational(3));
  CHECK(a.truncated(2).order() == 2);
}

TEST_CASE("exp matches the direct power sum") {
  for (const Rational& a : {Rational(1), Rational(-1), Rational(2), Rational(1, 2)}) {
    const auto expected = oracle::exp_scalar(a, 12);
    const Series e = series_exp(Series::variable(12).scaled(a));
    for (std::size_t n = 0; n <= 12; ++n) {
      CHECK(scalar(e, n) == expected[n]);
    }
  }
  CHECK_THROWS_AS((void)series_exp(Series::constant(XPoly(1), 3)), std::domain_error);
}

TEST_CASE("exp is a homomorphism and log-free identities hold") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(-5, 5);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Rational> ca{Rational(0)};
    std::vector<Rational> cb{Rational(0)};
    for (int i = 0; i < 8; ++i) {
      ca.emplace_back(d(rng), 3);
      cb.emplace_back(d(rng), 2);
    }
    const Series a = scalar_series(ca);
    const Series b = scalar_series(cb);
    CHECK(series_exp(a + b) == series_exp(a) * series_exp(b));
  }
}

TEST_CASE("reciprocal") {
  const Series one_minus_t = scalar_series({Rational(1), Rational(-1), Rational(0), Rational(0), Rational(0)});
  const Series geometric = series_recip_unit(one_minus_t);
  for (std::size_t n = 0; n <= 4; ++n) {
    CHECK(scalar(geometric, n) == Rational(1));
  }
  CHECK(geometric * one_minus_t == Series::constant(XPoly(1), 4));
  CHECK_THROWS_AS((void)series_recip_unit(Series::variable(3)), std::domain_error);
  CHECK_THROWS_AS((void)series_recip_unit(Series::constant(x_var(), 3)), std::domain_error);
}

TEST_CASE("composition") {
  // exp(t) composed with t + t^2 against exp of the sum directly.
  const Series inner = scalar_series({Rational(0), Rational(1), Rational(1), Rational(0), Rational(0), Rational(0)});
  const Series outer = series_exp(Series::variable(5));
  CHECK(series_compose(outer, inner) == series_exp(inner));
  CHECK_THROWS_AS((void)series_compose(outer, Series::constant(XPoly(1), 5)), std::domain_error);
}

TEST_CASE("degenerate exponential and logarithm") {
  const Series e = e_lambda_series(XPoly(1), 4);
  CHECK(e[0] == XPoly(1));
  CHECK(e[1] == XPoly(1));
  // (1)_{2,lambda}/2 = (1 - lambda)/2
  CHECK(e[2] == XPoly(lambda_linear(Rational(1, 2), Rational(-1, 2))));
  const Series log2 = log_lambda_series(2);
  CHECK(log2[1] == XPoly(1));
  CHECK(log2[2] == XPoly(lambda_linear(Rational(-1, 2), Rational(1, 2))));
  CHECK_THROWS((void)log_lambda_series(0));

  for (const Rational& lam : {Rational(1, 2), Rational(1, 3), Rational(-2), Rational(3)}) {
    const auto expected = oracle::log_lambda_at(10, lam);
    const Series got = at_lambda(log_lambda_series(10), lam);
    for (std::size_t n = 0; n <= 10; ++n) {
      CHECK(scalar(got, n) == expected[n]);
    }
  }
}

TEST_CASE("e_lambda reduces to exp at lambda = 0") {
  const Series e = at_lambda(e_lambda_series(x_var(), 10), Rational(0));
  const Series expected = series_exp(Series::variable(10).times(x_var()));
  CHECK(e == expected);
}

TEST_CASE("e_lambda at lambda = 1/m is a binomial power") {
  // e_lambda(t) = (1 + lambda t)^{1/lambda}; at lambda = 1/2 that is (1 + t/2)^2.
  const Series e = at_lambda(e_lambda_series(XPoly(1), 6), Rational(1, 2));
  const Series base = scalar_series({Rational(1), Rational(1, 2), Rational(0), Rational(0), Rational(0),
                                     Rational(0), Rational(0)});
  CHECK(e == base * base);
}

TEST_CASE("derivative and polynomial evaluation") {
  const Series e = series_exp(Series::variable(6));
  CHECK(e.derivative() == e.truncated(5));
  const XPoly p = x_var() * x_var() + XPoly(1);
  const Series t = Series::variable(4);
  CHECK(series_eval_poly(p, Series::constant(XPoly(2), 4)) == Series::constant(XPoly(5), 4));
  CHECK(series_eval_poly(p, t) == (t * t) + Series::constant(XPoly(1), 4));
  CHECK(series_eval_poly(XPoly(1), t) == Series::constant(XPoly(1), 4));
}

TEST_CASE("binomial power series") {
  const Series sq = binomial_power_series(LambdaPoly(1), XPoly(2), 4);
  CHECK(sq == scalar_series({Rational(1), Rational(2), Rational(1), Rational(0), Rational(0)}));
  // (1 + lambda t)^x at lambda = 0 is 1.
  CHECK(at_lambda(binomial_power_series(lambda_var(), x_var(), 5), Rational(0)) == Series::constant(XPoly(1), 5));
}
