#include <doctest.h>

#include <random>
#include <stdexcept>

#include "degbell/polynomial.hpp"
#include "degbell/rational.hpp"
#include "degbell/text.hpp"

using namespace degbell;

namespace {

Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-20, 20);
  std::uniform_int_distribution<int> den(1, 9);
  return Rational(num(rng), den(rng));
}

LambdaPoly random_lambda_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> deg(0, 3);
  std::vector<Rational> c;
  for (int i = deg(rng); i >= 0; --i) {
    c.push_back(random_rational(rng));
  }
  return LambdaPoly(std::move(c));
}

XPoly random_xpoly(std::mt19937& rng) {
  std::uniform_int_distribution<int> deg(0, 3);
  std::vector<LambdaPoly> c;
  for (int i = deg(rng); i >= 0; --i) {
    c.push_back(random_lambda_poly(rng));
  }
  return XPoly(std::move(c));
}

}  // namespace

TEST_CASE("rational arithmetic is exact and canonical") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK((Rational(1, 3) + Rational(1, 6)).str() == "1/2");
  CHECK((Rational(1, 3) * Rational(3)).str() == "1");
  CHECK(Rational(-7, 3).str() == "-7/3");
  CHECK(Rational(2, 3).inverse() == Rational(3, 2));
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK(Rational(5).pow(0) == Rational(1));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1).sign() == -1);
  CHECK(Rational(4, 2).is_integer());
}

TEST_CASE("rational error paths") {
  CHECK_THROWS_AS((void)Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS((void)Rational(0).inverse(), std::domain_error);
  CHECK_THROWS_AS((void)(Rational(1) / Rational(0)), std::domain_error);
  CHECK_THROWS_AS((void)Rational(0).pow(-1), std::domain_error);
  CHECK_THROWS_AS((void)factorial(-1), std::invalid_argument);
}

TEST_CASE("rational parsing") {
  CHECK(Rational::parse("3/4") == Rational(3, 4));
  CHECK(Rational::parse("-12") == Rational(-12));
  CHECK(Rational::parse("+5/10") == Rational(1, 2));
  CHECK(Rational::parse("123456789012345678901234567890").str() == "123456789012345678901234567890");
  for (const char* bad : {"", "0.5", "1/0", "abc", "1/", "/2", "1//2", "1e3", "- 1"}) {
    CHECK_THROWS_AS((void)Rational::parse(bad), ParseError);
  }
}

TEST_CASE("rational from_double is exact") {
  CHECK(Rational::from_double(0.5) == Rational(1, 2));
  CHECK(Rational::from_double(-3.0) == Rational(-3));
  CHECK(Rational::from_double(0.1) != Rational(1, 10));
  CHECK(Rational::from_double(0.1).to_double() == 0.1);
}

TEST_CASE("factorial and binomial") {
  CHECK(factorial(0) == Rational(1));
  CHECK(factorial(10) == Rational(3628800));
  CHECK(binomial(5, 2) == Rational(10));
  CHECK(binomial(5, 6) == Rational(0));
  CHECK(binomial(5, -1) == Rational(0));
  for (int n = 1; n <= 15; ++n) {
    for (int k = 1; k <= n; ++k) {
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
    }
  }
}

TEST_CASE("polynomial basics") {
  const LambdaPoly lam = lambda_var();
  const LambdaPoly p = lam * lam - LambdaPoly(1);
  CHECK(p.degree() == 2);
  CHECK(LambdaPoly().is_zero());
  CHECK(p(Rational(3)) == Rational(8));
  CHECK(p.derivative() == lam.scaled(Rational(2)));
  CHECK(p.antiderivative().derivative() == p);
  CHECK(lambda_linear(Rational(1), Rational(-1)) == LambdaPoly(1) - lam);
  CHECK(LambdaPoly(std::vector<Rational>{Rational(1), Rational(0)}).size() == 1);
  CHECK(p.substitute_scaled(Rational(2)) == (lam * lam).scaled(Rational(4)) - LambdaPoly(1));
  CHECK(p.compose(lam + LambdaPoly(1)) == lam * lam + lam.scaled(Rational(2)));
}

TEST_CASE("xpoly evaluation") {
  // x^2 + (1 - lambda) x
  const XPoly p = x_var() * x_var() + x_var() * XPoly(lambda_linear(Rational(1), Rational(-1)));
  CHECK(xpoly_eval(p, Rational(1), Rational(1, 2)) == Rational(3, 2));
  CHECK(xpoly_at_lambda(p, Rational(0)) == x_var() * x_var() + x_var());
  CHECK(xpoly_derivative(p) == x_var().scaled(Rational(2)) + XPoly(lambda_linear(Rational(1), Rational(-1))));
  CHECK(xpoly_derivative(xpoly_antiderivative(p)) == p);
}

TEST_CASE("polynomial ring axioms on random inputs") {
  std::mt19937 rng(20261015);
  for (int trial = 0; trial < 60; ++trial) {
    const XPoly a = random_xpoly(rng);
    const XPoly b = random_xpoly(rng);
    const XPoly c = random_xpoly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == XPoly());
    CHECK(a * XPoly(1) == a);
    const Rational x0 = random_rational(rng);
    const Rational l0 = random_rational(rng);
    CHECK(xpoly_eval(a * b, x0, l0) == xpoly_eval(a, x0, l0) * xpoly_eval(b, x0, l0));
    CHECK(xpoly_eval(a + b, x0, l0) == xpoly_eval(a, x0, l0) + xpoly_eval(b, x0, l0));
  }
}

TEST_CASE("text renderings") {
  const LambdaPoly s3(std::vector<Rational>{Rational(5), Rational(-6), Rational(2)});
  CHECK(to_ascii(s3) == "5-6*lambda+2*lambda^2");
  CHECK(to_pretty(s3) == "2λ²−6λ+5");
  CHECK(to_pretty(LambdaPoly(std::vector<Rational>{Rational(2), Rational(-1)})) == "−λ+2");
  CHECK(to_list(s3) == "[5,-6,2]");
  CHECK(to_ascii(LambdaPoly()) == "0");
  CHECK(to_ascii(LambdaPoly(Rational(-1, 2))) == "-1/2");
  CHECK(superscript(12) == "¹²");
  const XPoly bell2 = x_var() * x_var() + x_var() * XPoly(lambda_linear(Rational(1), Rational(-1)));
  CHECK(to_list(bell2) == "[[],[1,-1],[1]]");
  CHECK(to_pretty(bell2) == "x² + (−λ+1)x");
}

TEST_CASE("text parsers round-trip and reject malformed input") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const LambdaPoly p = random_lambda_poly(rng);
    CHECK(parse_lambda_ascii(to_ascii(p)) == p);
    CHECK(parse_lambda_list(to_list(p)) == p);
    const XPoly q = random_xpoly(rng);
    CHECK(parse_xpoly_list(to_list(q)) == q);
  }
  CHECK(parse_lambda_ascii("2*lambda^2 - 6*lambda + 5") == parse_lambda_list("[5,-6,2]"));
  CHECK(parse_lambda_ascii("lambda") == lambda_var());
  CHECK(parse_lambda_ascii("-lambda^1") == -lambda_var());
  for (const char* bad : {"", "5-", "lambda^", "2*x", "1/0", "5--6", "0.5"}) {
    CHECK_THROWS_AS((void)parse_lambda_ascii(bad), ParseError);
  }
  for (const char* bad : {"[1,0]", "[1,2", "1,2]", "[a]"}) {
    CHECK_THROWS_AS((void)parse_lambda_list(bad), ParseError);
  }
  CHECK_THROWS_AS((void)parse_xpoly_list("[[1],[]]"), ParseError);
}
