#include "degbell/polynomial.hpp"

namespace degbell {

Rational xpoly_eval(const XPoly& p, const Rational& x0, const Rational& lam) {
  Rational acc;
  const auto coeffs = p.coeffs();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * x0 + lambda_poly_eval(*it, lam);
  }
  return acc;
}

XPoly xpoly_at_lambda(const XPoly& p, const Rational& lam) {
  std::vector<LambdaPoly> out;
  out.reserve(p.size());
  for (const auto& c : p.coeffs()) {
    out.emplace_back(lambda_poly_eval(c, lam));
  }
  return XPoly(std::move(out));
}

}  // namespace degbell
