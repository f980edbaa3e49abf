#include "degbell/operator_calculus.hpp"

#include <algorithm>
#include <stdexcept>

#include "degbell/text.hpp"

namespace degbell {

namespace {

void normalize_exp(ExpTerm& term) {
  if (term.exp_coeff.is_zero()) {
    term.exp_power = 1;
  }
}

std::string render_exponent(int m, int k) {
  if (k == 0) {
    return std::to_string(m);
  }
  std::string out = m == 0 ? std::string() : std::to_string(m);
  const int magnitude = k < 0 ? -k : k;
  if (k < 0) {
    out += "-";
  } else if (m != 0) {
    out += "+";
  }
  if (magnitude != 1) {
    out += std::to_string(magnitude) + "·";
  }
  return out + "λ";
}

}  // namespace

ExpExpr::ExpExpr(std::vector<ExpTerm> terms) {
  for (auto& t : terms) {
    if (t.exp_power < 1) {
      throw std::invalid_argument("exponential power must be >= 1");
    }
    normalize_exp(t);
  }
  std::sort(terms.begin(), terms.end(),
            [](const ExpTerm& a, const ExpTerm& b) { return a.merge_key() < b.merge_key(); });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().merge_key() == t.merge_key()) {
      terms_.back().coeff += t.coeff;
    } else {
      terms_.push_back(std::move(t));
    }
  }
  std::erase_if(terms_, [](const ExpTerm& t) { return t.coeff.is_zero(); });
}

ExpExpr ExpExpr::exponential(const Rational& a, int p) {
  return ExpExpr({ExpTerm{LambdaPoly(1), 0, 0, a, p}});
}

ExpExpr ExpExpr::power(int m, int k, LambdaPoly c) {
  return ExpExpr({ExpTerm{std::move(c), m, k, Rational(), 1}});
}

ExpExpr ExpExpr::from_xpoly(const XPoly& p, int lam_shift, const Rational& a, int exp_power) {
  std::vector<ExpTerm> terms;
  for (std::size_t j = 0; j < p.size(); ++j) {
    terms.push_back(ExpTerm{p.coeffs()[j], static_cast<int>(j), lam_shift, a, exp_power});
  }
  return ExpExpr(std::move(terms));
}

ExpExpr ExpExpr::scaled(const LambdaPoly& c) const {
  std::vector<ExpTerm> out = terms_;
  for (auto& t : out) {
    t.coeff = t.coeff * c;
  }
  return ExpExpr(std::move(out));
}

ExpExpr ExpExpr::shifted(int m, int k) const {
  std::vector<ExpTerm> out = terms_;
  for (auto& t : out) {
    t.x_int += m;
    t.x_lam += k;
  }
  return ExpExpr(std::move(out));
}

ExpExpr operator*(const ExpExpr& lhs, const ExpExpr& rhs) {
  std::vector<ExpTerm> out;
  out.reserve(lhs.terms_.size() * rhs.terms_.size());
  for (const auto& a : lhs.terms_) {
    for (const auto& b : rhs.terms_) {
      ExpTerm t{a.coeff * b.coeff, a.x_int + b.x_int, a.x_lam + b.x_lam, a.exp_coeff + b.exp_coeff, a.exp_power};
      if (a.exp_coeff.is_zero()) {
        t.exp_power = b.exp_power;
      } else if (!b.exp_coeff.is_zero() && a.exp_power != b.exp_power) {
        throw std::domain_error("product of exponentials with different powers is outside the class");
      }
      out.push_back(std::move(t));
    }
  }
  return ExpExpr(std::move(out));
}

ExpExpr operator+(const ExpExpr& lhs, const ExpExpr& rhs) {
  std::vector<ExpTerm> out = lhs.terms_;
  out.insert(out.end(), rhs.terms_.begin(), rhs.terms_.end());
  return ExpExpr(std::move(out));
}

ExpExpr operator-(const ExpExpr& lhs, const ExpExpr& rhs) { return lhs + rhs.scaled(LambdaPoly(-1)); }

std::string render(const ExpExpr& e) {
  if (e.is_zero()) {
    return "0";
  }
  std::string out;
  for (const auto& t : e.terms()) {
    if (!out.empty()) {
      out += " + ";
    }
    out += "(" + to_pretty(t.coeff) + ") * x^(" + render_exponent(t.x_int, t.x_lam) + ")";
    if (!t.exp_coeff.is_zero()) {
      out += " * exp(" + t.exp_coeff.str() + "·x^" + std::to_string(t.exp_power) + ")";
    }
  }
  return out;
}

ExpExpr op_apply(const ExpExpr& e) {
  std::vector<ExpTerm> out;
  out.reserve(2 * e.terms().size());
  for (const auto& t : e.terms()) {
    // d/dx of x^(m + k lambda) contributes (m + k lambda) x^(m - 1 + k lambda);
    // the factor x^(1 - lambda) brings it to x^(m + (k - 1) lambda).
    LambdaPoly power_factor = t.coeff * lambda_linear(Rational(t.x_int), Rational(t.x_lam));
    out.push_back(ExpTerm{std::move(power_factor), t.x_int, t.x_lam - 1, t.exp_coeff, t.exp_power});
    if (!t.exp_coeff.is_zero()) {
      out.push_back(ExpTerm{t.coeff.scaled(t.exp_coeff * Rational(t.exp_power)), t.x_int + t.exp_power,
                            t.x_lam - 1, t.exp_coeff, t.exp_power});
    }
  }
  return ExpExpr(std::move(out));
}

ExpExpr op_power(const ExpExpr& e, int n) {
  if (n < 0) {
    throw std::invalid_argument("op_power: negative exponent");
  }
  ExpExpr out = e;
  for (int i = 0; i < n; ++i) {
    out = op_apply(out);
  }
  return out;
}

ExpExpr plain_derivative(const ExpExpr& e) {
  std::vector<ExpTerm> out;
  out.reserve(2 * e.terms().size());
  for (const auto& t : e.terms()) {
    out.push_back(ExpTerm{t.coeff * lambda_linear(Rational(t.x_int), Rational(t.x_lam)), t.x_int - 1, t.x_lam,
                          t.exp_coeff, t.exp_power});
    if (!t.exp_coeff.is_zero()) {
      out.push_back(ExpTerm{t.coeff.scaled(t.exp_coeff * Rational(t.exp_power)), t.x_int + t.exp_power - 1,
                            t.x_lam, t.exp_coeff, t.exp_power});
    }
  }
  return ExpExpr(std::move(out));
}

ExpExpr theorem3_rhs(int n, const Rational& scale, const NumberTables& tables) {
  if (n < 0) {
    throw std::invalid_argument("theorem3_rhs: negative n");
  }
  if (scale.is_zero()) {
    throw std::invalid_argument("degenerate exponential argument");
  }
  std::vector<ExpTerm> terms;
  for (int k = 0; k <= n; ++k) {
    terms.push_back(ExpTerm{tables.stirling2(n, k).scaled(scale.pow(k)), k, -n, scale, 1});
  }
  return ExpExpr(std::move(terms));
}

ExpExpr theorem3_rhs(int n, const Rational& scale) { return theorem3_rhs(n, scale, *shared_tables(n)); }

ExpExpr prop10_rhs(int n, const Rational& a, int p, const NumberTables& tables) {
  if (n < 0) {
    throw std::invalid_argument("prop10_rhs: negative n");
  }
  if (p < 1) {
    throw std::invalid_argument("prop10_rhs: power p must be >= 1");
  }
  if (a.is_zero()) {
    throw std::invalid_argument("degenerate exponential argument");
  }
  const Rational inv_p(1, p);
  const Rational p_to_n = Rational(p).pow(n);
  std::vector<ExpTerm> terms;
  for (int k = 0; k <= n; ++k) {
    LambdaPoly c = lambda_scale(tables.stirling2(n, k), inv_p).scaled(p_to_n * a.pow(k));
    terms.push_back(ExpTerm{std::move(c), p * k, -n, a, p});
  }
  return ExpExpr(std::move(terms));
}

ExpExpr prop10_rhs(int n, const Rational& a, int p) { return prop10_rhs(n, a, p, *shared_tables(n)); }

ExpExpr stirling_operator_expansion(const ExpExpr& f, int n, const NumberTables& tables) {
  if (n < 0) {
    throw std::invalid_argument("stirling_operator_expansion: negative n");
  }
  ExpExpr out;
  ExpExpr derivative = f;
  for (int k = 0; k <= n; ++k) {
    out = out + derivative.shifted(k, -n).scaled(tables.stirling2(n, k));
    derivative = plain_derivative(derivative);
  }
  return out;
}

ExpExpr theorem11_apply_monomial(int n, int r, const NumberTables& tables) {
  if (n < 0 || r < 0) {
    throw std::invalid_argument("theorem11_apply_monomial: negative argument");
  }
  std::vector<ExpTerm> terms;
  Rational falling(1);  // (r)_k
  for (int k = 0; k <= n; ++k) {
    // S2(n,k) (r)_k x^(r-k) * x^(k - n lambda)
    terms.push_back(ExpTerm{tables.stirling2(n, k).scaled(falling), (r - k) + k, -n, Rational(), 1});
    falling *= Rational(r - k);
  }
  return ExpExpr(std::move(terms));
}

ExpExpr theorem11_apply_monomial(int n, int r) { return theorem11_apply_monomial(n, r, *shared_tables(n)); }

EUnitScalar eval_at_x1_in_e_units(const ExpExpr& e) {
  EUnitScalar out;
  for (const auto& t : e.terms()) {
    if (!t.exp_coeff.is_one() || t.exp_power != 1) {
      throw std::domain_error("not a pure e^x expression");
    }
    out.coeff += t.coeff;
  }
  return out;
}

}  // namespace degbell
