#include "degbell/identities.hpp"

#include <array>
#include <future>
#include <stdexcept>
#include <utility>

#include "degbell/operator_calculus.hpp"
#include "degbell/series.hpp"
#include "degbell/text.hpp"

namespace degbell {

namespace {

struct CatalogEntry {
  IdentityId id;
  std::string_view name;
  bool series;
};

constexpr std::array kCatalog = {
    CatalogEntry{IdentityId::thm2, "thm2", false},
    CatalogEntry{IdentityId::thm4, "thm4", false},
    CatalogEntry{IdentityId::thm5, "thm5", false},
    CatalogEntry{IdentityId::remark6a, "remark6a", false},
    CatalogEntry{IdentityId::remark6b, "remark6b", false},
    CatalogEntry{IdentityId::cor7, "cor7", false},
    CatalogEntry{IdentityId::thm8, "thm8", false},
    CatalogEntry{IdentityId::thm9, "thm9", false},
    CatalogEntry{IdentityId::prop10, "prop10", false},
    CatalogEntry{IdentityId::thm11_monomial, "thm11-monomial", false},
    CatalogEntry{IdentityId::thm11_exp, "thm11-exp", false},
    CatalogEntry{IdentityId::thm12, "thm12", false},
    CatalogEntry{IdentityId::thm12_x1, "thm12-x1", false},
    CatalogEntry{IdentityId::thm13, "thm13", false},
    CatalogEntry{IdentityId::lemma1, "lemma1", true},
    CatalogEntry{IdentityId::eq17, "eq17", false},
    CatalogEntry{IdentityId::eq23, "eq23", false},
    CatalogEntry{IdentityId::eq29, "eq29", false},
    CatalogEntry{IdentityId::eq34, "eq34", false},
    CatalogEntry{IdentityId::eq39, "eq39", false},
    CatalogEntry{IdentityId::eq43, "eq43", false},
    CatalogEntry{IdentityId::eq56, "eq56", false},
    CatalogEntry{IdentityId::eq57, "eq57", true},
    CatalogEntry{IdentityId::eq58, "eq58", false},
    CatalogEntry{IdentityId::eq59, "eq59", true},
    CatalogEntry{IdentityId::eq60, "eq60", false},
    CatalogEntry{IdentityId::eq61, "eq61", false},
    CatalogEntry{IdentityId::eq12_vs_eq14, "eq12-vs-eq14", true},
    CatalogEntry{IdentityId::gf_log_roundtrip, "gf-log-roundtrip", true},
};

constexpr auto kIds = [] {
  std::array<IdentityId, kCatalog.size()> ids{};
  for (std::size_t i = 0; i < kCatalog.size(); ++i) {
    ids[i] = kCatalog[i].id;
  }
  return ids;
}();

const CatalogEntry& entry(IdentityId id) {
  for (const auto& e : kCatalog) {
    if (e.id == id) {
      return e;
    }
  }
  throw std::invalid_argument("identity id outside catalog");
}

// Polynomial in y over XPoly; only Bel(x + y) needs it.
using XYPoly = Polynomial<XPoly>;

const std::array<Rational, 4>& scale_grid() {
  static const std::array<Rational, 4> grid = {Rational(1), Rational(-1), Rational(2), Rational(1, 2)};
  return grid;
}
constexpr std::array<int, 3> kPowerGrid = {1, 2, 3};
constexpr std::string_view kScaleGridText = "a in {1,-1,2,1/2}";

std::string show(const LambdaPoly& p) { return to_list(p); }
std::string show(const XPoly& p) { return to_list(p); }
std::string show(const ExpExpr& e) { return render(e); }
std::string show(const EUnitScalar& s) { return to_list(s.coeff) + "*e"; }
std::string show(const Series& s) {
  std::string out = "[";
  for (std::size_t n = 0; n <= s.order(); ++n) {
    out += (n == 0 ? "" : ",") + to_list(s[n]);
  }
  return out + "]";
}
std::string show(const XYPoly& p) {
  std::string out = "[";
  for (std::size_t j = 0; j < p.size(); ++j) {
    out += (j == 0 ? "" : ",") + to_list(p.coeffs()[j]);
  }
  return out + "]";
}

std::string param(std::string_view name, long value) { return std::string(name) + "=" + std::to_string(value); }
std::string param(std::string_view name, const Rational& value) { return std::string(name) + "=" + value.str(); }

// Records the first mismatch; later comparisons are skipped.
class Outcome {
 public:
  template <class T>
  bool equal(std::vector<std::string> params, const T& lhs, const T& rhs) {
    if (failure_) {
      return false;
    }
    if (lhs == rhs) {
      return true;
    }
    failure_ = Counterexample{std::move(params), show(lhs), show(rhs)};
    return false;
  }

  [[nodiscard]] bool failed() const { return failure_.has_value(); }

  VerifyReport report(IdentityId id, std::string grid) && {
    VerifyReport r;
    r.identity = std::string(entry(id).name);
    r.grid = std::move(grid);
    r.pass = !failure_;
    r.counterexample = std::move(failure_);
    return r;
  }

 private:
  std::optional<Counterexample> failure_;
};

// Everything a check needs: the tables, the grid bound and series order.
struct Context {
  const NumberTables& tables;
  int n_max;
  std::size_t order;

  [[nodiscard]] const XPoly& bell(int n) const { return tables.bell(n); }
  [[nodiscard]] LambdaPoly bell_at_1(int n) const { return tables.bell(n)(LambdaPoly(1)); }
  [[nodiscard]] const LambdaPoly& s2(int n, int k) const { return tables.stirling2(n, k); }
};

LambdaPoly one_falling(int n) { return degenerate_falling_value(LambdaPoly(1), n); }

XPoly times_x(const XPoly& p) { return p * x_var(); }

XPoly lam_const(const LambdaPoly& c) { return XPoly(c); }

Series e_lambda_minus_one(std::size_t order) {
  return e_lambda_series(XPoly(1), order) - Series::constant(XPoly(1), order);
}

// ---- recurrences and derivative identities ---------------------------------

std::string grid_n(int lo, int hi) { return "n=" + std::to_string(lo) + ".." + std::to_string(hi); }

VerifyReport check_thm2(const Context& c) {
  Outcome out;
  for (int n = 0; n <= c.n_max && !out.failed(); ++n) {
    LambdaPoly rhs;
    for (int m = 0; m <= n; ++m) {
      rhs += (c.bell_at_1(m) * one_falling(n - m + 1)).scaled(binomial(n, m));
    }
    out.equal({param("n", n)}, c.bell_at_1(n + 1), rhs);
  }
  return std::move(out).report(IdentityId::thm2, grid_n(0, c.n_max));
}

VerifyReport check_thm4(const Context& c) {
  Outcome out;
  for (int n = 0; n <= c.n_max && !out.failed(); ++n) {
    const XPoly& bel = c.bell(n);
    const XPoly rhs = times_x(bel.derivative() + bel) - bel * lam_const(lambda_linear(0, Rational(n)));
    out.equal({param("n", n)}, c.bell(n + 1), rhs);
  }
  return std::move(out).report(IdentityId::thm4, grid_n(0, c.n_max));
}

VerifyReport check_thm5(const Context& c) {
  Outcome out;
  for (int n = 0; n <= c.n_max && !out.failed(); ++n) {
    XPoly sum;
    for (int m = 0; m <= n; ++m) {
      sum += (c.bell(m) * lam_const(one_falling(n - m + 1))).scaled(binomial(n, m));
    }
    out.equal({param("n", n)}, c.bell(n + 1), times_x(sum));
  }
  return std::move(out).report(IdentityId::thm5, grid_n(0, c.n_max));
}

VerifyReport check_remark6a(const Context& c) {
  Outcome out;
  for (int n = 0; n <= c.n_max && !out.failed(); ++n) {
    XPoly sum;
    for (int m = 0; m <= n; ++m) {
      const LambdaPoly factor = one_falling(n - m) * lambda_linear(1, Rational(-(n - m)));
      sum += (c.bell(m) * lam_const(factor)).scaled(binomial(n, m));
    }
    out.equal({param("n", n)}, c.bell(n + 1), times_x(sum));
  }
  return std::move(out).report(IdentityId::remark6a, grid_n(0, c.n_max));
}

VerifyReport check_remark6b(const Context& c) {
  Outcome out;
  for (int n = 0; n <= c.n_max && !out.failed(); ++n) {
    XPoly sum;
    for (int m = 0; m <= n; ++m) {
      sum += (c.bell(m) * lam_const(one_falling(n - m))).scaled(binomial(n, m) * Rational(n - m));
    }
    out.equal({param("n", n)}, c.bell(n).scaled(Rational(n)), times_x(sum));
  }
  return std::move(out).report(IdentityId::remark6b, grid_n(0, c.n_max));
}

VerifyReport check_cor7(const Context& c) {
  Outcome out;
  for (int n = 1; n <= c.n_max && !out.failed(); ++n) {
    XPoly sum;
    for (int m = 0; m < n; ++m) {
      sum += (c.bell(m) * lam_const(one_falling(n + 1 - m))).scaled(binomial(n, m));
    }
    const XPoly rhs = times_x(sum) + c.bell(n) * lam_const(lambda_linear(0, Rational(n)));
    out.equal({param("n", n)}, times_x(c.bell(n).derivative()), rhs);
  }
  return std::move(out).report(IdentityId::cor7, grid_n(1, c.n_max));
}

VerifyReport check_eq29(const Context& c) {
  Outcome out;
  for (int n = 1; n <= c.n_max && !out.failed(); ++n) {
    XPoly sum;
    for (int m = 0; m < n; ++m) {
      sum += (c.bell(m) * lam_const(one_falling(n - m))).scaled(binomial(n, m));
    }
    out.equal({param("n", n)}, xpoly_derivative(c.bell(n)), sum);
  }
  return std::move(out).report(IdentityId::eq29, grid_n(1, c.n_max));
}

// Bel_n(x + y) = sum_l C(n,l) Bel_l(x) Bel_{n-l}(y), in a bivariate normal form.
VerifyReport check_thm8(const Context& c) {
  const XYPoly x_plus_y(std::vector<XPoly>{x_var(), XPoly(1)});
  Outcome out;
  for (int n = 0; n <= c.n_max && !out.failed(); ++n) {
    XYPoly lhs;
    const auto coeffs = c.bell(n).coeffs();
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
      lhs = lhs * x_plus_y + XYPoly(XPoly(*it));
    }
    XYPoly rhs;
    for (int l = 0; l <= n; ++l) {
      const XPoly bel_x = c.bell(l).scaled(binomial(n, l));
      std::vector<XPoly> by_y;
      for (const auto& coeff : c.bell(n - l).coeffs()) {
        by_y.push_back(bel_x * XPoly(coeff));
      }
      rhs += XYPoly(std::move(by_y));
    }
    out.equal({param("n", n)}, lhs, rhs);
  }
  return std::move(out).report(IdentityId::thm8, grid_n(0, c.n_max));
}

VerifyReport check_thm9(const Context& c) {
  Outcome out;
  for (int n = 0; n <= c.n_max && !out.failed(); ++n) {
    XPoly sum;
    for (int k = 1; k <= n + 1; ++k) {
      sum += (c.bell(k) * lam_const(c.tables.bernoulli(n + 1 - k))).scaled(binomial(n + 1, k));
    }
    out.equal({param("n", n)}, xpoly_antiderivative(c.bell(n)), sum.scaled(Rational(1, n + 1)));
  }
  return std::move(out).report(IdentityId::thm9, grid_n(0, c.n_max));
}

// ---- operator identities ----------------------------------------------------

VerifyReport check_eq17(const Context& c) {
  Outcome out;
  for (const auto& a : scale_grid()) {
    ExpExpr lhs = ExpExpr::exponential(a);
    for (int n = 0; n <= c.n_max && !out.failed(); ++n) {
      out.equal({param("n", n), param("a", a)}, lhs, theorem3_rhs(n, a, c.tables));
      lhs = op_apply(lhs);
    }
  }
  return std::move(out).report(IdentityId::eq17, grid_n(0, c.n_max) + ", " + std::string(kScaleGridText));
}

VerifyReport check_prop10(const Context& c) {
  Outcome out;
  for (int p : kPowerGrid) {
    for (const auto& a : scale_grid()) {
      ExpExpr lhs = ExpExpr::exponential(a, p);
      for (int n = 0; n <= c.n_max && !out.failed(); ++n) {
        out.equal({param("n", n), param("a", a), param("p", p)}, lhs, prop10_rhs(n, a, p, c.tables));
        lhs = op_apply(lhs);
      }
    }
  }
  return std::move(out).report(IdentityId::prop10,
                               grid_n(0, c.n_max) + ", " + std::string(kScaleGridText) + ", p in {1,2,3}");
}

VerifyReport check_thm11_monomial(const Context& c) {
  Outcome out;
  for (int r = 0; r <= c.n_max; ++r) {
    ExpExpr lhs = ExpExpr::power(r);
    for (int n = 0; n <= c.n_max && !out.failed(); ++n) {
      out.equal({param("n", n), param("r", r)}, lhs, theorem11_apply_monomial(n, r, c.tables));
      lhs = op_apply(lhs);
    }
  }
  return std::move(out).report(IdentityId::thm11_monomial, grid_n(0, c.n_max) + ", r=0.." + std::to_string(c.n_max));
}

VerifyReport check_thm11_exp(const Context& c) {
  Outcome out;
  for (int p : kPowerGrid) {
    for (const auto& a : scale_grid()) {
      const ExpExpr f = ExpExpr::exponential(a, p);
      ExpExpr lhs = f;
      for (int n = 0; n <= c.n_max && !out.failed(); ++n) {
        out.equal({param("n", n), param("a", a), param("p", p)}, lhs, stirling_operator_expansion(f, n, c.tables));
        lhs = op_apply(lhs);
      }
    }
  }
  return std::move(out).report(IdentityId::thm11_exp, "f=exp(a*x^p), " + grid_n(0, c.n_max) + ", " +
                                                          std::string(kScaleGridText) + ", p in {1,2,3}");
}

VerifyReport check_eq23(const Context& c) {
  Outcome out;
  ExpExpr power = ExpExpr::exponential(Rational(1));
  for (int n = 0; n <= c.n_max && !out.failed(); ++n) {
    out.equal({param("n", n)}, eval_at_x1_in_e_units(power), EUnitScalar{c.bell_at_1(n)});
    power = op_apply(power);
  }
  return std::move(out).report(IdentityId::eq23, grid_n(0, c.n_max));
}

VerifyReport check_eq34(const Context& c) {
  Outcome out;
  const Rational one(1);
  for (int n = 0; n <= c.n_max && !out.failed(); ++n) {
    const ExpExpr lhs = op_apply(ExpExpr::from_xpoly(c.bell(n), -n, one));
    out.equal({param("n", n)}, lhs, ExpExpr::from_xpoly(c.bell(n + 1), -(n + 1), one));
  }
  return std::move(out).report(IdentityId::eq34, grid_n(0, c.n_max));
}

// ---- mixed identities ---------------------------------------------------------

// (j)_{m+n-k,lambda} / (j)_{m,lambda} as the telescoped product
// prod_{i=m}^{m+n-k-1} (j - i lambda).
LambdaPoly falling_quotient(int j, int m, int len) {
  LambdaPoly out(1);
  for (int i = m; i < m + len; ++i) {
    out = out * lambda_linear(Rational(j), Rational(-i));
  }
  return out;
}

VerifyReport check_thm12(const Context& c) {
  Outcome out;
  for (int m = 0; m <= c.n_max && !out.failed(); ++m) {
    for (int n = 0; n <= c.n_max && !out.failed(); ++n) {
      XPoly rhs;
      for (int k = 0; k <= n; ++k) {
        std::vector<LambdaPoly> inner(static_cast<std::size_t>(m) + 1);
        for (int j = 0; j <= m; ++j) {
          inner[static_cast<std::size_t>(j)] = c.s2(m, j) * falling_quotient(j, m, n - k);
        }
        rhs += (c.bell(k) * XPoly(std::move(inner))).scaled(binomial(n, k));
      }
      out.equal({param("m", m), param("n", n)}, c.bell(n + m), rhs);
    }
  }
  return std::move(out).report(IdentityId::thm12, "m=0.." + std::to_string(c.n_max) + ", " + grid_n(0, c.n_max));
}

// x = 1 specialization, reading the printed S_{2,j}(m,j) as S_{2,lambda}(m,j).
VerifyReport check_thm12_x1(const Context& c) {
  Outcome out;
  for (int m = 0; m <= c.n_max && !out.failed(); ++m) {
    for (int n = 0; n <= c.n_max && !out.failed(); ++n) {
      LambdaPoly rhs;
      for (int k = 0; k <= n; ++k) {
        LambdaPoly inner;
        for (int j = 0; j <= m; ++j) {
          inner += c.s2(m, j) * falling_quotient(j, m, n - k);
        }
        rhs += (c.bell_at_1(k) * inner).scaled(binomial(n, k));
      }
      out.equal({param("m", m), param("n", n)}, c.bell_at_1(n + m), rhs);
    }
  }
  return std::move(out).report(IdentityId::thm12_x1, "m=0.." + std::to_string(c.n_max) + ", " + grid_n(0, c.n_max));
}

VerifyReport check_thm13(const Context& c) {
  Outcome out;
  std::vector<XPoly> bell_neg;  // Bel_i(-x)
  for (int i = 0; i <= c.n_max; ++i) {
    bell_neg.push_back(c.bell(i).substitute_scaled(LambdaPoly(-1)));
  }
  for (int m = 0; m <= c.n_max && !out.failed(); ++m) {
    // inner(r) = sum_j C(r,j) (m lambda)_{j,lambda} Bel_{r-j}(-x), r = n - k
    std::vector<XPoly> inner;
    const LambdaPoly m_lambda = lambda_linear(0, Rational(m));
    for (int r = 0; r <= c.n_max; ++r) {
      XPoly acc;
      for (int j = 0; j <= r; ++j) {
        acc += (bell_neg[static_cast<std::size_t>(r - j)] * XPoly(degenerate_falling_value(m_lambda, j)))
                   .scaled(binomial(r, j));
      }
      inner.push_back(std::move(acc));
    }
    for (int n = 0; n <= c.n_max && !out.failed(); ++n) {
      std::vector<LambdaPoly> lhs(static_cast<std::size_t>(m) + 1);
      for (int k = 0; k <= m; ++k) {
        lhs[static_cast<std::size_t>(k)] = c.s2(m, k) * degenerate_falling_value(LambdaPoly(k), n);
      }
      XPoly rhs;
      for (int k = 0; k <= n; ++k) {
        rhs += (c.bell(m + k) * inner[static_cast<std::size_t>(n - k)]).scaled(binomial(n, k));
      }
      out.equal({param("m", m), param("n", n)}, XPoly(std::move(lhs)), rhs);
    }
  }
  return std::move(out).report(IdentityId::thm13, "m=0.." + std::to_string(c.n_max) + ", " + grid_n(0, c.n_max));
}

// ---- number-family identities ---------------------------------------------

VerifyReport check_eq39(const Context& c) {
  Outcome out;
  for (int n = 0; n <= c.n_max && !out.failed(); ++n) {
    for (int k = 0; k <= c.n_max && !out.failed(); ++k) {
      out.equal({param("n", n), param("k", k)}, stirling2_alt_sum(n, k), c.s2(n, k));
    }
  }
  return std::move(out).report(IdentityId::eq39, grid_n(0, c.n_max) + ", k=0.." + std::to_string(c.n_max));
}

VerifyReport check_eq43(const Context& c) {
  Outcome out;
  for (int n = 0; n <= c.n_max && !out.failed(); ++n) {
    const auto by_basis = basis_expand(falling_deg(n), FactorialBasis::falling_classical);
    for (int k = 0; k <= n && !out.failed(); ++k) {
      out.equal({param("n", n), param("k", k), "route=basis"}, c.s2(n, k), by_basis[static_cast<std::size_t>(k)]);
    }
    if (n == c.n_max) {
      break;
    }
    for (int k = 0; k <= n + 1 && !out.failed(); ++k) {
      const LambdaPoly rhs = c.s2(n, k - 1) + lambda_linear(Rational(k), Rational(-n)) * c.s2(n, k);
      out.equal({param("n", n + 1), param("k", k), "route=recurrence"}, c.s2(n + 1, k), rhs);
    }
  }
  return std::move(out).report(IdentityId::eq43, grid_n(0, c.n_max));
}

VerifyReport check_eq56(const Context& c) {
  Outcome out;
  for (int n = 0; n <= c.n_max && !out.failed(); ++n) {
    const auto by_basis = basis_expand(rising_classical(n), FactorialBasis::rising_degenerate);
    for (int k = 0; k <= n && !out.failed(); ++k) {
      out.equal({param("n", n), param("k", k)}, c.tables.bracket(n, k), by_basis[static_cast<std::size_t>(k)]);
    }
  }
  return std::move(out).report(IdentityId::eq56, grid_n(0, c.n_max));
}

VerifyReport check_eq58(const Context& c) {
  Outcome out;
  for (int n = 0; n <= c.n_max && !out.failed(); ++n) {
    XPoly rhs;
    for (int k = 0; k <= n; ++k) {
      const LambdaPoly& s1 = c.tables.stirling1(n, k);
      rhs += rising_deg(k) * XPoly((n - k) % 2 == 0 ? s1 : -s1);
    }
    out.equal({param("n", n)}, rising_classical(n), rhs);
  }
  return std::move(out).report(IdentityId::eq58, grid_n(0, c.n_max));
}

VerifyReport check_eq60(const Context& c) {
  Outcome out;
  for (int n = 0; n <= c.n_max && !out.failed(); ++n) {
    XPoly rhs;
    for (int k = 0; k <= n; ++k) {
      const LambdaPoly& b = c.tables.bracket(n, k);
      rhs += c.bell(k) * XPoly((n - k) % 2 == 0 ? b : -b);
    }
    out.equal({param("n", n)}, XPoly::monomial(LambdaPoly(1), static_cast<std::size_t>(n)), rhs);
  }
  return std::move(out).report(IdentityId::eq60, grid_n(0, c.n_max));
}

VerifyReport check_eq61(const Context& c) {
  Outcome out;
  for (int n = 0; n < c.n_max && !out.failed(); ++n) {
    for (int k = 0; k <= n + 1 && !out.failed(); ++k) {
      const LambdaPoly rhs =
          c.tables.bracket(n, k - 1) + lambda_linear(Rational(n), Rational(-k)) * c.tables.bracket(n, k);
      out.equal({param("n", n), param("k", k)}, c.tables.bracket(n + 1, k), rhs);
    }
  }
  return std::move(out).report(IdentityId::eq61, grid_n(0, c.n_max - 1));
}

// ---- series identities --------------------------------------------------------

std::string grid_order(std::size_t order) { return "order=" + std::to_string(order); }

VerifyReport check_lemma1(const Context& c) {
  Outcome out;
  const Series e_lam = e_lambda_series(XPoly(1), c.order);
  const Series e_lam_minus_one = e_lambda_minus_one(c.order);
  for (const auto& a : scale_grid()) {
    // e^{a e_lambda(t)} = e^a e^{a (e_lambda(t) - 1)}; the constant e^a
    // multiplies both sides and is dropped.
    const Series generating = series_exp(e_lam_minus_one.scaled(a));
    const Series argument = e_lam.scaled(a);
    Series lhs = generating;
    for (int n = 0; n <= c.n_max && !out.failed(); ++n) {
      const std::size_t order = c.order - static_cast<std::size_t>(n);
      const Series rhs = binomial_power_series(lambda_var(), XPoly(-n), order) *
                         series_eval_poly(c.bell(n), argument) * generating;
      out.equal({param("n", n), param("a", a)}, lhs, rhs.truncated(order));
      if (n < c.n_max) {
        lhs = lhs.derivative();
      }
    }
  }
  return std::move(out).report(IdentityId::lemma1,
                               grid_n(0, c.n_max) + ", " + std::string(kScaleGridText) + ", " + grid_order(c.order));
}

VerifyReport check_eq12_vs_eq14(const Context& c) {
  Outcome out;
  const Series generating = series_exp(e_lambda_minus_one(c.order).times(x_var()));
  for (int n = 0; n <= c.n_max && !out.failed(); ++n) {
    out.equal({param("n", n)}, c.bell(n), generating[static_cast<std::size_t>(n)].scaled(factorial(n)));
  }
  return std::move(out).report(IdentityId::eq12_vs_eq14, grid_n(0, c.n_max) + ", " + grid_order(c.order));
}

VerifyReport check_eq57(const Context& c) {
  Outcome out;
  const Series lhs = binomial_power_series(LambdaPoly(-1), -x_var(), c.order);
  const Series log_one_minus_t = series_compose(log_lambda_series(c.order), Series::variable(c.order).scaled(-1));
  const Series rhs = series_compose(e_lambda_series(-x_var(), c.order), log_one_minus_t);
  out.equal({param("order", static_cast<long>(c.order))}, lhs, rhs);
  return std::move(out).report(IdentityId::eq57, grid_order(c.order));
}

VerifyReport check_eq59(const Context& c) {
  Outcome out;
  const Series bell_gf = series_exp(e_lambda_minus_one(c.order).times(x_var()));
  const Series lhs = series_compose(bell_gf, log_lambda_series(c.order));
  std::vector<XPoly> exp_xt;
  for (std::size_t n = 0; n <= c.order; ++n) {
    exp_xt.push_back(XPoly::monomial(LambdaPoly(factorial(static_cast<int>(n)).inverse()), n));
  }
  out.equal({param("order", static_cast<long>(c.order))}, lhs, Series(std::move(exp_xt)));
  return std::move(out).report(IdentityId::eq59, grid_order(c.order));
}

VerifyReport check_gf_log_roundtrip(const Context& c) {
  Outcome out;
  const Series log_series = log_lambda_series(c.order);
  const Series t = Series::variable(c.order);
  const Series one_plus_t = Series::constant(XPoly(1), c.order) + t;
  out.equal({"direction=exp(log)"}, series_compose(e_lambda_series(XPoly(1), c.order), log_series), one_plus_t);
  out.equal({"direction=log(exp)"}, series_compose(log_series, e_lambda_minus_one(c.order)), t);
  return std::move(out).report(IdentityId::gf_log_roundtrip, grid_order(c.order));
}

VerifyReport dispatch(IdentityId id, const Context& c) {
  switch (id) {
    case IdentityId::thm2:
      return check_thm2(c);
    case IdentityId::thm4:
      return check_thm4(c);
    case IdentityId::thm5:
      return check_thm5(c);
    case IdentityId::remark6a:
      return check_remark6a(c);
    case IdentityId::remark6b:
      return check_remark6b(c);
    case IdentityId::cor7:
      return check_cor7(c);
    case IdentityId::thm8:
      return check_thm8(c);
    case IdentityId::thm9:
      return check_thm9(c);
    case IdentityId::prop10:
      return check_prop10(c);
    case IdentityId::thm11_monomial:
      return check_thm11_monomial(c);
    case IdentityId::thm11_exp:
      return check_thm11_exp(c);
    case IdentityId::thm12:
      return check_thm12(c);
    case IdentityId::thm12_x1:
      return check_thm12_x1(c);
    case IdentityId::thm13:
      return check_thm13(c);
    case IdentityId::lemma1:
      return check_lemma1(c);
    case IdentityId::eq17:
      return check_eq17(c);
    case IdentityId::eq23:
      return check_eq23(c);
    case IdentityId::eq29:
      return check_eq29(c);
    case IdentityId::eq34:
      return check_eq34(c);
    case IdentityId::eq39:
      return check_eq39(c);
    case IdentityId::eq43:
      return check_eq43(c);
    case IdentityId::eq56:
      return check_eq56(c);
    case IdentityId::eq57:
      return check_eq57(c);
    case IdentityId::eq58:
      return check_eq58(c);
    case IdentityId::eq59:
      return check_eq59(c);
    case IdentityId::eq60:
      return check_eq60(c);
    case IdentityId::eq61:
      return check_eq61(c);
    case IdentityId::eq12_vs_eq14:
      return check_eq12_vs_eq14(c);
    case IdentityId::gf_log_roundtrip:
      return check_gf_log_roundtrip(c);
  }
  throw std::invalid_argument("identity id outside catalog");
}

}  // namespace

std::span<const IdentityId> identity_catalog() { return kIds; }

std::string_view identity_name(IdentityId id) { return entry(id).name; }

std::optional<IdentityId> identity_from_name(std::string_view name) {
  for (const auto& e : kCatalog) {
    if (e.name == name) {
      return e.id;
    }
  }
  return std::nullopt;
}

bool is_series_identity(IdentityId id) { return entry(id).series; }

std::size_t default_series_order(int n_max) { return static_cast<std::size_t>(n_max < 0 ? 0 : n_max) + 6; }

IdentityHarness::IdentityHarness(std::shared_ptr<const NumberTables> tables) : tables_(std::move(tables)) {}

std::shared_ptr<const NumberTables> IdentityHarness::tables_for(int n_max) const {
  if (!tables_) {
    return shared_tables(required_rows(n_max));
  }
  if (tables_->n_max() < required_rows(n_max)) {
    throw std::invalid_argument("tables cover rows 0.." + std::to_string(tables_->n_max()) + " but n_max=" +
                                std::to_string(n_max) + " needs 0.." + std::to_string(required_rows(n_max)));
  }
  return tables_;
}

VerifyReport IdentityHarness::verify(IdentityId id, int n_max, std::size_t order) const {
  if (n_max < 1) {
    throw std::invalid_argument("grid too small: n_max must be >= 1");
  }
  if (is_series_identity(id) && order < static_cast<std::size_t>(n_max) + 2) {
    throw std::invalid_argument("series order " + std::to_string(order) + " too small for n_max=" +
                                std::to_string(n_max) + " (need >= n_max + 2)");
  }
  const auto tables = tables_for(n_max);
  return dispatch(id, Context{*tables, n_max, order});
}

VerifyReport IdentityHarness::verify(std::string_view id, int n_max, std::size_t order) const {
  const auto parsed = identity_from_name(id);
  if (!parsed) {
    throw std::invalid_argument("unknown identity '" + std::string(id) + "'");
  }
  return verify(*parsed, n_max, order);
}

std::vector<VerifyReport> IdentityHarness::verify_all(int n_max, std::size_t order, bool concurrent) const {
  std::vector<VerifyReport> reports;
  reports.reserve(kIds.size());
  if (!concurrent) {
    for (IdentityId id : kIds) {
      reports.push_back(verify(id, n_max, order));
    }
    return reports;
  }
  // Validate and warm the shared tables before fanning out.
  (void)tables_for(n_max);
  std::vector<std::future<VerifyReport>> pending;
  pending.reserve(kIds.size());
  for (IdentityId id : kIds) {
    pending.push_back(std::async(std::launch::async, [this, id, n_max, order] { return verify(id, n_max, order); }));
  }
  for (auto& f : pending) {
    reports.push_back(f.get());
  }
  return reports;
}

VerifyReport verify(IdentityId id, int n_max, std::size_t order) { return IdentityHarness().verify(id, n_max, order); }

std::vector<VerifyReport> verify_all(int n_max, std::size_t order) {
  return IdentityHarness().verify_all(n_max, order);
}

}  // namespace degbell
