#pragma once

// Reference computations that share no code path with the library beyond
// Rational arithmetic.

#include <functional>
#include <vector>

#include "degbell/rational.hpp"

namespace oracle {

using degbell::Rational;

/// Number of set partitions of {0..n-1}, by enumerating restricted growth
/// strings. Calls visit(blocks) once per partition when given.
inline long set_partition_count(int n, const std::function<void(int)>& visit = {}) {
  if (n == 0) {
    if (visit) {
      visit(0);
    }
    return 1;
  }
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  long count = 0;
  std::function<void(int, int)> rec = [&](int i, int max_block) {
    if (i == n) {
      ++count;
      if (visit) {
        visit(max_block + 1);
      }
      return;
    }
    for (int b = 0; b <= max_block + 1; ++b) {
      a[static_cast<std::size_t>(i)] = b;
      rec(i + 1, b > max_block ? b : max_block);
    }
  };
  a[0] = 0;
  rec(1, 0);
  return count;
}

/// Classical Stirling numbers of the second kind by counting partitions with
/// k blocks.
inline std::vector<long> partitions_by_blocks(int n) {
  std::vector<long> out(static_cast<std::size_t>(n) + 1, 0);
  set_partition_count(n, [&](int blocks) { ++out[static_cast<std::size_t>(blocks)]; });
  return out;
}

/// Classical Bernoulli numbers B_0..B_n from t/(e^t - 1), inverting the
/// series (e^t - 1)/t = sum t^k/(k+1)! by long division.
inline std::vector<Rational> classical_bernoulli(int n) {
  std::vector<Rational> d(static_cast<std::size_t>(n) + 1);
  Rational fact(1);
  for (int k = 0; k <= n; ++k) {
    fact *= Rational(k + 1);
    d[static_cast<std::size_t>(k)] = fact.inverse();
  }
  std::vector<Rational> q(static_cast<std::size_t>(n) + 1);
  for (int m = 0; m <= n; ++m) {
    Rational acc = m == 0 ? Rational(1) : Rational(0);
    for (int j = 1; j <= m; ++j) {
      acc -= d[static_cast<std::size_t>(j)] * q[static_cast<std::size_t>(m - j)];
    }
    q[static_cast<std::size_t>(m)] = acc / d[0];
  }
  std::vector<Rational> out;
  Rational f(1);
  for (int m = 0; m <= n; ++m) {
    if (m > 0) {
      f *= Rational(m);
    }
    out.push_back(q[static_cast<std::size_t>(m)] * f);
  }
  return out;
}

/// (w)_{n,lam} at a numeric lambda.
inline Rational falling(const Rational& w, int n, const Rational& lam) {
  Rational out(1);
  for (int i = 0; i < n; ++i) {
    out *= w - Rational(i) * lam;
  }
  return out;
}

/// <w>_{n,lam} at a numeric lambda.
inline Rational rising(const Rational& w, int n, const Rational& lam) {
  Rational out(1);
  for (int i = 0; i < n; ++i) {
    out *= w + Rational(i) * lam;
  }
  return out;
}

/// Degenerate second-kind Stirling number at a numeric lambda, by solving
/// (x)_{n,lam} = sum_k S(n,k) (x)_k at x = 0..n (forward differences).
inline Rational stirling2_at(int n, int k, const Rational& lam) {
  if (k < 0 || k > n) {
    return Rational(0);
  }
  Rational sum(0);
  Rational kfact(1);
  for (int i = 2; i <= k; ++i) {
    kfact *= Rational(i);
  }
  for (int j = 0; j <= k; ++j) {
    Rational c = degbell::binomial(k, j) * falling(Rational(j), n, lam);
    sum += (k - j) % 2 == 0 ? c : -c;
  }
  return sum / kfact;
}

/// Degenerate first-kind Stirling table at a numeric lambda, from
/// (x)_{n+1} = (x)_n (x - n) and x (x)_{k,lam} = (x)_{k+1,lam} + k lam (x)_{k,lam}.
inline std::vector<std::vector<Rational>> stirling1_table_at(int n_max, const Rational& lam) {
  std::vector<std::vector<Rational>> s(static_cast<std::size_t>(n_max) + 1,
                                       std::vector<Rational>(static_cast<std::size_t>(n_max) + 1));
  s[0][0] = Rational(1);
  for (int n = 0; n < n_max; ++n) {
    for (int k = 0; k <= n + 1; ++k) {
      Rational v(0);
      if (k >= 1) {
        v += s[static_cast<std::size_t>(n)][static_cast<std::size_t>(k - 1)];
      }
      if (k <= n) {
        v += (Rational(k) * lam - Rational(n)) * s[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
      }
      s[static_cast<std::size_t>(n) + 1][static_cast<std::size_t>(k)] = v;
    }
  }
  return s;
}

/// Coefficients of log_lam(1+t) = ((1+t)^lam - 1)/lam at a numeric nonzero
/// lambda, from the generalized binomial series.
inline std::vector<Rational> log_lambda_at(int order, const Rational& lam) {
  std::vector<Rational> out(static_cast<std::size_t>(order) + 1);
  Rational binom(1);  // C(lam, n)
  for (int n = 1; n <= order; ++n) {
    binom *= (lam - Rational(n - 1)) / Rational(n);
    out[static_cast<std::size_t>(n)] = binom / lam;
  }
  return out;
}

/// Coefficients of exp(a t): a^n / n!.
inline std::vector<Rational> exp_scalar(const Rational& a, int order) {
  std::vector<Rational> out;
  Rational term(1);
  for (int n = 0; n <= order; ++n) {
    if (n > 0) {
      term *= a / Rational(n);
    }
    out.push_back(term);
  }
  return out;
}

}  // namespace oracle
