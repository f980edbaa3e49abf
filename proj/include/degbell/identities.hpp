#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "degbell/numbers.hpp"

namespace degbell {

/// Catalog of verifiable identities, in report order.
enum class IdentityId {
  thm2,
  thm4,
  thm5,
  remark6a,
  remark6b,
  cor7,
  thm8,
  thm9,
  prop10,
  thm11_monomial,
  thm11_exp,
  thm12,
  thm12_x1,
  thm13,
  lemma1,
  eq17,
  eq23,
  eq29,
  eq34,
  eq39,
  eq43,
  eq56,
  eq57,
  eq58,
  eq59,
  eq60,
  eq61,
  eq12_vs_eq14,
  gf_log_roundtrip,
};

std::span<const IdentityId> identity_catalog();
std::string_view identity_name(IdentityId id);
std::optional<IdentityId> identity_from_name(std::string_view name);
/// True for identities whose sides are truncated series in t; these need
/// order >= n_max + 2.
bool is_series_identity(IdentityId id);

struct Counterexample {
  std::vector<std::string> params;  // e.g. {"n=3", "a=1/2"}
  std::string lhs;
  std::string rhs;
  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct VerifyReport {
  std::string identity;
  std::string grid;
  bool pass = true;
  std::optional<Counterexample> counterexample;  // present iff !pass
  friend bool operator==(const VerifyReport&, const VerifyReport&) = default;
};

/// Default series order for a grid: n_max + 6.
std::size_t default_series_order(int n_max);

/// Evaluates catalog identities over finite parameter grids. Both sides of
/// every identity are computed exactly (polynomials in x and lambda,
/// truncated series, or operator expressions) and compared structurally.
///
/// Grids for n_max = N: n, m in 0..N; a in {1, -1, 2, 1/2}; p in {1, 2, 3};
/// series identities use the given truncation order.
class IdentityHarness {
 public:
  /// Uses the process-wide tables.
  IdentityHarness() = default;
  /// Uses the given tables for every table-backed quantity (Stirling,
  /// bracket, Bernoulli and Bell values). Routes that recompute a quantity
  /// independently never read from the tables.
  explicit IdentityHarness(std::shared_ptr<const NumberTables> tables);

  /// Throws std::invalid_argument when n_max < 1, when a series identity gets
  /// order < n_max + 2, or when the tables are too small for the grid.
  [[nodiscard]] VerifyReport verify(IdentityId id, int n_max, std::size_t order) const;
  /// As above; unknown names throw std::invalid_argument.
  [[nodiscard]] VerifyReport verify(std::string_view id, int n_max, std::size_t order) const;

  /// Every catalog entry, in catalog order. Entries may run concurrently.
  [[nodiscard]] std::vector<VerifyReport> verify_all(int n_max, std::size_t order, bool concurrent = true) const;

  /// Rows of the tables needed for a grid of size n_max.
  static int required_rows(int n_max) { return 2 * n_max + 1; }

 private:
  [[nodiscard]] std::shared_ptr<const NumberTables> tables_for(int n_max) const;

  std::shared_ptr<const NumberTables> tables_;
};

VerifyReport verify(IdentityId id, int n_max, std::size_t order);
std::vector<VerifyReport> verify_all(int n_max, std::size_t order);

}  // namespace degbell
