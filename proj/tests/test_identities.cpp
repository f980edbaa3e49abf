#include <doctest.h>

#include <set>
#include <stdexcept>

#include "degbell/identities.hpp"

using namespace degbell;

TEST_CASE("catalog has 29 distinct named entries") {
  const auto catalog = identity_catalog();
  CHECK(catalog.size() == 29);
  std::set<std::string_view> names;
  for (IdentityId id : catalog) {
    names.insert(identity_name(id));
    CHECK(identity_from_name(identity_name(id)) == id);
  }
  CHECK(names.size() == 29);
  CHECK(!identity_from_name("nosuch"));
  CHECK(identity_name(IdentityId::eq12_vs_eq14) == "eq12-vs-eq14");
  CHECK(is_series_identity(IdentityId::lemma1));
  CHECK(!is_series_identity(IdentityId::eq43));
  CHECK(default_series_order(10) == 16);
}

TEST_CASE("every identity passes on a small grid") {
  const IdentityHarness harness;
  for (IdentityId id : identity_catalog()) {
    const VerifyReport r = harness.verify(id, 5, default_series_order(5));
    INFO(r.identity);
    CHECK(r.pass);
    CHECK(!r.counterexample);
    CHECK(!r.grid.empty());
  }
}

TEST_CASE("verify_all is ordered and agrees with sequential runs") {
  const IdentityHarness harness;
  const auto concurrent = harness.verify_all(4, 8, true);
  const auto sequential = harness.verify_all(4, 8, false);
  CHECK(concurrent == sequential);
  REQUIRE(concurrent.size() == 29);
  for (std::size_t i = 0; i < concurrent.size(); ++i) {
    CHECK(concurrent[i].identity == identity_name(identity_catalog()[i]));
  }
}

TEST_CASE("zero/Stirling dichotomy at n_max 12") {
  CHECK(verify(IdentityId::eq39, 12, default_series_order(12)).pass);
}

TEST_CASE("argument validation") {
  const IdentityHarness harness;
  CHECK_THROWS_AS((void)harness.verify("nosuch", 3, 9), std::invalid_argument);
  CHECK_THROWS_AS((void)harness.verify(IdentityId::thm2, 0, 9), std::invalid_argument);
  CHECK_THROWS_AS((void)harness.verify(IdentityId::lemma1, 6, 7), std::invalid_argument);
  CHECK_NOTHROW((void)harness.verify(IdentityId::lemma1, 6, 8));
  CHECK_THROWS_AS((void)IdentityHarness(std::make_shared<const NumberTables>(3)).verify(IdentityId::eq43, 4, 10),
                  std::invalid_argument);
}

TEST_CASE("corrupted tables produce rendered counterexamples") {
  const int n_max = 6;
  const NumberTables clean(IdentityHarness::required_rows(n_max));
  auto bad = std::make_shared<const NumberTables>(clean.with_stirling2_entry(3, 2, clean.stirling2(3, 2) + LambdaPoly(1)));
  const IdentityHarness harness(bad);
  const VerifyReport eq43 = harness.verify(IdentityId::eq43, n_max, default_series_order(n_max));
  CHECK(!eq43.pass);
  REQUIRE(eq43.counterexample);
  CHECK(!eq43.counterexample->params.empty());
  CHECK(eq43.counterexample->lhs != eq43.counterexample->rhs);
  const VerifyReport thm12 = harness.verify(IdentityId::thm12, n_max, default_series_order(n_max));
  CHECK(!thm12.pass);
  REQUIRE(thm12.counterexample);
  const VerifyReport thm2 = harness.verify(IdentityId::thm2, n_max, default_series_order(n_max));
  CHECK(!thm2.pass);
}
