#include "bijlab/identities.hpp"

#include <gtest/gtest.h>

#include <set>

namespace bijlab {
namespace {

TEST(RegistryTest, HasNineteenIdentitiesWithUniqueIds) {
  const auto& all = registry();
  EXPECT_EQ(all.size(), 19U);
  std::set<std::string> ids;
  for (const auto& d : all) ids.insert(d.id);
  EXPECT_EQ(ids.size(), all.size());
  for (const char* id : {"SYM", "P1", "P2", "P5", "P7", "A8a", "A8b", "A8c", "A8d", "A8e", "A8f",
                         "A8g", "A8h", "A8i", "A8j", "A8k", "A8l", "A8m", "A8n"}) {
    EXPECT_TRUE(ids.contains(id)) << id;
  }
}

TEST(RegistryTest, OracleAttachment) {
  for (const char* id : {"SYM", "P1", "P2", "P5", "P7", "A8a", "A8b", "A8c", "A8d", "A8e", "A8f",
                         "A8g", "A8h", "A8j", "A8k"}) {
    const auto& d = find_identity(id);
    ASSERT_TRUE(d.oracle.has_value()) << id;
    EXPECT_FALSE(d.oracle->generic) << id;
  }
  for (const char* id : {"A8i", "A8l", "A8m", "A8n"}) {
    const auto& d = find_identity(id);
    ASSERT_TRUE(d.oracle.has_value()) << id;
    EXPECT_TRUE(d.oracle->generic) << id;
  }
  EXPECT_NE(find_identity("P7").oracle->kind.find("permutation enumeration"), std::string::npos);
}

TEST(RegistryTest, StatementsAndCorrections) {
  EXPECT_EQ(find_identity("A8n").statement, "sum_{k=0..n} C(2k,k)*C(2n-2k,n-k) = 4^n");
  EXPECT_EQ(find_identity("A8m").statement, "sum_{p=0..n} C(k+p,p) = C(k+n+1,n)");
  EXPECT_NE(find_identity("A8m").note.find("corrected from printed form"), std::string::npos);
  EXPECT_NE(find_identity("A8i").note.find("corrected from printed form"), std::string::npos);
  EXPECT_NE(find_identity("A8i").note.find("p^k"), std::string::npos);
  EXPECT_EQ(printed_forms().size(), 2U);
}

TEST(RegistryTest, UnknownIdListsAlternatives) {
  try {
    (void)find_identity("A8z");
    FAIL();
  } catch (const parameter_error& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("A8z"), std::string::npos);
    EXPECT_NE(msg.find("A8n"), std::string::npos);
  }
}

TEST(VerifyTest, Examples) {
  auto r = verify("P1", {{'n', 3}});
  EXPECT_EQ(r.lhs, ExactInt(8));
  EXPECT_EQ(r.rhs, ExactInt(8));
  ASSERT_TRUE(r.oracle);
  EXPECT_EQ(*r.oracle, ExactInt(8));
  EXPECT_EQ(r.verdict, Verdict::pass);

  r = verify("A8e", {{'n', 0}});
  EXPECT_EQ(r.lhs, ExactInt(1));
  EXPECT_EQ(r.rhs, ExactInt(1));
  EXPECT_EQ(r.verdict, Verdict::pass);

  r = verify("A8k", {{'n', 1}});
  EXPECT_EQ(r.lhs, ExactInt(4));
  EXPECT_EQ(r.rhs, ExactInt(4));
  EXPECT_EQ(*r.oracle, ExactInt(4));
  EXPECT_EQ(r.verdict, Verdict::pass);

  r = verify("A8e", {{'n', 5}});
  EXPECT_EQ(r.lhs, ExactInt(252));
  EXPECT_EQ(*r.oracle, ExactInt(252));
}

TEST(VerifyTest, ThreeWayIdentitiesReportAlternates) {
  const auto f = verify("A8f", {{'n', 7}, {'m', 2}, {'p', 3}});
  ASSERT_EQ(f.alternates.size(), 1U);
  // 7!/(2!3!2!) = 210
  EXPECT_EQ(f.lhs, ExactInt(210));
  EXPECT_EQ(f.alternates[0], ExactInt(210));
  EXPECT_EQ(f.verdict, Verdict::pass);

  const auto g = verify("A8g", {{'n', 6}, {'m', 4}, {'p', 1}});
  EXPECT_EQ(g.lhs, ExactInt(60));
  EXPECT_EQ(g.alternates.at(0), ExactInt(60));
  EXPECT_EQ(*g.oracle, ExactInt(60));
}

TEST(VerifyTest, DomainViolationNamesTheConstraint) {
  try {
    (void)verify("A8b", {{'n', 5}, {'m', 2}, {'p', 3}});
    FAIL();
  } catch (const parameter_error& e) {
    EXPECT_NE(std::string(e.what()).find("p <= m"), std::string::npos) << e.what();
  }
  EXPECT_THROW(verify("P7", {{'n', 0}}), parameter_error);
  EXPECT_THROW(verify("P1", {{'n', -1}}), parameter_error);
  EXPECT_THROW(verify("P1", {{'n', 2}, {'m', 1}}), parameter_error);
  EXPECT_THROW(verify("A8d", {{'n', 2}}), parameter_error);
}

TEST(VerifyTest, OracleSkippedOutsideItsSubdomain) {
  auto r = verify("A8e", {{'n', 12}});
  EXPECT_FALSE(r.oracle);
  EXPECT_EQ(r.verdict, Verdict::oracle_skipped);

  VerifyOptions tight;
  tight.budget.words = 100;
  r = verify("P1", {{'n', 10}}, tight);
  EXPECT_EQ(r.verdict, Verdict::oracle_skipped);
  EXPECT_EQ(r.lhs, ExactInt(1024));

  r = verify("A8l", {{'n', 4}});
  EXPECT_EQ(r.lhs, ExactInt(32));
  EXPECT_EQ(r.verdict, Verdict::pass);
}

TEST(VerifyTest, PrintedFormsFail) {
  auto i = verify("A8i-printed", {{'n', 2}, {'p', 2}, {'k', 0}});
  EXPECT_EQ(i.lhs, ExactInt(4));
  EXPECT_EQ(i.rhs, ExactInt(1));
  EXPECT_EQ(i.verdict, Verdict::fail);

  auto m = verify("A8m-printed", {{'k', 2}, {'n', 0}});
  EXPECT_EQ(m.lhs, ExactInt(2));
  EXPECT_EQ(m.rhs, ExactInt(1));
  EXPECT_EQ(m.verdict, Verdict::fail);

  // The printed A8m holds by accident at k = 1.
  EXPECT_EQ(verify("A8m-printed", {{'k', 1}, {'n', 0}}).verdict, Verdict::pass);
  EXPECT_EQ(verify("A8m", {{'k', 2}, {'n', 0}}).verdict, Verdict::pass);
  EXPECT_EQ(verify("A8i", {{'n', 2}, {'p', 2}}).verdict, Verdict::pass);
}

TEST(VerifyTest, ZeroToTheZeroCases) {
  // p = 1 makes every term but k = n vanish; the k = n term is C(n,n) * 0^0.
  for (std::int64_t n = 0; n <= 6; ++n) {
    EXPECT_EQ(verify("A8i", {{'n', n}, {'p', 1}}).verdict, Verdict::pass);
  }
  EXPECT_EQ(verify("P2", {{'n', 0}, {'p', 3}, {'m', 2}}).lhs, ExactInt(1));
}

TEST(SweepTest, Examples) {
  auto d = sweep("A8d", {{'n', {0, 6}}, {'m', {0, 6}}, {'p', {0, 6}}});
  EXPECT_EQ(d.results.size(), 343U);
  EXPECT_EQ(d.summary.pass, 343U);
  EXPECT_TRUE(d.all_passed());

  auto s = sweep("SYM", {{'n', {0, 12}}, {'k', {0, 12}}});
  EXPECT_EQ(s.results.size(), 91U);  // tuples with k <= n
  EXPECT_EQ(s.summary.pass, 91U);

  auto n = sweep("A8n", {{'n', {0, 10}}});
  EXPECT_EQ(n.summary.pass, 11U);
  EXPECT_EQ(n.summary.fail, 0U);
}

TEST(SweepTest, OrderIsLexicographicInParameterList) {
  auto s = sweep("A8b", {{'n', {0, 2}}, {'m', {0, 2}}, {'p', {0, 2}}});
  std::vector<std::string> order;
  for (const auto& r : s.results) order.push_back(r.params.to_string({'n', 'm', 'p'}));
  ASSERT_GE(order.size(), 3U);
  EXPECT_EQ(order[0], "n=0 m=0 p=0");
  EXPECT_EQ(order[1], "n=1 m=0 p=0");
  EXPECT_EQ(order[2], "n=1 m=1 p=0");
  EXPECT_EQ(order.back(), "n=2 m=2 p=2");
}

TEST(SweepTest, PrintedFormSweepReportsFailures) {
  auto s = sweep("A8m-printed", {{'n', {0, 3}}, {'k', {0, 3}}});
  EXPECT_FALSE(s.all_passed());
  EXPECT_GT(s.summary.fail, 0U);
}

TEST(SweepTest, MissingBoundsAreAnError) {
  EXPECT_THROW(sweep("A8d", {{'n', {0, 2}}}), parameter_error);
  EXPECT_THROW(sweep("A8e", {{'n', {3, 2}}}), parameter_error);
}

// Every identity passes at its lexicographically smallest in-domain tuple.
TEST(SweepTest, MinimalTuplePasses) {
  for (const auto& d : registry()) {
    SweepBounds bounds;
    for (char c : d.parameter_names) bounds[c] = {0, 3};
    const auto s = sweep(d, bounds);
    ASSERT_FALSE(s.results.empty()) << d.id;
    EXPECT_NE(s.results.front().verdict, Verdict::fail) << d.id;
  }
}

// --- oracle internals -----------------------------------------------------

TEST(OracleTest, LastDigitSplitMatchesPascalTerms) {
  for (std::int64_t n = 1; n <= 14; ++n) {
    for (std::int64_t p = 0; p <= n; ++p) {
      auto [ends0, ends1] = oracles::last_digit_split(n, p, {});
      EXPECT_EQ(ends0, binomial(n - 1, p));
      EXPECT_EQ(ends1, binomial(n - 1, p - 1));
    }
  }
}

TEST(OracleTest, VandermondeBucketSizes) {
  for (std::int64_t n = 0; n <= 6; ++n) {
    for (std::int64_t m = 0; m <= 6; ++m) {
      for (std::int64_t p = 0; p <= n + m; ++p) {
        const auto buckets = oracles::vandermonde_buckets(n, m, p, {});
        for (std::int64_t k = 0; k <= p; ++k) {
          EXPECT_EQ(buckets[static_cast<std::size_t>(k)], binomial(n, k) * binomial(m, p - k));
        }
      }
    }
  }
}

TEST(OracleTest, TernaryTwosCountedTwoWays) {
  for (std::int64_t n = 0; n <= 9; ++n) {
    for (std::int64_t m = 0; m <= n; ++m) {
      const auto buckets = oracles::ternary_twos_by_nonzero(n, m, {});
      ExactInt total{0};
      for (std::int64_t k = 0; k <= n; ++k) {
        EXPECT_EQ(buckets[static_cast<std::size_t>(k)], binomial(n, k) * binomial(k, m));
        total += buckets[static_cast<std::size_t>(k)];
      }
      EXPECT_EQ(total, count_by_frequency(3, static_cast<std::size_t>(n), 2, static_cast<std::size_t>(m)));
      EXPECT_EQ(total, power(ExactInt(2), static_cast<std::uint64_t>(n - m)) * binomial(n, m));
    }
  }
}

TEST(OracleTest, OddWidthWordsSplitExactlyInHalf) {
  for (std::int64_t n = 0; n <= 8; ++n) {
    const auto width = static_cast<std::size_t>(2 * n + 1);
    const auto low = oracles::count_words(2, width, {}, [&](const WordOdometer& w) {
      return static_cast<std::int64_t>(w.frequency(1)) <= n;
    });
    const auto high = oracles::count_words(2, width, {}, [&](const WordOdometer& w) {
      return static_cast<std::int64_t>(w.frequency(0)) <= n;
    });
    EXPECT_EQ(low, high);
    EXPECT_EQ(low + high, power(ExactInt(2), width));
  }
}

TEST(OracleTest, BinomialRecountAgreesWithClosedForm) {
  oracles::BinomialRecount recount({});
  for (std::int64_t n = 0; n <= 16; ++n) {
    for (std::int64_t k = -1; k <= n + 1; ++k) EXPECT_EQ(recount(n, k), binomial(n, k));
  }
}

TEST(OracleTest, DivisorScan) {
  EXPECT_EQ(oracles::divisor_scan(2, 1, {}), ExactInt(4));
  EXPECT_EQ(oracles::divisor_scan(3, 2, {}), ExactInt(27));
  EXPECT_THROW(oracles::divisor_scan(3, 2, EnumBudget{100}), budget_error);
}

}  // namespace
}  // namespace bijlab
