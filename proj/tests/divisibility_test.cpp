#include <gtest/gtest.h>

#include <map>

#include "homcount/divisibility.hpp"
#include "oracles.hpp"

namespace homcount {
namespace {

TEST(IsExceptional, Examples) {
  EXPECT_TRUE(is_exceptional(6));
  EXPECT_FALSE(is_exceptional(10));
  EXPECT_FALSE(is_exceptional(12));
  EXPECT_TRUE(is_exceptional(2));
  EXPECT_FALSE(is_exceptional(1));
  EXPECT_TRUE(is_exceptional(2 * 3 * 7 * 11 * 11));
  EXPECT_FALSE(is_exceptional(2 * 3 * 13));
  EXPECT_THROW(is_exceptional(0), invalid_input);
}

TEST(CheckMainTheorem, Examples) {
  const auto r45 = check_main_theorem(45);
  EXPECT_EQ(r45.omega, 2u);
  EXPECT_EQ(r45.phi, 24);
  EXPECT_EQ(r45.ring_hom_count, 4);
  EXPECT_EQ(r45.surj_hom_count, 24);
  EXPECT_TRUE(r45.divides);
  EXPECT_FALSE(r45.exceptional);
  EXPECT_TRUE(r45.agrees);

  const auto r2 = check_main_theorem(2);
  EXPECT_EQ(r2.omega, 1u);
  EXPECT_EQ(r2.phi, 1);
  EXPECT_FALSE(r2.divides);
  EXPECT_TRUE(r2.exceptional);
  EXPECT_TRUE(r2.agrees);

  const auto r18 = check_main_theorem(18);
  EXPECT_EQ(r18.omega, 2u);
  EXPECT_EQ(r18.phi, 6);
  EXPECT_FALSE(r18.divides);
  EXPECT_TRUE(r18.exceptional);
  EXPECT_TRUE(r18.agrees);

  const auto r1 = check_main_theorem(1);
  EXPECT_TRUE(r1.divides);
  EXPECT_FALSE(r1.exceptional);
  EXPECT_TRUE(r1.agrees);

  EXPECT_THROW(check_main_theorem(0), invalid_input);
}

TEST(CheckMainTheorem, AgreesWithIndependentArithmetic) {
  for (std::uint64_t n = 1; n <= 5000; ++n) {
    const auto r = check_main_theorem(n);
    const std::uint64_t ring = std::uint64_t{1} << oracle::factor(n).size();
    const std::uint64_t phi = oracle::totient(n);
    ASSERT_EQ(r.phi, phi);
    ASSERT_EQ(r.ring_hom_count, ring);
    ASSERT_EQ(r.divides, phi % ring == 0) << n;
  }
}

TEST(MainTheorem, BiconditionalHoldsUpTo100000) {
  for (std::uint64_t n = 2; n <= 100'000; ++n) {
    const auto r = check_main_theorem(n);
    ASSERT_EQ(r.divides, !is_exceptional(n)) << n;
  }
}

TEST(MainTheorem, TwoAdicValuationOfTotient) {
  for (std::uint64_t n = 2; n <= 100'000; ++n) {
    const auto f = factorize(n);
    unsigned expected = 0;
    for (const auto& pp : f) {
      if (pp.prime != 2) expected += two_adic_valuation(pp.prime - 1);
    }
    if (n % 4 == 0) expected += two_adic_valuation(n) - 1;
    const auto phi = totient(n);
    ASSERT_EQ(two_adic_valuation(phi), expected) << n;
    ASSERT_EQ(oracle::halvings(static_cast<std::uint64_t>(phi)), expected) << n;

    const unsigned w = static_cast<unsigned>(f.size());
    if (is_exceptional(n)) {
      ASSERT_EQ(expected + 1, w) << n;
    } else {
      ASSERT_GE(expected, w) << n;
    }
  }
}

TEST(SweepCyclic, SmallRanges) {
  const auto r100 = sweep_cyclic(100);
  EXPECT_EQ(r100.records.size(), 99u);
  EXPECT_TRUE(r100.ok());
  EXPECT_EQ(r100.regular + r100.exceptional, 99u);
  // n <= 100 with n = 2 * alpha, alpha odd, primes of alpha all 3 mod 4:
  // alpha in {1,3,7,9,11,19,21,23,27,31,33,43,47,49}.
  EXPECT_EQ(r100.exceptional, 14u);

  const auto r2 = sweep_cyclic(2);
  ASSERT_EQ(r2.records.size(), 1u);
  EXPECT_TRUE(r2.records[0].exceptional);

  EXPECT_THROW(sweep_cyclic(1), invalid_input);
  EXPECT_THROW(sweep_cyclic(0), invalid_input);
}

TEST(ProductFailureCondition, AsStated) {
  EXPECT_TRUE(product_failure_condition({2, 3}));
  EXPECT_TRUE(product_failure_condition({3, 2}));
  EXPECT_TRUE(product_failure_condition({2, 3, 5}));
  EXPECT_TRUE(product_failure_condition({2, 21}));
  EXPECT_FALSE(product_failure_condition({2, 5}));
  EXPECT_FALSE(product_failure_condition({2, 2}));
  EXPECT_FALSE(product_failure_condition({2, 6}));
  EXPECT_FALSE(product_failure_condition({6}));
  EXPECT_FALSE(product_failure_condition({2}));
  EXPECT_FALSE(product_failure_condition({3, 7}));
  // n_j = 1 is odd with no prime divisors, so it qualifies vacuously.
  EXPECT_TRUE(product_failure_condition({2, 1}));
}

TEST(CheckProductTheorem, Examples) {
  const auto a = check_product_theorem({2, 3});
  EXPECT_EQ(a.ring_hom_count, 4);
  EXPECT_EQ(a.max_order_count, 2);
  EXPECT_FALSE(a.divides);
  EXPECT_TRUE(a.failure_condition);
  EXPECT_EQ(a.classification, ProductClass::flagged_and_failed);
  EXPECT_TRUE(a.verified());

  const auto b = check_product_theorem({2, 5});
  EXPECT_EQ(b.max_order_count, 4);
  EXPECT_TRUE(b.divides);
  EXPECT_EQ(b.classification, ProductClass::held);

  const auto c = check_product_theorem({2, 3, 5});
  EXPECT_EQ(c.ring_hom_count, 8);
  EXPECT_EQ(c.max_order_count, 8);
  EXPECT_EQ(c.classification, ProductClass::flagged_and_held);

  const auto d = check_product_theorem({2, 2});
  EXPECT_EQ(d.ring_hom_count, 4);
  EXPECT_EQ(d.max_order_count, 3);
  EXPECT_EQ(d.classification, ProductClass::unflagged_and_failed);
}

TEST(CheckProductTheorem, OverBudgetIsMarkedUnverified) {
  const auto r = check_product_theorem({1009, 1013, 1019});
  EXPECT_FALSE(r.oracle_max_order_count.has_value());
  EXPECT_FALSE(r.verified());
  EXPECT_FALSE(r.oracle_disagrees());
  EXPECT_EQ(r.max_order_count, NaturalCount(1008) * 1012 * 1018);

  const auto small_budget = check_product_theorem({2, 3}, 5);
  EXPECT_FALSE(small_budget.verified());
}

TEST(SweepProducts, ContainsDocumentedFindings) {
  const auto report = sweep_products(2, 6);
  EXPECT_TRUE(report.ok());
  EXPECT_EQ(report.unverified, 0u);
  // 5 single moduli plus C(5+1, 2) = 15 pairs.
  EXPECT_EQ(report.records.size(), 20u);
  std::map<std::string, ProductClass> by_group;
  for (const auto& r : report.records) by_group.emplace(r.moduli.descriptor(), r.classification);
  EXPECT_EQ(by_group.at("2,2"), ProductClass::unflagged_and_failed);
  EXPECT_EQ(by_group.at("2,3"), ProductClass::flagged_and_failed);
  EXPECT_EQ(by_group.at("2,5"), ProductClass::held);

  std::size_t tallied = 0;
  for (auto c : all_product_classes) tallied += report.tally(c);
  EXPECT_EQ(tallied, report.records.size());
}

TEST(SweepProducts, RankOneReproducesCyclicVerdicts) {
  const auto report = sweep_products(1, 12);
  ASSERT_EQ(report.records.size(), 11u);
  for (const auto& r : report.records) {
    const auto cyclic = check_main_theorem(r.moduli[0]);
    EXPECT_EQ(r.divides, cyclic.divides) << r.moduli.descriptor();
    EXPECT_FALSE(r.failure_condition);
  }
}

TEST(SweepProducts, OrderingIsByRankThenLexicographic) {
  const auto report = sweep_products(3, 4);
  std::vector<std::string> got;
  for (const auto& r : report.records) got.push_back(r.moduli.descriptor());
  const std::vector<std::string> expected{
      "2", "3", "4", "2,2", "2,3", "2,4", "3,3", "3,4", "4,4",
      "2,2,2", "2,2,3", "2,2,4", "2,3,3", "2,3,4", "2,4,4", "3,3,3", "3,3,4", "3,4,4", "4,4,4"};
  EXPECT_EQ(got, expected);
}

TEST(SweepProducts, RejectsParametersOutsideDeskScale) {
  EXPECT_THROW(sweep_products(0, 6), invalid_input);
  EXPECT_THROW(sweep_products(4, 6), invalid_input);
  EXPECT_THROW(sweep_products(2, 13), invalid_input);
  EXPECT_THROW(sweep_products(2, 1), invalid_input);
}

TEST(ClassifyTags, ExactlyOnePerCombination) {
  EXPECT_EQ(classify(false, true), ProductClass::held);
  EXPECT_EQ(classify(false, false), ProductClass::unflagged_and_failed);
  EXPECT_EQ(classify(true, true), ProductClass::flagged_and_held);
  EXPECT_EQ(classify(true, false), ProductClass::flagged_and_failed);
  EXPECT_EQ(to_string(ProductClass::flagged_and_held), "flagged_and_held");
}

}  // namespace
}  // namespace homcount
