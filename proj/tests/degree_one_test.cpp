#include <gtest/gtest.h>

#include "test_support.hpp"
#include "toda/closed_forms.hpp"
#include "toda/degree_one.hpp"

namespace toda {
namespace {

using testing::R;

Rational invariant(std::string_view key) { return degree1_invariant(DescendentKey::parse(key)); }

TEST(DescendentKey, ParseAndCanonicalOrder) {
  EXPECT_EQ(DescendentKey::parse("4,2,2"), DescendentKey({2, 2, 4}));
  EXPECT_EQ(DescendentKey::parse(" 0 , 3 ").indices(), (std::vector<unsigned>{0, 3}));
  EXPECT_EQ(DescendentKey::parse("").size(), 0u);
  EXPECT_EQ(DescendentKey::parse("2,2,4").genus(), 4u);
  EXPECT_FALSE(DescendentKey::parse("1,2").genus().has_value());
}

TEST(DescendentKey, ParseErrors) {
  EXPECT_THROW(DescendentKey::parse("2,,3"), std::invalid_argument);
  EXPECT_THROW(DescendentKey::parse("-1"), std::invalid_argument);
  EXPECT_THROW(DescendentKey::parse("a"), std::invalid_argument);
}

TEST(Degree1Invariant, Examples) {
  EXPECT_EQ(invariant(""), Rational(1));
  EXPECT_EQ(invariant("0"), Rational(1));
  EXPECT_EQ(invariant("2"), R("1/24"));
  EXPECT_EQ(invariant("2,2"), R("1/576"));
  EXPECT_EQ(invariant("4"), R("1/1920"));
  EXPECT_EQ(invariant("1,1"), Rational(0));
  EXPECT_EQ(invariant("3"), Rational(0));
  EXPECT_EQ(degree1_invariant(DescendentKey::parse("2"), 2), Rational(0));
  EXPECT_EQ(degree1_invariant(DescendentKey::parse("2,2"), 2), R("1/576"));
}

TEST(Degree1Invariant, MultiplicativeOverUnion) {
  testing::RationalGen gen(5);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<unsigned> a(gen.order(0, 3));
    std::vector<unsigned> b(gen.order(0, 3));
    for (auto& x : a) x = static_cast<unsigned>(gen.order(0, 8));
    for (auto& x : b) x = static_cast<unsigned>(gen.order(0, 8));
    const DescendentKey ka(a);
    const DescendentKey kb(b);
    EXPECT_EQ(degree1_invariant(ka + kb), degree1_invariant(ka) * degree1_invariant(kb));
  }
}

TEST(Degree1Invariant, ZeroInsertionIsNeutral) {
  for (const char* key : {"", "2", "2,4", "6,6,2", "1,3"}) {
    const DescendentKey k = DescendentKey::parse(key);
    EXPECT_EQ(degree1_invariant(k + DescendentKey({0})), degree1_invariant(k)) << key;
  }
}

TEST(Degree1Invariant, SingleInsertionMatchesSinhCoefficients) {
  const Series s = sinh_normalized(20);
  for (unsigned a = 0; a <= 20; ++a) EXPECT_EQ(degree1_invariant(DescendentKey({a})), s[a]) << a;
}

TEST(Degree1GeneratingCheck, PassesOnDefaultBounds) {
  const GeneratingCheckReport report = degree1_generating_check(4, 8);
  EXPECT_TRUE(report.passed());
  EXPECT_GT(report.monomials_compared, 100u);
  EXPECT_GT(report.nonzero_monomials, 0u);
}

TEST(Degree1GeneratingCheck, SmallBounds) {
  const GeneratingCheckReport report = degree1_generating_check(1, 2, 2);
  EXPECT_TRUE(report.passed());
  EXPECT_GT(report.monomials_compared, 0u);
}

TEST(Degree1ConsistencyWithY1, Holds) { EXPECT_TRUE(degree1_consistency_with_Y1(20)); }

}  // namespace
}  // namespace toda
