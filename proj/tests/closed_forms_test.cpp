#include <gtest/gtest.h>

#include "test_support.hpp"
#include "toda/closed_forms.hpp"

namespace toda {
namespace {

using testing::R;

TEST(SinhNormalized, Coefficients) {
  const Series s = sinh_normalized(6);
  EXPECT_EQ(s[0], Rational(1));
  EXPECT_EQ(s[2], R("1/24"));
  EXPECT_EQ(s[4], R("1/1920"));
  EXPECT_EQ(s[6], R("1/322560"));  // 1 / (2^6 * 7!)
}

TEST(SinhNormalized, PositiveEvenCoefficientsOnly) {
  const Series s = sinh_normalized(21);
  for (std::size_t k = 0; k <= 21; ++k) {
    if (k % 2 == 1) {
      EXPECT_TRUE(s[k].is_zero());
    } else {
      EXPECT_GT(s[k], Rational(0));
    }
  }
}

TEST(SinhNormalized, SquareIsSumOfEvenExponentialTerms) {
  // S^2 = sum_{k>0} 2 t^{2k-2} / (2k)!, i.e. (e^t + e^{-t} - 2) / t^2.
  const std::size_t n = 16;
  const Series s = sinh_normalized(n);
  const Series sq = s * s;
  for (std::size_t k = 0; k <= n; ++k) {
    const Rational expected = k % 2 == 0 ? Rational(BigInt(2), factorial(static_cast<unsigned>(k + 2))) : Rational(0);
    EXPECT_EQ(sq[k], expected) << "t^" << k;
  }
}

TEST(OnePointYClosed, Examples) {
  EXPECT_EQ(one_point_Y_closed(1, 4)[0], Rational(1));
  EXPECT_EQ(one_point_Y_closed(2, 4)[0], R("1/4"));
  EXPECT_EQ(one_point_Y_closed(1, 4)[2], R("1/24"));
  EXPECT_THROW(one_point_Y_closed(0, 4), PreconditionError);
}

TEST(OnePointYClosed, LeadingCoefficientTimesFactorialSquared) {
  for (unsigned d = 1; d <= 8; ++d) {
    const BigInt& f = factorial(d);
    EXPECT_EQ(Rational(BigInt(f * f)) * one_point_Y_closed(d, 2)[0], Rational(1));
  }
}

TEST(OnePointXClosed, Examples) {
  EXPECT_EQ(one_point_X_closed(1, 4)[0], Rational(-2));
  EXPECT_EQ(one_point_X_closed(2, 4)[0], R("-3/4"));
  // 2S(log S - 1) at t^2: 2(c_2 - c_2) = 0
  EXPECT_TRUE(one_point_X_closed(1, 4)[2].is_zero());
}

TEST(Degree0Series, Examples) {
  const Series y0 = degree0_Y_series(8);
  EXPECT_EQ(y0[0], Rational(1));
  EXPECT_EQ(y0[2], R("-1/24"));
  EXPECT_EQ(y0 * sinh_normalized(8), Series::constant(1, 8));

  const Series x0 = degree0_X_series(9);
  EXPECT_TRUE(x0[0].is_zero());
  EXPECT_EQ(x0[2], R("1/12"));
  for (std::size_t k = 1; k <= 9; k += 2) EXPECT_TRUE(x0[k].is_zero());
}

TEST(HarmonicNumbers, Recurrence) {
  EXPECT_EQ(harmonic_number(1), Rational(1));
  for (unsigned d = 2; d <= 20; ++d) {
    EXPECT_EQ(harmonic_number(d) - harmonic_number(d - 1), Rational(BigInt(1), BigInt(static_cast<long>(d))));
  }
}

// The closed forms satisfy the one-step recursions coefficientwise.
TEST(ClosedForms, SatisfyStepRecursions) {
  const std::size_t n = 14;
  const Series s = sinh_normalized(n);
  const Series s2 = s * s;
  Series y_prev = degree0_Y_series(n);
  Series x_prev = degree0_X_series(n);
  for (unsigned d = 0; d < 7; ++d) {
    const unsigned e = d + 1;
    const Series y_next = one_point_Y_closed(e, n);
    const Series x_next = one_point_X_closed(e, n);
    const Rational e2(static_cast<long>(e * e));
    EXPECT_EQ(s2 * y_prev, e2 * y_next) << "Y step " << d;
    EXPECT_EQ(s2 * x_prev, e2 * x_next + Rational(2L * e) * y_next) << "X step " << d;
    y_prev = y_next;
    x_prev = x_next;
  }
}

}  // namespace
}  // namespace toda
