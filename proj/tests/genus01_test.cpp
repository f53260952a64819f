#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"
#include "toda/genus01.hpp"

namespace toda {
namespace {

using testing::R;

DiffPoly A(unsigned i) { return DiffPoly::A(i); }
DiffPoly B(unsigned i) { return DiffPoly::B(i); }
DiffPoly Q() { return DiffPoly::Q(); }
DiffPoly C(long c) { return DiffPoly::constant(Rational(c)); }

// Random polynomial in A_0..A_2, B_0..B_2, Q so two derivations stay in range.
DiffPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<int> exp(0, 2);
  std::uniform_int_distribution<int> terms(1, 4);
  DiffPoly out;
  for (int t = terms(rng); t > 0; --t) {
    Exponents e{};
    for (unsigned i = 0; i <= 2; ++i) {
      e[variable_slot(Variable::A, i)] = static_cast<std::uint16_t>(exp(rng) % 2);
      e[variable_slot(Variable::B, i)] = static_cast<std::uint16_t>(exp(rng) % 2);
    }
    e[variable_slot(Variable::Q)] = static_cast<std::uint16_t>(exp(rng));
    out += DiffPoly::monomial(Rational(coeff(rng)), e);
  }
  return out;
}

TEST(DiffPoly, ArithmeticAndPrinting) {
  EXPECT_EQ((A(1) + B(2)) * (A(1) - B(2)), A(1) * A(1) - B(2) * B(2));
  EXPECT_EQ(pow(A(1) + C(1), 2), A(1) * A(1) + C(2) * A(1) + C(1));
  EXPECT_EQ(DiffPoly().to_string(), "0");
  EXPECT_TRUE((Q() - Q()).is_zero());
  EXPECT_EQ((A(3) * B(1)).max_index(), 3);
  EXPECT_EQ(Q().max_index(), -1);
}

TEST(Derivations, GeneratorImages) {
  const Derivations d;
  EXPECT_EQ(d.d_x0(A(0)), A(1));
  EXPECT_EQ(d.d_x0(B(2)), B(3));
  EXPECT_EQ(d.d_x0(Q()), Q() * A(1));
  EXPECT_EQ(d.d_y0(A(0)), B(1));
  EXPECT_EQ(d.d_y0(B(0)), Q() * A(1));
  EXPECT_EQ(d.d_y0(Q()), Q() * B(1));
  // B_1 -> d_x(Q A_1) = Q A_1^2 + Q A_2
  EXPECT_EQ(d.d_y0(B(1)), Q() * A(1) * A(1) + Q() * A(2));
  EXPECT_TRUE(d.d_x0(C(7)).is_zero());
}

TEST(Derivations, DeltaDerivative) {
  const Derivations d;
  EXPECT_EQ(delta(), B(1) * B(1) - Q() * A(1) * A(1));
  const DiffPoly expected = C(2) * B(1) * B(2) - Q() * pow(A(1), 3) - C(2) * Q() * A(1) * A(2);
  EXPECT_EQ(d.d_x0(delta()), expected);
}

TEST(Derivations, CommuteOnGenerators) {
  const Derivations d;
  for (unsigned i = 0; i <= 2; ++i) {
    EXPECT_EQ(d.d_x0(d.d_y0(A(i))), d.d_y0(d.d_x0(A(i)))) << "A_" << i;
    EXPECT_EQ(d.d_x0(d.d_y0(B(i))), d.d_y0(d.d_x0(B(i)))) << "B_" << i;
  }
  EXPECT_EQ(d.d_x0(d.d_y0(Q())), d.d_y0(d.d_x0(Q())));
}

TEST(Derivations, PropertyCommuteAndLeibniz) {
  const Derivations d;
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const DiffPoly p = random_poly(rng);
    const DiffPoly q = random_poly(rng);
    EXPECT_EQ(d.d_x0(d.d_y0(p)), d.d_y0(d.d_x0(p)));
    EXPECT_EQ(d.d_x0(p * q), d.d_x0(p) * q + p * d.d_x0(q));
    EXPECT_EQ(d.d_y0(p * q), d.d_y0(p) * q + p * d.d_y0(q));
    EXPECT_EQ(d.d_x0(p + q), d.d_x0(p) + d.d_x0(q));
  }
}

TEST(Derivations, IndexBoundEnforced) {
  const Derivations d;
  EXPECT_THROW(d.d_x0(A(kMaxDerivativeIndex)), std::out_of_range);
  EXPECT_THROW(d.d_y0(B(kMaxDerivativeIndex)), std::out_of_range);
}

TEST(Genus1, IdentityHolds) {
  const Genus1Report report = genus1_toda_report();
  EXPECT_TRUE(report.holds());
  EXPECT_EQ(report.lhs.delta_power, 2u);
  EXPECT_EQ(report.rhs.delta_power, 2u);
  EXPECT_TRUE(verify_genus1_toda());
}

TEST(Genus1, LogDeltaOverDeltaSquared) {
  const auto ld = log_delta_second_derivs();
  EXPECT_EQ(ld.xx.delta_power, 2u);
  const Derivations d;
  const DiffPoly D = delta();
  const DiffPoly Dx = d.d_x0(D);
  EXPECT_EQ(ld.xx.numerator, D * d.d_x0(Dx) - Dx * Dx);
}

// With every B set to zero, Delta = -Q A_1^2 and the x-part of the left side
// reduces to Q (A_2 + 2 (A_1 A_3 - A_2^2) / A_1^2), computed by hand.
TEST(Genus1, LeftSideOnBZeroSlice) {
  const Genus1Report report = genus1_toda_report();
  auto kill_b = [](std::size_t slot) {
    for (unsigned i = 0; i <= kMaxDerivativeIndex; ++i)
      if (slot == variable_slot(Variable::B, i)) return true;
    return false;
  };
  const DiffPoly lhs = report.lhs.numerator.drop_terms_with(kill_b);
  const DiffPoly d_sq = pow(Q() * A(1) * A(1), 2);
  // Q (A_0 + log Delta)_xx with log Delta = log(-Q) + 2 log A_1 on this slice:
  // (log Q)_xx = A_2, (2 log A_1)_xx = 2 (A_1 A_3 - A_2^2) / A_1^2.
  const DiffPoly expected =
      Q() * (A(2) * d_sq + A(2) * d_sq + C(2) * (A(1) * A(3) - A(2) * A(2)) * Q() * Q() * A(1) * A(1));
  EXPECT_EQ(lhs, expected);
}

TEST(Genus1, LeftQScaleBreaksIdentity) {
  EXPECT_FALSE(genus1_toda_report(Derivations{}, Rational(2)).holds());
}

TEST(Genus1, SensitiveEntriesBreakIdentity) {
  for (std::size_t i : {0u, 1u, 5u, 6u, 8u, 9u, 10u, 11u, 13u, 14u}) {
    DerivationTable t;
    t.entry(i) = R("3/2");
    EXPECT_FALSE(genus1_toda_report(Derivations(t)).holds()) << DerivationTable::entry_name(i);
  }
}

// Scaling d_x(A_2) is a rescaling of the top variable A_3, under which the
// identity is invariant; the remaining entries never reach the identity.
TEST(Genus1, InertEntriesKeepIdentity) {
  for (std::size_t i : {2u, 3u, 4u, 7u, 12u}) {
    DerivationTable t;
    t.entry(i) = R("3/2");
    EXPECT_TRUE(genus1_toda_report(Derivations(t)).holds()) << DerivationTable::entry_name(i);
  }
}

TEST(Genus0, SmallPhaseSpace) {
  const ExpPoly f = small_phase_genus0_potential();
  EXPECT_EQ(f.to_string(), "exp(y0) + 1/2*x0^2*y0");
  EXPECT_EQ(f.d_x0().d_x0(), ExpPoly::term(1, 0, 1, 0));
  EXPECT_EQ(f.d_y0().d_y0(), ExpPoly::term(1, 0, 0, 1));
  EXPECT_EQ(f.d_x0().d_x0().exp(), f.d_y0().d_y0());
  EXPECT_TRUE(verify_genus0_small_phase());
}

TEST(Genus0, PerturbedPotentialFails) {
  const ExpPoly g = small_phase_genus0_potential() + ExpPoly::term(1, 0, 1, 0) + ExpPoly::term(1, 2, 1, 0);
  EXPECT_NE(g.d_x0().d_x0().exp(), g.d_y0().d_y0());
  EXPECT_THROW(ExpPoly::term(R("1/2"), 0, 1, 0).exp(), std::invalid_argument);
}

}  // namespace
}  // namespace toda
