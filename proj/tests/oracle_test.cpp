#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "test_support.hpp"
#include "toda/oracle.hpp"

namespace toda {
namespace {

using testing::R;

// Test-local brute force: enumerate transposition tuples, multiply them out
// and check transitivity by a flood fill over the generated edges.
std::pair<long, long> brute_force(unsigned d, unsigned r) {
  std::vector<std::pair<unsigned, unsigned>> transpositions;
  for (unsigned a = 0; a < d; ++a)
    for (unsigned b = a + 1; b < d; ++b) transpositions.emplace_back(a, b);
  long all = 0;
  long transitive = 0;
  std::vector<std::size_t> choice(r, 0);
  if (transpositions.empty()) return {r == 0 ? 1 : 0, r == 0 ? 1 : 0};
  while (true) {
    std::vector<unsigned> perm(d);
    std::iota(perm.begin(), perm.end(), 0u);
    for (std::size_t i = 0; i < r; ++i) std::swap(perm[transpositions[choice[i]].first], perm[transpositions[choice[i]].second]);
    bool identity = true;
    for (unsigned i = 0; i < d; ++i) identity = identity && perm[i] == i;
    if (identity) {
      ++all;
      std::set<unsigned> reached{0};
      bool grew = true;
      while (grew) {
        grew = false;
        for (std::size_t i = 0; i < r; ++i) {
          const auto [a, b] = transpositions[choice[i]];
          if (reached.count(a) != reached.count(b)) {
            reached.insert(a);
            reached.insert(b);
            grew = true;
          }
        }
      }
      if (reached.size() == d) ++transitive;
    }
    std::size_t pos = 0;
    while (pos < r && ++choice[pos] == transpositions.size()) choice[pos++] = 0;
    if (pos == r) break;
  }
  return {all, transitive};
}

TEST(Permutation, Composition) {
  const Permutation a = Permutation::transposition(3, 0, 1);
  const Permutation b = Permutation::transposition(3, 1, 2);
  const Permutation ab = a * b;
  EXPECT_EQ(ab(2), 0u);  // b sends 2 to 1, a sends 1 to 0
  EXPECT_TRUE((a * a).is_identity());
  EXPECT_FALSE(ab.is_identity());
}

TEST(Permutation, LehmerRoundTrip) {
  for (unsigned d = 1; d <= 5; ++d) {
    std::uint32_t n = 1;
    for (unsigned i = 2; i <= d; ++i) n *= i;
    for (std::uint32_t k = 0; k < n; ++k) EXPECT_EQ(Permutation::from_lehmer_index(d, k).lehmer_index(), k);
  }
  EXPECT_EQ(Permutation::identity(4).lehmer_index(), 0u);
}

TEST(IdentityTuples, Examples) {
  EXPECT_EQ(count_identity_tuples(2, 2), BigInt(1));
  EXPECT_EQ(count_identity_tuples(2, 3), BigInt(0));
  EXPECT_EQ(count_identity_tuples(3, 2), BigInt(3));
  EXPECT_EQ(count_identity_tuples(3, 4), BigInt(27));
  EXPECT_EQ(count_identity_tuples(1, 0), BigInt(1));
}

TEST(TransitiveTuples, Examples) {
  EXPECT_EQ(count_transitive_tuples(1, 0), BigInt(1));
  EXPECT_EQ(count_transitive_tuples(1, 2), BigInt(0));
  EXPECT_EQ(count_transitive_tuples(2, 2), BigInt(1));
  EXPECT_EQ(count_transitive_tuples(2, 4), BigInt(1));
  EXPECT_EQ(count_transitive_tuples(3, 2), BigInt(0));
  EXPECT_EQ(count_transitive_tuples(3, 4), BigInt(24));
}

TEST(TransitiveTuples, OddFactorCountIsZero) {
  for (unsigned d = 1; d <= 5; ++d) {
    for (unsigned r = 1; r <= 9; r += 2) {
      EXPECT_EQ(count_identity_tuples(d, r), BigInt(0));
      EXPECT_EQ(count_transitive_tuples(d, r), BigInt(0));
    }
  }
}

TEST(TransitiveTuples, AgreeWithLocalBruteForce) {
  for (unsigned d = 1; d <= 3; ++d) {
    for (unsigned r = 0; r <= 6; ++r) {
      const auto [all, transitive] = brute_force(d, r);
      EXPECT_EQ(count_identity_tuples(d, r), BigInt(all)) << d << "," << r;
      EXPECT_EQ(count_transitive_tuples(d, r), BigInt(transitive)) << d << "," << r;
      const FactorizationCount direct = count_by_direct_enumeration(d, r);
      EXPECT_EQ(direct.all_count, BigInt(all));
      EXPECT_EQ(direct.transitive_count, BigInt(transitive));
    }
  }
}

TEST(TransitiveTuples, DirectAgreesWithSieveOnDegreeFour) {
  for (unsigned r = 0; r <= 6; r += 2) {
    const FactorizationCount direct = count_by_direct_enumeration(4, r);
    EXPECT_EQ(direct.all_count, count_identity_tuples(4, r));
    EXPECT_EQ(direct.transitive_count, count_transitive_tuples(4, r));
  }
}

TEST(SetPartitions, BellNumbers) {
  const std::size_t bell[] = {1, 1, 2, 5, 15, 52, 203, 877};
  for (unsigned n = 0; n <= 7; ++n) EXPECT_EQ(count_set_partitions(n), bell[n]);
}

TEST(SetPartitions, ResummingTransitiveCountsRecoversAll) {
  for (unsigned d = 1; d <= 6; ++d) {
    for (unsigned r = 0; r <= 8; r += 2) {
      EXPECT_EQ(identity_count_from_partitions(d, r), count_identity_tuples(d, r)) << d << "," << r;
    }
  }
}

TEST(HurwitzOracle, Examples) {
  EXPECT_EQ(hurwitz_oracle(0, 1), Rational(1));
  EXPECT_EQ(hurwitz_oracle(1, 1), Rational(0));
  EXPECT_EQ(hurwitz_oracle(0, 2), R("1/2"));
  EXPECT_EQ(hurwitz_oracle(1, 2), R("1/2"));
  EXPECT_EQ(hurwitz_oracle(0, 3), Rational(4));
  EXPECT_EQ(hurwitz_oracle(0, 3, OracleBackend::direct), Rational(4));
}

TEST(HurwitzOracle, BackendsAgree) {
  for (unsigned g = 0; g <= 2; ++g) {
    for (unsigned d = 1; d <= 3; ++d) {
      EXPECT_EQ(hurwitz_oracle(g, d, OracleBackend::direct), hurwitz_oracle(g, d, OracleBackend::dp_sieve));
    }
  }
}

TEST(HurwitzOracle, ResourceGuard) {
  EXPECT_THROW(hurwitz_oracle(0, 8), ResourceLimitError);
  EXPECT_THROW(count_identity_tuples(5, 2, 4), ResourceLimitError);
  EXPECT_NO_THROW(hurwitz_oracle(0, 4, OracleBackend::dp_sieve, 4));
  EXPECT_THROW(count_by_direct_enumeration(6, 16), ResourceLimitError);
}

}  // namespace
}  // namespace toda
