#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "toda/rational.hpp"

namespace toda {

/// Raised when an oracle request exceeds its configured degree bound.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr unsigned kDefaultOracleMaxDegree = 7;

/// Bijection on {0, ..., d-1}; images[i] is the image of point i.
class Permutation {
 public:
  static Permutation identity(unsigned d);
  static Permutation transposition(unsigned d, unsigned a, unsigned b);
  /// Inverse of lehmer_index().
  static Permutation from_lehmer_index(unsigned d, std::uint32_t index);
  explicit Permutation(std::vector<std::uint8_t> images);

  [[nodiscard]] unsigned degree() const { return static_cast<unsigned>(images_.size()); }
  [[nodiscard]] unsigned operator()(unsigned i) const { return images_.at(i); }
  [[nodiscard]] bool is_identity() const;
  /// Rank of the permutation in lexicographic order, in [0, d!).
  [[nodiscard]] std::uint32_t lehmer_index() const;

  /// (*this * o)(i) = (*this)(o(i)).
  friend Permutation operator*(const Permutation& p, const Permutation& o);
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint8_t> images_;
};

/// Tuple counts for a fixed (d, r).
struct FactorizationCount {
  unsigned degree;
  unsigned factors;
  BigInt all_count;
  BigInt transitive_count;
};

enum class OracleBackend { direct, dp_sieve };

/// Ordered r-tuples of transpositions in S_d whose product is the identity,
/// by dynamic programming over the group algebra.
BigInt count_identity_tuples(unsigned d, unsigned r, unsigned max_degree = kDefaultOracleMaxDegree);

/// Those tuples whose factors generate a transitive subgroup, by the
/// set-partition sieve over count_identity_tuples.
BigInt count_transitive_tuples(unsigned d, unsigned r, unsigned max_degree = kDefaultOracleMaxDegree);

/// Brute-force enumeration of all C(d,2)^r tuples with an explicit orbit check.
FactorizationCount count_by_direct_enumeration(unsigned d, unsigned r,
                                               unsigned max_degree = kDefaultOracleMaxDegree);

/// Re-sums transitive counts over every set partition of the d points and
/// every split of the r factors among the blocks. Equals count_identity_tuples.
BigInt identity_count_from_partitions(unsigned d, unsigned r,
                                      unsigned max_degree = kDefaultOracleMaxDegree);

/// Number of set partitions of {1..n}, by enumeration.
std::size_t count_set_partitions(unsigned n);

/// H_{g,d} = (transitive factorizations of the identity into 2g+2d-2 transpositions) / d!.
Rational hurwitz_oracle(unsigned g, unsigned d, OracleBackend backend = OracleBackend::dp_sieve,
                        unsigned max_degree = kDefaultOracleMaxDegree);

}  // namespace toda
