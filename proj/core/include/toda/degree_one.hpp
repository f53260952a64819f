#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "toda/rational.hpp"

namespace toda {

/// Multiset of descendent indices (a_1, ..., a_n) for an invariant
/// <tau_{a_1}(y) ... tau_{a_n}(y)>. Stored sorted, so equality is multiset equality.
class DescendentKey {
 public:
  DescendentKey() = default;
  explicit DescendentKey(std::vector<unsigned> indices);

  /// Parses a comma-separated list such as "2,2,4"; the empty string is the empty key.
  static DescendentKey parse(std::string_view text);

  [[nodiscard]] const std::vector<unsigned>& indices() const { return indices_; }
  [[nodiscard]] std::size_t size() const { return indices_.size(); }
  [[nodiscard]] unsigned total() const;
  /// total() / 2 when the total is even.
  [[nodiscard]] std::optional<unsigned> genus() const;

  /// Multiset union.
  friend DescendentKey operator+(const DescendentKey& a, const DescendentKey& b);
  friend bool operator==(const DescendentKey&, const DescendentKey&) = default;

 private:
  std::vector<unsigned> indices_;
};

/// Degree-1 invariant at the genus fixed by the key: prod c_{a_i} when every
/// index is even, 0 when some index is odd or the total is odd.
Rational degree1_invariant(const DescendentKey& key);

/// Degree-1 invariant at an explicit genus; zero unless sum a_i == 2 * genus.
Rational degree1_invariant(const DescendentKey& key, unsigned genus);

/// A monomial prod y_i^{m_i} t^{power} where the two sides of the degree-1
/// generating identity disagree.
struct GeneratingMismatch {
  std::vector<unsigned> exponents;  // m_0..m_K
  unsigned t_power;
  Rational lhs;
  Rational rhs;
};

struct GeneratingCheckReport {
  std::size_t monomials_compared = 0;
  std::size_t nonzero_monomials = 0;
  std::vector<GeneratingMismatch> mismatches;
  [[nodiscard]] bool passed() const { return mismatches.empty(); }
};

/// Compares exp(sum_k c_{2k} y_{2k} t^{2k}) with t^2 L(y) monomial by
/// monomial over y_0..y_K (odd indices included), through t^{2G} and with at
/// most `max_insertions` total y-degree. The left side is expanded as a
/// truncated multivariate exponential; the right side is assembled from
/// degree1_invariant with weight 1/prod m_i!.
GeneratingCheckReport degree1_generating_check(unsigned max_genus, unsigned max_index,
                                               unsigned max_insertions = 8);

/// <tau_{2g}(y)>_{g,1} == [t^{2g}] Y_1(t) for every 2g <= order.
bool degree1_consistency_with_Y1(std::size_t order);

}  // namespace toda
