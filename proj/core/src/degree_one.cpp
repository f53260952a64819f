#include "toda/degree_one.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <stdexcept>

#include "toda/closed_forms.hpp"

namespace toda {

DescendentKey::DescendentKey(std::vector<unsigned> indices) : indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
}

DescendentKey DescendentKey::parse(std::string_view text) {
  std::vector<unsigned> out;
  if (text.empty()) return DescendentKey(out);
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    std::string_view piece = text.substr(start, comma == std::string_view::npos ? text.size() - start : comma - start);
    while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
    while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
    unsigned value = 0;
    const auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (piece.empty() || ec != std::errc() || ptr != piece.data() + piece.size()) {
      throw std::invalid_argument("descendent indices must be non-negative integers: '" + std::string(piece) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return DescendentKey(std::move(out));
}

unsigned DescendentKey::total() const { return std::accumulate(indices_.begin(), indices_.end(), 0U); }

std::optional<unsigned> DescendentKey::genus() const {
  const unsigned t = total();
  if (t % 2 != 0) return std::nullopt;
  return t / 2;
}

DescendentKey operator+(const DescendentKey& a, const DescendentKey& b) {
  std::vector<unsigned> merged = a.indices_;
  merged.insert(merged.end(), b.indices_.begin(), b.indices_.end());
  return DescendentKey(std::move(merged));
}

Rational degree1_invariant(const DescendentKey& key) {
  const auto g = key.genus();
  if (!g) return Rational(0);
  return degree1_invariant(key, *g);
}

Rational degree1_invariant(const DescendentKey& key, unsigned genus) {
  if (key.total() != 2 * genus) return Rational(0);
  Rational product(1);
  for (unsigned a : key.indices()) {
    if (a % 2 != 0) return Rational(0);
    product *= sinh_coefficient(a / 2);
  }
  return product;
}

namespace {

// Exponent vector: m_0..m_K followed by the t-power.
using Monomial = std::vector<unsigned>;
using Polynomial = std::map<Monomial, Rational>;

Polynomial multiply(const Polynomial& p, const Polynomial& q, unsigned max_t, std::size_t t_slot) {
  Polynomial out;
  for (const auto& [mp, cp] : p) {
    for (const auto& [mq, cq] : q) {
      if (mp[t_slot] + mq[t_slot] > max_t) continue;
      Monomial m(mp.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = mp[i] + mq[i];
      Rational& slot = out[m];
      slot += cp * cq;
      if (slot.is_zero()) out.erase(m);
    }
  }
  return out;
}

// Visits every multiset of indices 0..max_index (as exponent counts) with at
// most `budget` elements.
template <typename Visit>
void for_each_exponent_vector(unsigned max_index, unsigned budget, Visit&& visit) {
  std::vector<unsigned> m(max_index + 1, 0);
  auto rec = [&](auto&& self, unsigned i, unsigned left) -> void {
    if (i > max_index) {
      visit(m);
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      m[i] = e;
      self(self, i + 1, left - e);
    }
    m[i] = 0;
  };
  rec(rec, 0, budget);
}

}  // namespace

GeneratingCheckReport degree1_generating_check(unsigned max_genus, unsigned max_index, unsigned max_insertions) {
  const std::size_t t_slot = max_index + 1;
  const unsigned max_t = 2 * max_genus;

  Polynomial argument;
  for (unsigned i = 0; i <= max_index; i += 2) {
    if (i > max_t) break;
    Monomial m(t_slot + 1, 0);
    m[i] = 1;
    m[t_slot] = i;
    argument[m] = sinh_coefficient(i / 2);
  }

  // The argument is homogeneous of degree 1 in y, so exp truncates at
  // max_insertions terms.
  Polynomial lhs;
  Polynomial power{{Monomial(t_slot + 1, 0), Rational(1)}};
  for (unsigned n = 0; n <= max_insertions; ++n) {
    const Rational inv_n_factorial(BigInt(1), factorial(n));
    for (const auto& [m, c] : power) lhs[m] += inv_n_factorial * c;
    power = multiply(power, argument, max_t, t_slot);
  }

  Polynomial rhs;
  for_each_exponent_vector(max_index, max_insertions, [&](const std::vector<unsigned>& counts) {
    std::vector<unsigned> indices;
    BigInt symmetry = 1;
    for (unsigned i = 0; i <= max_index; ++i) {
      indices.insert(indices.end(), counts[i], i);
      symmetry *= factorial(counts[i]);
    }
    const DescendentKey key(std::move(indices));
    const auto genus = key.genus();
    if (!genus || key.total() > max_t) return;
    Monomial m(counts.begin(), counts.end());
    m.push_back(key.total());
    rhs[m] = degree1_invariant(key, *genus) / Rational(symmetry);
  });

  GeneratingCheckReport report;
  std::map<Monomial, std::pair<Rational, Rational>> merged;
  for (const auto& [m, c] : lhs) merged[m].first = c;
  for (const auto& [m, c] : rhs) merged[m].second = c;
  for (const auto& [m, sides] : merged) {
    ++report.monomials_compared;
    if (!sides.first.is_zero() || !sides.second.is_zero()) ++report.nonzero_monomials;
    if (sides.first != sides.second) {
      report.mismatches.push_back({Monomial(m.begin(), m.end() - 1), m.back(), sides.first, sides.second});
    }
  }
  return report;
}

bool degree1_consistency_with_Y1(std::size_t order) {
  const Series y1 = one_point_Y_closed(1, order);
  for (unsigned g = 0; 2 * static_cast<std::size_t>(g) <= order; ++g) {
    if (degree1_invariant(DescendentKey({2 * g}), g) != y1[2 * g]) return false;
  }
  return true;
}

}  // namespace toda
