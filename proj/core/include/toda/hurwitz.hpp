#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "toda/series.hpp"

namespace toda {

/// Exact table of simple Hurwitz numbers H_{g,d} for 0 <= g <= gmax, 1 <= d <= dmax.
class HurwitzTable {
 public:
  HurwitzTable(unsigned gmax, unsigned dmax);

  [[nodiscard]] unsigned gmax() const { return gmax_; }
  [[nodiscard]] unsigned dmax() const { return dmax_; }
  [[nodiscard]] bool covers(unsigned gmax, unsigned dmax) const { return gmax <= gmax_ && dmax <= dmax_; }

  [[nodiscard]] const Rational& at(unsigned g, unsigned d) const;
  void set(unsigned g, unsigned d, Rational value);

  [[nodiscard]] const std::map<std::pair<unsigned, unsigned>, Rational>& entries() const { return entries_; }

  friend bool operator==(const HurwitzTable&, const HurwitzTable&) = default;

 private:
  void check(unsigned g, unsigned d) const;

  unsigned gmax_;
  unsigned dmax_;
  std::map<std::pair<unsigned, unsigned>, Rational> entries_;
};

/// One entry (g_i, d_i, k_i) of a sequence in P(g, d).
struct Triple {
  unsigned genus;
  unsigned degree;
  unsigned k;
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

using TripleSequence = std::vector<Triple>;

/// Calls `visit` on every ordered sequence of triples with
/// sum d_i = d - 1 and sum (g_i + k_i) = g + length.
void enumerate_P(unsigned g, unsigned d, const std::function<void(std::span<const Triple>)>& visit);

/// Like enumerate_P but yields each multiset once (as a sorted sequence).
void enumerate_P_multisets(unsigned g, unsigned d,
                           const std::function<void(std::span<const Triple>)>& visit);

/// Ordered-sum weight: (2^l / l!) * multinomial * prod d_i^{2k_i} H_{g_i,d_i}.
/// `table` must already hold every (g_i, d_i).
Rational recursion_term(unsigned g, unsigned d, std::span<const Triple> xi, const HurwitzTable& table);

/// Fills H_{g,d} in increasing d from d^2 H_{g,d} = sum over P(g,d).
HurwitzTable hurwitz_by_recursion(unsigned gmax, unsigned dmax);

/// Same recursion, summing over ordered sequences directly (slower; used to
/// cross-check the multiset weighting).
HurwitzTable hurwitz_by_ordered_recursion(unsigned gmax, unsigned dmax);

/// Residual of exp(H(y+t) + H(y-t) - 2H) = t^2 e^{-y} H_yy after multiplying
/// through by t^2 and dividing by q = e^y. Slice q^e holds the t-series of
/// the difference, for e <= max_degree - 1 and t-powers <= 2 * max_genus.
BiSeries toda_residual_H(const HurwitzTable& table, unsigned max_genus, unsigned max_degree);

struct ResidualCell {
  std::size_t q_power;
  std::size_t t_power;
  Rational value;
};

/// First nonzero coefficient in (q, t) lexicographic order.
std::optional<ResidualCell> first_nonzero(const BiSeries& residual);

struct OnePointSeries {
  Series Y;
  Series X;
};

/// Y_d, X_d for d = 0..dmax from the degree-0 seeds via
/// Y_d = S^2 Y_{d-1} / d^2 and X_d = (S^2 X_{d-1} - 2d Y_d) / d^2.
std::vector<OnePointSeries> one_point_by_recursion(unsigned dmax, std::size_t order);

/// Versioned JSON: {"schema_version":1,"gmax":..,"dmax":..,"entries":[{"g","d","H":"p/q"}]}.
inline constexpr int kHurwitzSchemaVersion = 1;
std::string hurwitz_table_to_json(const HurwitzTable& table);
/// Throws std::runtime_error on malformed input or an unknown schema_version.
HurwitzTable hurwitz_table_from_json(const std::string& text);

}  // namespace toda
