#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>

#include "toda/rational.hpp"

namespace toda {

/// Highest derivative index held by the ring A = Q[A_0..A_m, B_0..B_m, Q].
inline constexpr unsigned kMaxDerivativeIndex = 4;
inline constexpr std::size_t kVariableCount = 2 * (kMaxDerivativeIndex + 1) + 1;

enum class Variable : std::uint8_t { A, B, Q };

/// Position of A_i, B_i or Q in an exponent vector.
std::size_t variable_slot(Variable kind, unsigned index = 0);

using Exponents = std::array<std::uint16_t, kVariableCount>;

/// Graded lexicographic order: total degree first, then slot by slot.
struct GradedLex {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Polynomial in the free commutative ring Q[A_i, B_i, Q]. Zero
/// coefficients are never stored.
class DiffPoly {
 public:
  DiffPoly() = default;

  static DiffPoly constant(const Rational& c);
  static DiffPoly A(unsigned i);
  static DiffPoly B(unsigned i);
  static DiffPoly Q();
  static DiffPoly monomial(const Rational& c, const Exponents& e);

  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t term_count() const { return terms_.size(); }
  [[nodiscard]] const std::map<Exponents, Rational, GradedLex>& terms() const { return terms_; }
  /// Largest derivative index of any A_i or B_i present, or -1 for none.
  [[nodiscard]] int max_index() const;

  /// Sets every variable selected by `kill` to zero.
  template <typename Pred>
  [[nodiscard]] DiffPoly drop_terms_with(Pred kill) const {
    DiffPoly out;
    for (const auto& [e, c] : terms_) {
      bool keep = true;
      for (std::size_t s = 0; s < kVariableCount && keep; ++s) keep = e[s] == 0 || !kill(s);
      if (keep) out.terms_.emplace(e, c);
    }
    return out;
  }

  /// Canonical text form such as "2*B_1*B_2 - Q*A_1^3", or "0".
  [[nodiscard]] std::string to_string() const;

  DiffPoly& operator+=(const DiffPoly& o);
  DiffPoly& operator-=(const DiffPoly& o);
  DiffPoly& operator*=(const Rational& c);

  friend DiffPoly operator+(DiffPoly a, const DiffPoly& b) { return a += b; }
  friend DiffPoly operator-(DiffPoly a, const DiffPoly& b) { return a -= b; }
  friend DiffPoly operator*(const DiffPoly& a, const DiffPoly& b);
  friend DiffPoly operator*(const Rational& c, DiffPoly a) { return a *= c; }
  friend bool operator==(const DiffPoly&, const DiffPoly&) = default;

 private:
  void add_term(const Exponents& e, const Rational& c);

  std::map<Exponents, Rational, GradedLex> terms_;
};

DiffPoly pow(const DiffPoly& p, unsigned k);

}  // namespace toda
