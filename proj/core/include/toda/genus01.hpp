#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <tuple>
#include <utility>

#include "toda/diffpoly.hpp"

namespace toda {

/// Images of the generators under d/dx_0 and d/dy_0, each scaled by an
/// adjustable coefficient (all 1 for the genuine derivations):
///   d_x: A_i -> A_{i+1},  B_i -> B_{i+1},  Q -> Q A_1
///   d_y: A_i -> B_{i+1},  B_0 -> Q A_1 (B_i -> d_x^i of that),  Q -> Q B_1
struct DerivationTable {
  std::array<Rational, kMaxDerivativeIndex> x_A{1, 1, 1, 1};
  std::array<Rational, kMaxDerivativeIndex> x_B{1, 1, 1, 1};
  Rational x_Q{1};
  std::array<Rational, kMaxDerivativeIndex> y_A{1, 1, 1, 1};
  Rational y_B0{1};
  Rational y_Q{1};

  static constexpr std::size_t kEntryCount = 3 * kMaxDerivativeIndex + 3;
  /// Uniform access for perturbation experiments.
  Rational& entry(std::size_t i);
  [[nodiscard]] static std::string entry_name(std::size_t i);
};

/// The pair of commuting derivations on Q[A_i, B_i, Q] induced by the genus-0
/// Toda equation. Throws std::out_of_range if an index beyond the ring bound
/// would be produced.
class Derivations {
 public:
  explicit Derivations(DerivationTable table = {});

  [[nodiscard]] DiffPoly d_x0(const DiffPoly& p) const;
  [[nodiscard]] DiffPoly d_y0(const DiffPoly& p) const;

 private:
  enum class Direction { x, y };
  [[nodiscard]] DiffPoly apply(const DiffPoly& p, Direction dir) const;
  [[nodiscard]] const DiffPoly& image(std::size_t slot, Direction dir) const;

  DerivationTable table_;
  std::array<DiffPoly, kVariableCount> x_images_;
  std::array<DiffPoly, kVariableCount> y_images_;
  std::size_t y_b_images_ = 0;
};

/// Delta = B_1^2 - Q A_1^2.
DiffPoly delta();

/// numerator / Delta^delta_power in the localization at Delta.
struct LocalizedElement {
  DiffPoly numerator;
  unsigned delta_power = 0;
};

/// a == b after clearing denominators.
bool equal_localized(const LocalizedElement& a, const LocalizedElement& b);
LocalizedElement operator+(const LocalizedElement& a, const LocalizedElement& b);
LocalizedElement operator*(const DiffPoly& p, const LocalizedElement& a);

struct LogDeltaSecondDerivatives {
  LocalizedElement xx;
  LocalizedElement yy;
};

/// (log Delta)_{x0x0} and (log Delta)_{y0y0}, each over Delta^2.
LogDeltaSecondDerivatives log_delta_second_derivs(const Derivations& derivations = Derivations{});

struct Genus1Report {
  LocalizedElement lhs;   // Q (A_0 + log Delta)_{x0x0}
  LocalizedElement rhs;   // (-A_0 + log Delta)_{y0y0}
  DiffPoly difference;    // lhs - rhs numerators over Delta^2
  [[nodiscard]] bool holds() const { return difference.is_zero(); }
};

/// Both sides of the genus-1 Toda identity in the localized ring.
/// `lhs_q_scale` multiplies the leading Q on the left (1 for the real identity).
Genus1Report genus1_toda_report(const Derivations& derivations = Derivations{},
                                const Rational& lhs_q_scale = Rational(1));

bool verify_genus1_toda();

/// Polynomial in x_0, y_0 and E = e^{y_0} (with d/dy_0 E = E); enough to
/// host the small-phase-space genus-0 potential.
class ExpPoly {
 public:
  using Key = std::tuple<unsigned, unsigned, int>;  // powers of x_0, y_0, E

  static ExpPoly term(const Rational& c, unsigned x_power, unsigned y_power, int e_power);

  [[nodiscard]] ExpPoly d_x0() const;
  [[nodiscard]] ExpPoly d_y0() const;
  /// exp of c*y_0 (integer c) is E^c; other arguments are rejected.
  [[nodiscard]] ExpPoly exp() const;
  [[nodiscard]] std::string to_string() const;

  friend ExpPoly operator+(const ExpPoly& a, const ExpPoly& b);
  friend bool operator==(const ExpPoly&, const ExpPoly&) = default;

 private:
  void add(const Key& k, const Rational& c);
  std::map<Key, Rational> terms_;
};

/// F^0 restricted to the small phase space: x_0^2 y_0 / 2 + e^{y_0}.
ExpPoly small_phase_genus0_potential();

/// exp(F_{x0x0}) == F_{y0y0} for the small-phase-space potential.
bool verify_genus0_small_phase();

}  // namespace toda
