#include "toda/genus01.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace toda {

Rational& DerivationTable::entry(std::size_t i) {
  constexpr std::size_t m = kMaxDerivativeIndex;
  if (i < m) return x_A[i];
  if (i < 2 * m) return x_B[i - m];
  if (i == 2 * m) return x_Q;
  if (i < 3 * m + 1) return y_A[i - 2 * m - 1];
  if (i == 3 * m + 1) return y_B0;
  if (i == 3 * m + 2) return y_Q;
  throw std::out_of_range("derivation table entry out of range");
}

std::string DerivationTable::entry_name(std::size_t i) {
  constexpr std::size_t m = kMaxDerivativeIndex;
  auto idx = [](std::size_t k) { return std::to_string(k); };
  if (i < m) return "d_x(A_" + idx(i) + ")";
  if (i < 2 * m) return "d_x(B_" + idx(i - m) + ")";
  if (i == 2 * m) return "d_x(Q)";
  if (i < 3 * m + 1) return "d_y(A_" + idx(i - 2 * m - 1) + ")";
  if (i == 3 * m + 1) return "d_y(B_0)";
  if (i == 3 * m + 2) return "d_y(Q)";
  throw std::out_of_range("derivation table entry out of range");
}

Derivations::Derivations(DerivationTable table) : table_(std::move(table)) {
  constexpr unsigned m = kMaxDerivativeIndex;
  for (unsigned i = 0; i < m; ++i) {
    x_images_[variable_slot(Variable::A, i)] = table_.x_A[i] * DiffPoly::A(i + 1);
    x_images_[variable_slot(Variable::B, i)] = table_.x_B[i] * DiffPoly::B(i + 1);
    y_images_[variable_slot(Variable::A, i)] = table_.y_A[i] * DiffPoly::B(i + 1);
  }
  x_images_[variable_slot(Variable::Q)] = table_.x_Q * (DiffPoly::Q() * DiffPoly::A(1));
  y_images_[variable_slot(Variable::Q)] = table_.y_Q * (DiffPoly::Q() * DiffPoly::B(1));

  // d_y B_i = d_x^i (d_y B_0), as long as the ring holds the result.
  DiffPoly image = table_.y_B0 * (DiffPoly::Q() * DiffPoly::A(1));
  for (unsigned i = 0; i <= m; ++i) {
    y_images_[variable_slot(Variable::B, i)] = image;
    y_b_images_ = i + 1;
    try {
      image = d_x0(image);
    } catch (const std::out_of_range&) {
      break;
    }
  }
}

const DiffPoly& Derivations::image(std::size_t slot, Direction dir) const {
  constexpr unsigned m = kMaxDerivativeIndex;
  const bool top_a = slot == variable_slot(Variable::A, m);
  const bool top_b = slot == variable_slot(Variable::B, m);
  // d_x of A_m/B_m and d_y of A_m would leave the ring.
  if (top_a || (top_b && dir == Direction::x)) {
    throw std::out_of_range("derivative of index-" + std::to_string(m) + " variable exceeds the ring bound");
  }
  if (dir == Direction::y && slot >= variable_slot(Variable::B, 0) && slot < variable_slot(Variable::Q) &&
      slot - variable_slot(Variable::B, 0) >= y_b_images_) {
    throw std::out_of_range("d_y of a high-index B exceeds the ring bound");
  }
  return dir == Direction::x ? x_images_[slot] : y_images_[slot];
}

DiffPoly Derivations::apply(const DiffPoly& p, Direction dir) const {
  DiffPoly out;
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t s = 0; s < kVariableCount; ++s) {
      if (e[s] == 0) continue;
      Exponents reduced = e;
      --reduced[s];
      out += DiffPoly::monomial(c * Rational(static_cast<long>(e[s])), reduced) * image(s, dir);
    }
  }
  return out;
}

DiffPoly Derivations::d_x0(const DiffPoly& p) const { return apply(p, Direction::x); }
DiffPoly Derivations::d_y0(const DiffPoly& p) const { return apply(p, Direction::y); }

DiffPoly delta() { return pow(DiffPoly::B(1), 2) - DiffPoly::Q() * pow(DiffPoly::A(1), 2); }

namespace {

DiffPoly times_delta_power(const DiffPoly& p, unsigned k) { return p * pow(delta(), k); }

}  // namespace

bool equal_localized(const LocalizedElement& a, const LocalizedElement& b) {
  const unsigned common = std::max(a.delta_power, b.delta_power);
  return times_delta_power(a.numerator, common - a.delta_power) ==
         times_delta_power(b.numerator, common - b.delta_power);
}

LocalizedElement operator+(const LocalizedElement& a, const LocalizedElement& b) {
  const unsigned common = std::max(a.delta_power, b.delta_power);
  return {times_delta_power(a.numerator, common - a.delta_power) +
              times_delta_power(b.numerator, common - b.delta_power),
          common};
}

LocalizedElement operator*(const DiffPoly& p, const LocalizedElement& a) {
  return {p * a.numerator, a.delta_power};
}

LogDeltaSecondDerivatives log_delta_second_derivs(const Derivations& derivations) {
  const DiffPoly D = delta();
  // (log D)'' = (D D'' - D'^2) / D^2
  auto second = [&](auto&& derive) {
    const DiffPoly first = derive(D);
    return LocalizedElement{D * derive(first) - first * first, 2};
  };
  return {second([&](const DiffPoly& p) { return derivations.d_x0(p); }),
          second([&](const DiffPoly& p) { return derivations.d_y0(p); })};
}

Genus1Report genus1_toda_report(const Derivations& derivations, const Rational& lhs_q_scale) {
  const auto logs = log_delta_second_derivs(derivations);
  const DiffPoly a0 = DiffPoly::A(0);
  const LocalizedElement a0_xx{derivations.d_x0(derivations.d_x0(a0)), 0};
  const LocalizedElement minus_a0_yy{DiffPoly::constant(-1) * derivations.d_y0(derivations.d_y0(a0)), 0};

  Genus1Report report;
  report.lhs = (lhs_q_scale * DiffPoly::Q()) * (a0_xx + logs.xx);
  report.rhs = minus_a0_yy + logs.yy;
  const unsigned common = std::max(report.lhs.delta_power, report.rhs.delta_power);
  report.difference = times_delta_power(report.lhs.numerator, common - report.lhs.delta_power) -
                      times_delta_power(report.rhs.numerator, common - report.rhs.delta_power);
  if (report.lhs.numerator.max_index() > 3 || report.rhs.numerator.max_index() > 3) {
    throw std::logic_error("genus-1 identity generated a derivative index above 3");
  }
  return report;
}

bool verify_genus1_toda() { return genus1_toda_report().holds(); }

ExpPoly ExpPoly::term(const Rational& c, unsigned x_power, unsigned y_power, int e_power) {
  ExpPoly p;
  p.add({x_power, y_power, e_power}, c);
  return p;
}

void ExpPoly::add(const Key& k, const Rational& c) {
  if (c.is_zero()) return;
  Rational& slot = terms_[k];
  slot += c;
  if (slot.is_zero()) terms_.erase(k);
}

ExpPoly operator+(const ExpPoly& a, const ExpPoly& b) {
  ExpPoly out = a;
  for (const auto& [k, c] : b.terms_) out.add(k, c);
  return out;
}

ExpPoly ExpPoly::d_x0() const {
  ExpPoly out;
  for (const auto& [k, c] : terms_) {
    const auto [px, py, pe] = k;
    if (px > 0) out.add({px - 1, py, pe}, c * Rational(static_cast<long>(px)));
  }
  return out;
}

ExpPoly ExpPoly::d_y0() const {
  ExpPoly out;
  for (const auto& [k, c] : terms_) {
    const auto [px, py, pe] = k;
    if (py > 0) out.add({px, py - 1, pe}, c * Rational(static_cast<long>(py)));
    if (pe != 0) out.add({px, py, pe}, c * Rational(pe));
  }
  return out;
}

ExpPoly ExpPoly::exp() const {
  if (terms_.empty()) return term(1, 0, 0, 0);
  if (terms_.size() == 1) {
    const auto& [k, c] = *terms_.begin();
    const auto [px, py, pe] = k;
    if (px == 0 && py == 1 && pe == 0 && c.denominator() == 1 && c.numerator().fits_sint_p()) {
      return term(1, 0, 0, static_cast<int>(c.numerator().get_si()));
    }
  }
  throw PreconditionError("ExpPoly::exp supports only integer multiples of y_0");
}

std::string ExpPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    const auto [px, py, pe] = k;
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    if (first && c.sign() < 0) os << "-";
    first = false;
    std::vector<std::string> factors;
    const Rational mag = c.sign() < 0 ? -c : c;
    if (mag != Rational(1)) factors.push_back(mag.to_string());
    auto power = [](const std::string& v, long e) { return e == 1 ? v : v + "^" + std::to_string(e); };
    if (px > 0) factors.push_back(power("x0", px));
    if (py > 0) factors.push_back(power("y0", py));
    if (pe != 0) factors.push_back(pe == 1 ? "exp(y0)" : "exp(" + std::to_string(pe) + "*y0)");
    if (factors.empty()) factors.push_back("1");
    for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
  }
  return os.str();
}

ExpPoly small_phase_genus0_potential() {
  return ExpPoly::term(Rational(BigInt(1), BigInt(2)), 2, 1, 0) + ExpPoly::term(1, 0, 0, 1);
}

bool verify_genus0_small_phase() {
  const ExpPoly f = small_phase_genus0_potential();
  return f.d_x0().d_x0().exp() == f.d_y0().d_y0();
}

}  // namespace toda
