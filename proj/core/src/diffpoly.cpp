#include "toda/diffpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace toda {

std::size_t variable_slot(Variable kind, unsigned index) {
  if (kind != Variable::Q && index > kMaxDerivativeIndex) {
    throw std::out_of_range("derivative index " + std::to_string(index) + " exceeds the ring bound " +
                            std::to_string(kMaxDerivativeIndex));
  }
  switch (kind) {
    case Variable::A: return index;
    case Variable::B: return kMaxDerivativeIndex + 1 + index;
    case Variable::Q: return kVariableCount - 1;
  }
  throw std::logic_error("unknown variable kind");
}

bool GradedLex::operator()(const Exponents& a, const Exponents& b) const {
  const unsigned da = std::accumulate(a.begin(), a.end(), 0U);
  const unsigned db = std::accumulate(b.begin(), b.end(), 0U);
  if (da != db) return da < db;
  return a < b;
}

DiffPoly DiffPoly::constant(const Rational& c) { return monomial(c, Exponents{}); }

DiffPoly DiffPoly::monomial(const Rational& c, const Exponents& e) {
  DiffPoly p;
  p.add_term(e, c);
  return p;
}

DiffPoly DiffPoly::A(unsigned i) {
  Exponents e{};
  e[variable_slot(Variable::A, i)] = 1;
  return monomial(1, e);
}

DiffPoly DiffPoly::B(unsigned i) {
  Exponents e{};
  e[variable_slot(Variable::B, i)] = 1;
  return monomial(1, e);
}

DiffPoly DiffPoly::Q() {
  Exponents e{};
  e[variable_slot(Variable::Q)] = 1;
  return monomial(1, e);
}

void DiffPoly::add_term(const Exponents& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

int DiffPoly::max_index() const {
  int best = -1;
  for (const auto& [e, c] : terms_) {
    for (unsigned i = 0; i <= kMaxDerivativeIndex; ++i) {
      if (e[variable_slot(Variable::A, i)] != 0 || e[variable_slot(Variable::B, i)] != 0) {
        best = std::max(best, static_cast<int>(i));
      }
    }
  }
  return best;
}

DiffPoly& DiffPoly::operator+=(const DiffPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

DiffPoly& DiffPoly::operator-=(const DiffPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

DiffPoly& DiffPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

DiffPoly operator*(const DiffPoly& a, const DiffPoly& b) {
  DiffPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e;
      for (std::size_t s = 0; s < kVariableCount; ++s) e[s] = static_cast<std::uint16_t>(ea[s] + eb[s]);
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

DiffPoly pow(const DiffPoly& p, unsigned k) {
  DiffPoly out = DiffPoly::constant(1);
  for (unsigned i = 0; i < k; ++i) out = out * p;
  return out;
}

namespace {

std::string slot_name(std::size_t s) {
  if (s == kVariableCount - 1) return "Q";
  if (s <= kMaxDerivativeIndex) return "A_" + std::to_string(s);
  return "B_" + std::to_string(s - kMaxDerivativeIndex - 1);
}

}  // namespace

std::string DiffPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest degree first reads most naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool is_constant = std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
    bool wrote = false;
    if (mag != Rational(1) || is_constant) {
      os << mag;
      wrote = true;
    }
    // Q first, then A's, then B's.
    std::array<std::size_t, kVariableCount> order{};
    order[0] = kVariableCount - 1;
    for (std::size_t s = 0; s + 1 < kVariableCount; ++s) order[s + 1] = s;
    for (std::size_t s : order) {
      if (e[s] == 0) continue;
      if (wrote) os << "*";
      os << slot_name(s);
      if (e[s] > 1) os << "^" << e[s];
      wrote = true;
    }
  }
  return os.str();
}

}  // namespace toda
