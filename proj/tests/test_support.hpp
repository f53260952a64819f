#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "toda/series.hpp"

namespace toda::testing {

inline Rational R(std::string_view text) { return Rational::parse(text); }

/// Small random rationals p/q with |p| <= 9, 1 <= q <= 6.
class RationalGen {
 public:
  explicit RationalGen(std::uint32_t seed) : rng_(seed) {}

  Rational next() {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 6);
    return Rational(BigInt(num(rng_)), BigInt(den(rng_)));
  }

  Rational nonzero() {
    Rational r;
    while (r.is_zero()) r = next();
    return r;
  }

  Series series(std::size_t order) {
    Series s(order);
    for (std::size_t k = 0; k <= order; ++k) s.set(k, next());
    return s;
  }

  std::size_t order(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

}  // namespace toda::testing
