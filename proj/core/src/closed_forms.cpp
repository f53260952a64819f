#include "toda/closed_forms.hpp"

namespace toda {

namespace {

void require_positive_degree(unsigned d) {
  if (d == 0) throw PreconditionError("one-point closed forms need degree d >= 1");
}

Rational inverse_factorial_squared(unsigned d) {
  const BigInt& f = factorial(d);
  return Rational(BigInt(1), BigInt(f * f));
}

}  // namespace

Rational sinh_coefficient(unsigned k) {
  BigInt den = factorial(2 * k + 1);
  den <<= 2 * k;
  return Rational(BigInt(1), den);
}

Series sinh_normalized(std::size_t order) {
  Series s(order);
  for (std::size_t k = 0; 2 * k <= order; ++k) s.set(2 * k, sinh_coefficient(static_cast<unsigned>(k)));
  return s;
}

Series one_point_Y_closed(unsigned d, std::size_t order) {
  require_positive_degree(d);
  return inverse_factorial_squared(d) * series_pow_int(sinh_normalized(order), 2L * d - 1);
}

Series one_point_X_closed(unsigned d, std::size_t order) {
  require_positive_degree(d);
  const Series s = sinh_normalized(order);
  const Series shifted = series_log(s) - Series::constant(harmonic_number(d), order);
  return (Rational(2) * inverse_factorial_squared(d)) * (series_pow_int(s, 2L * d - 1) * shifted);
}

Series degree0_Y_series(std::size_t order) { return series_pow_int(sinh_normalized(order), -1); }

Series degree0_X_series(std::size_t order) {
  const Series s = sinh_normalized(order);
  return Rational(2) * (series_log(s) / s);
}

}  // namespace toda
