#include "toda/rational.hpp"

#include <deque>
#include <mutex>

namespace toda {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw PreconditionError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  auto parse_int = [](std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty integer in rational literal");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw std::invalid_argument("malformed rational literal");
    for (std::size_t i = start; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') {
        throw std::invalid_argument("malformed rational literal: " + std::string(s));
      }
    }
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return BigInt(digits, 10);
  };
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const BigInt den = parse_int(text.substr(slash + 1));
  if (den <= 0) throw std::invalid_argument("rational literal needs a positive denominator");
  return Rational(parse_int(text.substr(0, slash)), den);
}

std::string Rational::to_string() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw PreconditionError("division by zero rational");
  value_ /= o.value_;
  return *this;
}

const BigInt& factorial(unsigned n) {
  // deque keeps references stable while the cache grows
  static std::deque<BigInt> cache{BigInt(1)};
  static std::mutex mutex;
  std::lock_guard lock(mutex);
  while (cache.size() <= n) {
    cache.push_back(cache.back() * static_cast<unsigned long>(cache.size()));
  }
  return cache[n];
}

BigInt multinomial(std::initializer_list<unsigned> parts) { return multinomial_of(parts); }

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

const Rational& harmonic_number(unsigned d) {
  static std::deque<Rational> cache{Rational(0)};
  static std::mutex mutex;
  std::lock_guard lock(mutex);
  while (cache.size() <= d) {
    const auto j = static_cast<long>(cache.size());
    cache.push_back(cache.back() + Rational(BigInt(1), BigInt(j)));
  }
  return cache[d];
}

}  // namespace toda
