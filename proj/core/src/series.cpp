#include "toda/series.hpp"

#include <algorithm>

namespace toda {

Series::Series(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw PreconditionError("series needs at least one coefficient");
}

Series Series::constant(const Rational& c, std::size_t order) {
  Series s(order);
  s.coeffs_[0] = c;
  return s;
}

Series Series::monomial(const Rational& c, std::size_t power, std::size_t order) {
  Series s(order);
  if (power <= order) s.coeffs_[power] = c;
  return s;
}

Series Series::truncate(std::size_t order) const {
  if (order > this->order()) throw PreconditionError("cannot raise truncation order");
  return Series(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

bool Series::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_zero(); });
}

Series& Series::operator+=(const Series& o) {
  coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

Series& Series::operator-=(const Series& o) {
  coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

Series& Series::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Series operator+(const Series& f, const Series& g) {
  Series out = f;
  return out += g;
}

Series operator-(const Series& f, const Series& g) {
  Series out = f;
  return out -= g;
}

Series operator-(const Series& f) { return Rational(-1) * f; }

Series operator*(const Rational& c, const Series& f) {
  Series out = f;
  return out *= c;
}

Series operator*(const Series& f, const Series& g) {
  const std::size_t n = std::min(f.order(), g.order());
  std::vector<Rational> out(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    if (f[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= n; ++j) {
      if (!g[j].is_zero()) out[i + j] += f[i] * g[j];
    }
  }
  return Series(std::move(out));
}

Series operator/(const Series& f, const Series& g) {
  if (g[0].is_zero()) throw PreconditionError("series division by a series with zero constant term");
  const std::size_t n = std::min(f.order(), g.order());
  std::vector<Rational> h(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    Rational acc = f[k];
    for (std::size_t j = 1; j <= k; ++j) {
      if (!g[j].is_zero()) acc -= g[j] * h[k - j];
    }
    h[k] = acc / g[0];
  }
  return Series(std::move(h));
}

Series series_add(const Series& f, const Series& g) { return f + g; }
Series series_mul(const Series& f, const Series& g) { return f * g; }
Series series_div(const Series& f, const Series& g) { return f / g; }

Series series_exp(const Series& f) {
  if (!f[0].is_zero()) throw PreconditionError("series_exp needs a zero constant term");
  // h' = f' h  =>  n h_n = sum_{j=1..n} j f_j h_{n-j}
  const std::size_t n = f.order();
  std::vector<Rational> h(n + 1);
  h[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    Rational acc;
    for (std::size_t j = 1; j <= k; ++j) {
      if (!f[j].is_zero()) acc += Rational(static_cast<long>(j)) * f[j] * h[k - j];
    }
    h[k] = acc / Rational(static_cast<long>(k));
  }
  return Series(std::move(h));
}

Series series_log(const Series& f) {
  if (f[0] != Rational(1)) throw PreconditionError("series_log needs constant term 1");
  // g' f = f'  =>  n g_n = n f_n - sum_{j=1..n-1} j g_j f_{n-j}
  const std::size_t n = f.order();
  std::vector<Rational> g(n + 1);
  for (std::size_t k = 1; k <= n; ++k) {
    Rational acc = Rational(static_cast<long>(k)) * f[k];
    for (std::size_t j = 1; j < k; ++j) {
      if (!f[k - j].is_zero()) acc -= Rational(static_cast<long>(j)) * g[j] * f[k - j];
    }
    g[k] = acc / Rational(static_cast<long>(k));
  }
  return Series(std::move(g));
}

Series series_pow_int(const Series& f, long k) {
  if (k < 0 && f[0].is_zero()) {
    throw PreconditionError("negative power of a series with zero constant term");
  }
  Series base = k < 0 ? Series::constant(1, f.order()) / f : f;
  unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  Series out = Series::constant(1, f.order());
  while (e > 0) {
    if (e & 1UL) out = out * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return out;
}

Series series_derivative(const Series& f) {
  if (f.order() == 0) throw PreconditionError("derivative of an order-0 series is unknown");
  std::vector<Rational> out(f.order());
  for (std::size_t k = 1; k <= f.order(); ++k) out[k - 1] = Rational(static_cast<long>(k)) * f[k];
  return Series(std::move(out));
}

BiSeries::BiSeries(std::size_t max_degree, std::size_t order)
    : slices_(max_degree + 1, Series(order)) {}

bool BiSeries::is_zero() const {
  return std::all_of(slices_.begin(), slices_.end(), [](const Series& s) { return s.is_zero(); });
}

BiSeries& BiSeries::operator-=(const BiSeries& o) {
  if (o.max_degree() != max_degree() || o.order() != order()) {
    throw PreconditionError("BiSeries truncations differ");
  }
  for (std::size_t d = 0; d < slices_.size(); ++d) slices_[d] -= o.slices_[d];
  return *this;
}

BiSeries biseries_exp(const BiSeries& f) {
  if (!f.slice(0).is_zero()) throw PreconditionError("biseries_exp needs a zero q^0 slice");
  // Same recurrence as series_exp, in q, with t-series coefficients.
  const std::size_t dmax = f.max_degree();
  BiSeries out(dmax, f.order());
  out.slice(0) = Series::constant(1, f.order());
  for (std::size_t n = 1; n <= dmax; ++n) {
    Series acc(f.order());
    for (std::size_t j = 1; j <= n; ++j) {
      if (f.slice(j).is_zero()) continue;
      acc += Rational(static_cast<long>(j)) * (f.slice(j) * out.slice(n - j));
    }
    out.slice(n) = Rational(BigInt(1), BigInt(static_cast<long>(n))) * acc;
  }
  return out;
}

}  // namespace toda
