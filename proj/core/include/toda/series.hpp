#pragma once

#include <cstddef>
#include <vector>

#include "toda/rational.hpp"

namespace toda {

/// Truncated power series c_0 + c_1 t + ... + c_N t^N over the rationals.
///
/// The truncation order N is explicit: coefficients above t^N are unknown,
/// not zero, so binary operations produce a result at the smaller of the
/// two input orders.
class Series {
 public:
  /// The zero series at order `order`.
  explicit Series(std::size_t order = 0) : coeffs_(order + 1) {}
  /// Takes ownership of the coefficients; order is coeffs.size() - 1.
  explicit Series(std::vector<Rational> coeffs);

  static Series constant(const Rational& c, std::size_t order);
  /// c * t^power, truncated (zero if power > order).
  static Series monomial(const Rational& c, std::size_t power, std::size_t order);

  [[nodiscard]] std::size_t order() const { return coeffs_.size() - 1; }
  [[nodiscard]] const Rational& operator[](std::size_t k) const { return coeffs_.at(k); }
  [[nodiscard]] const std::vector<Rational>& coeffs() const { return coeffs_; }
  void set(std::size_t k, Rational value) { coeffs_.at(k) = std::move(value); }

  /// Same coefficients up to a lower order.
  [[nodiscard]] Series truncate(std::size_t order) const;
  [[nodiscard]] bool is_zero() const;

  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  Series& operator*=(const Rational& c);

  friend bool operator==(const Series&, const Series&) = default;

 private:
  std::vector<Rational> coeffs_;
};

Series operator+(const Series& f, const Series& g);
Series operator-(const Series& f, const Series& g);
Series operator-(const Series& f);
Series operator*(const Series& f, const Series& g);
Series operator*(const Rational& c, const Series& f);
Series operator/(const Series& f, const Series& g);

Series series_add(const Series& f, const Series& g);
Series series_mul(const Series& f, const Series& g);
/// Requires g[0] != 0.
Series series_div(const Series& f, const Series& g);
/// Requires f[0] == 0.
Series series_exp(const Series& f);
/// Requires f[0] == 1. The result has zero constant term.
Series series_log(const Series& f);
/// Negative powers require f[0] != 0.
Series series_pow_int(const Series& f, long k);
/// Formal d/dt; the result has order N - 1. Requires N >= 1.
Series series_derivative(const Series& f);

/// Bivariate series sum_d q^d * slice_d(t), with slices for d = 0..D sharing
/// one t-order.
class BiSeries {
 public:
  BiSeries(std::size_t max_degree, std::size_t order);

  [[nodiscard]] std::size_t max_degree() const { return slices_.size() - 1; }
  [[nodiscard]] std::size_t order() const { return slices_.front().order(); }
  [[nodiscard]] const Series& slice(std::size_t d) const { return slices_.at(d); }
  [[nodiscard]] Series& slice(std::size_t d) { return slices_.at(d); }
  [[nodiscard]] const Rational& at(std::size_t d, std::size_t k) const { return slices_.at(d)[k]; }
  [[nodiscard]] bool is_zero() const;

  BiSeries& operator-=(const BiSeries& o);

 private:
  std::vector<Series> slices_;
};

/// exp of a bivariate series with zero q^0 slice, truncated in both variables.
BiSeries biseries_exp(const BiSeries& f);

}  // namespace toda
