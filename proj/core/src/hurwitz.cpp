#include "toda/hurwitz.hpp"

#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "toda/closed_forms.hpp"

namespace toda {

HurwitzTable::HurwitzTable(unsigned gmax, unsigned dmax) : gmax_(gmax), dmax_(dmax) {
  if (dmax == 0) throw PreconditionError("HurwitzTable needs dmax >= 1");
  for (unsigned g = 0; g <= gmax; ++g) {
    for (unsigned d = 1; d <= dmax; ++d) entries_.emplace(std::pair{g, d}, Rational(0));
  }
}

void HurwitzTable::check(unsigned g, unsigned d) const {
  if (g > gmax_ || d == 0 || d > dmax_) {
    throw std::out_of_range("HurwitzTable cell (" + std::to_string(g) + "," + std::to_string(d) +
                            ") outside bounds");
  }
}

const Rational& HurwitzTable::at(unsigned g, unsigned d) const {
  check(g, d);
  return entries_.at({g, d});
}

void HurwitzTable::set(unsigned g, unsigned d, Rational value) {
  check(g, d);
  entries_[{g, d}] = std::move(value);
}

namespace {

// Each triple spends degree d_i >= 1 and genus budget g_i + k_i - 1 >= 0;
// a sequence is complete when both are exhausted.
void extend(unsigned degree_left, unsigned budget_left, std::vector<Triple>& prefix,
            const std::optional<Triple>& floor,
            const std::function<void(std::span<const Triple>)>& visit) {
  if (degree_left == 0) {
    if (budget_left == 0) visit(prefix);
    return;
  }
  for (unsigned di = 1; di <= degree_left; ++di) {
    for (unsigned spend = 0; spend <= budget_left; ++spend) {
      for (unsigned gi = 0; gi <= spend; ++gi) {
        const Triple t{gi, di, spend - gi + 1};
        if (floor && t < *floor) continue;
        prefix.push_back(t);
        extend(degree_left - di, budget_left - spend, prefix, floor ? std::optional(t) : std::nullopt,
               visit);
        prefix.pop_back();
      }
    }
  }
}

}  // namespace

void enumerate_P(unsigned g, unsigned d, const std::function<void(std::span<const Triple>)>& visit) {
  if (d == 0) throw PreconditionError("P(g,d) needs d >= 1");
  std::vector<Triple> prefix;
  extend(d - 1, g, prefix, std::nullopt, visit);
}

void enumerate_P_multisets(unsigned g, unsigned d,
                           const std::function<void(std::span<const Triple>)>& visit) {
  if (d == 0) throw PreconditionError("P(g,d) needs d >= 1");
  std::vector<Triple> prefix;
  extend(d - 1, g, prefix, Triple{0, 0, 0}, visit);
}

namespace {

// 2^l * multinomial * prod d_i^{2k_i} H_{g_i,d_i}, without the 1/l! or the
// multiset correction.
Rational unweighted_term(std::span<const Triple> xi, const HurwitzTable& table) {
  std::vector<unsigned> parts;
  parts.reserve(2 * xi.size());
  Rational product(1);
  for (const Triple& t : xi) {
    const Rational& h = table.at(t.genus, t.degree);
    if (h.is_zero()) return Rational(0);
    parts.push_back(2 * t.genus + 2 * t.degree - 2);
    parts.push_back(2 * t.k);
    BigInt power;
    mpz_ui_pow_ui(power.get_mpz_t(), t.degree, 2 * t.k);
    product *= Rational(power) * h;
  }
  const BigInt coeff = multinomial_of(parts);
  BigInt two_l = 1;
  two_l <<= static_cast<mp_bitcnt_t>(xi.size());
  return Rational(BigInt(two_l * coeff)) * product;
}

void check_sum(unsigned g, unsigned d, std::span<const Triple> xi) {
  unsigned total = 0;
  for (const Triple& t : xi) total += 2 * t.genus + 2 * t.degree - 2 + 2 * t.k;
  if (total != 2 * g + 2 * d - 2) throw std::logic_error("sequence outside P(g,d)");
}

}  // namespace

Rational recursion_term(unsigned g, unsigned d, std::span<const Triple> xi, const HurwitzTable& table) {
  check_sum(g, d, xi);
  return unweighted_term(xi, table) / Rational(factorial(static_cast<unsigned>(xi.size())));
}

namespace {

HurwitzTable fill(unsigned gmax, unsigned dmax, bool ordered) {
  HurwitzTable table(gmax, dmax);
  for (unsigned d = 1; d <= dmax; ++d) {
    const Rational d_squared(static_cast<long>(d) * static_cast<long>(d));
    for (unsigned g = 0; g <= gmax; ++g) {
      Rational sum;
      if (ordered) {
        enumerate_P(g, d, [&](std::span<const Triple> xi) { sum += recursion_term(g, d, xi, table); });
      } else {
        enumerate_P_multisets(g, d, [&](std::span<const Triple> xi) {
          check_sum(g, d, xi);
          // ordered arrangements l!/prod m! cancel the 1/l! of the ordered sum
          BigInt multiplicity_den = 1;
          std::size_t run = 1;
          for (std::size_t i = 1; i <= xi.size(); ++i) {
            if (i < xi.size() && xi[i] == xi[i - 1]) {
              ++run;
            } else {
              multiplicity_den *= factorial(static_cast<unsigned>(run));
              run = 1;
            }
          }
          sum += unweighted_term(xi, table) / Rational(multiplicity_den);
        });
      }
      table.set(g, d, sum / d_squared);
    }
  }
  return table;
}

}  // namespace

HurwitzTable hurwitz_by_recursion(unsigned gmax, unsigned dmax) { return fill(gmax, dmax, false); }

HurwitzTable hurwitz_by_ordered_recursion(unsigned gmax, unsigned dmax) { return fill(gmax, dmax, true); }

BiSeries toda_residual_H(const HurwitzTable& table, unsigned max_genus, unsigned max_degree) {
  if (max_degree == 0) throw PreconditionError("toda_residual_H needs max_degree >= 1");
  if (!table.covers(max_genus, max_degree)) {
    throw PreconditionError("Hurwitz table does not cover the requested residual bounds");
  }
  const std::size_t order = 2 * static_cast<std::size_t>(max_genus);
  const unsigned qmax = max_degree - 1;

  auto normalized = [&](unsigned g, unsigned d) {
    return table.at(g, d) / Rational(factorial(2 * g + 2 * d - 2));
  };

  // Exponent: sum over g, d, k>0 of 2 d^{2k}/(2k)! h_{g,d} t^{2g-2+2k} q^d.
  BiSeries argument(qmax, order);
  for (unsigned d = 1; d <= qmax; ++d) {
    Series slice(order);
    for (unsigned g = 0; g <= max_genus; ++g) {
      const Rational h = normalized(g, d);
      if (h.is_zero()) continue;
      for (unsigned k = 1; 2 * g + 2 * k - 2 <= order; ++k) {
        BigInt power;
        mpz_ui_pow_ui(power.get_mpz_t(), d, 2 * k);
        const Rational c = Rational(BigInt(2 * power), factorial(2 * k)) * h;
        const std::size_t p = 2 * g + 2 * k - 2;
        slice.set(p, slice[p] + c);
      }
    }
    argument.slice(d) = slice;
  }
  BiSeries residual = biseries_exp(argument);

  // t^2 H_yy / q: sum d^2 h_{g,d} t^{2g} q^{d-1}.
  BiSeries rhs(qmax, order);
  for (unsigned d = 1; d <= max_degree; ++d) {
    Series& slice = rhs.slice(d - 1);
    for (unsigned g = 0; g <= max_genus; ++g) {
      slice.set(2 * g, Rational(static_cast<long>(d) * static_cast<long>(d)) * normalized(g, d));
    }
  }
  residual -= rhs;
  return residual;
}

std::optional<ResidualCell> first_nonzero(const BiSeries& residual) {
  for (std::size_t d = 0; d <= residual.max_degree(); ++d) {
    for (std::size_t k = 0; k <= residual.order(); ++k) {
      if (!residual.at(d, k).is_zero()) return ResidualCell{d, k, residual.at(d, k)};
    }
  }
  return std::nullopt;
}

std::vector<OnePointSeries> one_point_by_recursion(unsigned dmax, std::size_t order) {
  if (dmax == 0) throw PreconditionError("one_point_by_recursion needs dmax >= 1");
  const Series s = sinh_normalized(order);
  const Series s_squared = s * s;
  std::vector<OnePointSeries> out;
  out.reserve(dmax + 1);
  out.push_back({degree0_Y_series(order), degree0_X_series(order)});
  for (unsigned d = 1; d <= dmax; ++d) {
    const Rational inv_d2(BigInt(1), BigInt(static_cast<long>(d) * static_cast<long>(d)));
    Series y = inv_d2 * (s_squared * out.back().Y);
    Series x = inv_d2 * (s_squared * out.back().X - Rational(2L * d) * y);
    out.push_back({std::move(y), std::move(x)});
  }
  return out;
}

std::string hurwitz_table_to_json(const HurwitzTable& table) {
  nlohmann::ordered_json doc;
  doc["schema_version"] = kHurwitzSchemaVersion;
  doc["gmax"] = table.gmax();
  doc["dmax"] = table.dmax();
  doc["entries"] = nlohmann::ordered_json::array();
  for (const auto& [key, value] : table.entries()) {
    doc["entries"].push_back({{"g", key.first}, {"d", key.second}, {"H", value.to_string()}});
  }
  return doc.dump(2) + "\n";
}

HurwitzTable hurwitz_table_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(std::string("Hurwitz table: invalid JSON: ") + e.what());
  }
  try {
    if (!doc.contains("schema_version")) throw std::runtime_error("Hurwitz table: missing schema_version");
    const int version = doc.at("schema_version").get<int>();
    if (version != kHurwitzSchemaVersion) {
      throw std::runtime_error("Hurwitz table: unsupported schema_version " + std::to_string(version));
    }
    HurwitzTable table(doc.at("gmax").get<unsigned>(), doc.at("dmax").get<unsigned>());
    std::set<std::pair<unsigned, unsigned>> seen;
    for (const auto& entry : doc.at("entries")) {
      const auto g = entry.at("g").get<unsigned>();
      const auto d = entry.at("d").get<unsigned>();
      table.set(g, d, Rational::parse(entry.at("H").get<std::string>()));
      if (!seen.emplace(g, d).second) throw std::runtime_error("Hurwitz table: duplicate entry");
    }
    if (seen.size() != table.entries().size()) throw std::runtime_error("Hurwitz table: missing entries");
    return table;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("Hurwitz table: malformed document: ") + e.what());
  } catch (const std::out_of_range& e) {
    throw std::runtime_error(std::string("Hurwitz table: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("Hurwitz table: ") + e.what());
  }
}

}  // namespace toda
