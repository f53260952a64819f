#include "cli.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "toda/closed_forms.hpp"
#include "toda/degree_one.hpp"
#include "toda/genus01.hpp"
#include "toda/hurwitz.hpp"
#include "toda/oracle.hpp"

namespace toda::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TextTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void render(std::ostream& out, OutputFormat format) const {
    if (format == OutputFormat::csv) {
      auto field = [](const std::string& s) {
        return s.find(',') == std::string::npos ? s : "\"" + s + "\"";
      };
      auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << field(cells[i]);
        out << "\n";
      };
      line(header);
      for (const auto& r : rows) line(r);
      return;
    }
    std::vector<std::size_t> width(header.size());
    for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
    }
    auto line = [&](const std::vector<std::string>& cells) {
      std::string text;
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) text += "  ";
        text += cells[i];
        if (i + 1 < cells.size()) text.append(width[i] - cells[i].size(), ' ');
      }
      out << text << "\n";
    };
    line(header);
    for (const auto& r : rows) line(r);
  }
};

// Advisory lock on a sidecar file, held for the lifetime of the object.
class CacheLock {
 public:
  CacheLock(const std::string& cache_path, bool exclusive) {
    const std::string lock_path = cache_path + ".lock";
    fd_ = ::open(lock_path.c_str(), O_RDWR | O_CREAT, 0644);
    if (fd_ < 0) throw std::runtime_error("cannot open cache lock " + lock_path);
    if (::flock(fd_, exclusive ? LOCK_EX : LOCK_SH) != 0) {
      ::close(fd_);
      throw std::runtime_error("cannot lock cache " + cache_path);
    }
  }
  ~CacheLock() {
    ::flock(fd_, LOCK_UN);
    ::close(fd_);
  }
  CacheLock(const CacheLock&) = delete;
  CacheLock& operator=(const CacheLock&) = delete;

 private:
  int fd_ = -1;
};

void write_cache(const std::string& path, const HurwitzTable& table) {
  CacheLock lock(path, true);
  const std::string tmp = path + ".tmp";
  {
    std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
    if (!file) throw std::runtime_error("cannot write cache " + tmp);
    file << hurwitz_table_to_json(table);
  }
  std::filesystem::rename(tmp, path);
}

std::optional<HurwitzTable> read_cache(const std::string& path) {
  if (!std::filesystem::exists(path)) return std::nullopt;
  CacheLock lock(path, false);
  std::ifstream file(path, std::ios::binary);
  std::stringstream buffer;
  buffer << file.rdbuf();
  return hurwitz_table_from_json(buffer.str());
}

std::string backend_name(OracleBackend b) { return b == OracleBackend::direct ? "direct" : "dp-sieve"; }

std::vector<OracleBackend> backends_for(BackendChoice choice) {
  switch (choice) {
    case BackendChoice::direct: return {OracleBackend::direct};
    case BackendChoice::dp_sieve: return {OracleBackend::dp_sieve};
    case BackendChoice::both: return {OracleBackend::direct, OracleBackend::dp_sieve};
  }
  return {};
}

// ---- hurwitz ---------------------------------------------------------------

int cmd_hurwitz(const Config& cfg, const std::string& method, std::ostream& out) {
  if (cfg.dmax == 0) throw UsageError("--dmax must be at least 1");
  const bool use_recursion = method != "oracle";
  const bool use_oracle = method != "recursion";
  if (use_oracle && cfg.dmax > cfg.oracle_dmax) {
    throw ResourceLimitError("--dmax " + std::to_string(cfg.dmax) + " exceeds the oracle bound " +
                             std::to_string(cfg.oracle_dmax));
  }

  std::optional<HurwitzTable> recursion;
  if (use_recursion) recursion = hurwitz_by_recursion(cfg.gmax, cfg.dmax);
  const std::vector<OracleBackend> backends = use_oracle ? backends_for(cfg.oracle_backend) : std::vector<OracleBackend>{};

  TextTable table;
  table.header = {"g", "d"};
  if (use_recursion) table.header.push_back("recursion");
  for (auto b : backends) table.header.push_back(backends.size() > 1 ? "oracle:" + backend_name(b) : "oracle");
  const bool compare = (use_recursion ? 1 : 0) + backends.size() > 1;
  if (compare) table.header.push_back("match");

  Json entries = Json::array();
  bool all_match = true;
  for (unsigned g = 0; g <= cfg.gmax; ++g) {
    for (unsigned d = 1; d <= cfg.dmax; ++d) {
      std::vector<Rational> values;
      if (recursion) values.push_back(recursion->at(g, d));
      for (auto b : backends) values.push_back(hurwitz_oracle(g, d, b, cfg.oracle_dmax));
      bool match = true;
      for (const auto& v : values) match = match && v == values.front();
      all_match = all_match && match;

      std::vector<std::string> row{std::to_string(g), std::to_string(d)};
      Json entry{{"g", g}, {"d", d}};
      std::size_t i = 0;
      if (recursion) entry["recursion"] = values[i].to_string(), row.push_back(values[i++].to_string());
      for (auto b : backends) {
        entry[backends.size() > 1 ? "oracle_" + backend_name(b) : "oracle"] = values[i].to_string();
        row.push_back(values[i++].to_string());
      }
      if (compare) {
        entry["match"] = match;
        row.push_back(match ? "yes" : "NO");
      }
      table.rows.push_back(std::move(row));
      entries.push_back(std::move(entry));
    }
  }

  if (cfg.output_format == OutputFormat::json) {
    Json doc{{"gmax", cfg.gmax}, {"dmax", cfg.dmax}, {"method", method}, {"entries", entries}};
    if (compare) doc["all_match"] = all_match;
    out << doc.dump(2) << "\n";
  } else {
    table.render(out, cfg.output_format);
  }
  if (recursion && cfg.cache_path) write_cache(*cfg.cache_path, *recursion);
  return all_match ? kExitOk : kExitMismatch;
}

// ---- series output ---------------------------------------------------------

struct NamedSeries {
  std::string name;
  Series recursion;
  std::optional<Series> closed;
};

int emit_series(const Config& cfg, const std::vector<NamedSeries>& items, bool compare, std::ostream& out) {
  bool all_match = true;
  std::optional<std::pair<std::string, std::size_t>> first_bad;
  for (const auto& item : items) {
    if (!compare) continue;
    for (std::size_t k = 0; k <= cfg.lambda_order; ++k) {
      if (item.recursion[k] != (*item.closed)[k]) {
        all_match = false;
        if (!first_bad) first_bad = {item.name, k};
      }
    }
  }

  if (cfg.output_format == OutputFormat::json) {
    Json rows = Json::array();
    for (const auto& item : items) {
      Json coeffs = Json::array();
      for (const auto& c : item.recursion.coeffs()) coeffs.push_back(c.to_string());
      Json row{{"name", item.name}, {"coefficients", coeffs}};
      if (compare) {
        Json closed = Json::array();
        for (const auto& c : item.closed->coeffs()) closed.push_back(c.to_string());
        row["closed"] = closed;
      }
      rows.push_back(row);
    }
    Json doc{{"order", cfg.lambda_order}, {"series", rows}};
    if (compare) doc["match"] = all_match;
    out << doc.dump(2) << "\n";
  } else if (cfg.output_format == OutputFormat::csv) {
    TextTable table;
    table.header = compare ? std::vector<std::string>{"series", "power", "recursion", "closed", "match"}
                           : std::vector<std::string>{"series", "power", "coefficient"};
    for (const auto& item : items) {
      for (std::size_t k = 0; k <= cfg.lambda_order; ++k) {
        std::vector<std::string> row{item.name, std::to_string(k), item.recursion[k].to_string()};
        if (compare) {
          row.push_back((*item.closed)[k].to_string());
          row.push_back(item.recursion[k] == (*item.closed)[k] ? "yes" : "NO");
        }
        table.rows.push_back(std::move(row));
      }
    }
    table.render(out, OutputFormat::csv);
  } else {
    auto join = [](const Series& s) {
      std::string text;
      for (std::size_t k = 0; k <= s.order(); ++k) text += (k ? ", " : "") + s[k].to_string();
      return text;
    };
    for (const auto& item : items) {
      if (compare && item.recursion != *item.closed) {
        out << item.name << " (recursion): " << join(item.recursion) << "\n";
        out << item.name << " (closed):    " << join(*item.closed) << "\n";
      } else {
        out << item.name << ": " << join(item.recursion) << "\n";
      }
    }
    if (compare) {
      if (all_match) {
        out << "recursion and closed forms agree through t^" << cfg.lambda_order << "\n";
      } else {
        out << "MISMATCH in " << first_bad->first << " at t^" << first_bad->second << "\n";
      }
    }
  }
  return all_match ? kExitOk : kExitMismatch;
}

int cmd_one_point(const Config& cfg, const std::string& which, const std::string& source, std::ostream& out) {
  if (cfg.dmax == 0) throw UsageError("--dmax must be at least 1");
  std::vector<OnePointSeries> rec;
  if (source != "closed") rec = one_point_by_recursion(cfg.dmax, cfg.lambda_order);
  std::vector<NamedSeries> items;
  for (unsigned d = 1; d <= cfg.dmax; ++d) {
    std::optional<Series> closed;
    if (source != "recursion") {
      closed = which == "Y" ? one_point_Y_closed(d, cfg.lambda_order) : one_point_X_closed(d, cfg.lambda_order);
    }
    const std::string name = which + "_" + std::to_string(d);
    if (source == "closed") {
      items.push_back({name, *closed, std::nullopt});
    } else {
      items.push_back({name, which == "Y" ? rec[d].Y : rec[d].X, closed});
    }
  }
  return emit_series(cfg, items, source == "both", out);
}

int cmd_series(const Config& cfg, const std::string& name, unsigned degree, std::ostream& out) {
  const std::size_t n = cfg.lambda_order;
  Series s(n);
  std::string label = name;
  if (name == "S") {
    s = sinh_normalized(n);
  } else if (name == "Y0") {
    s = degree0_Y_series(n);
  } else if (name == "X0") {
    s = degree0_X_series(n);
  } else if (name == "Y" || name == "X") {
    if (degree == 0) throw UsageError("--degree must be at least 1 for Y and X");
    s = name == "Y" ? one_point_Y_closed(degree, n) : one_point_X_closed(degree, n);
    label = name + "_" + std::to_string(degree);
  } else {
    throw UsageError("unknown series '" + name + "' (expected S, Y0, X0, Y or X)");
  }
  return emit_series(cfg, {{label, s, std::nullopt}}, false, out);
}

int cmd_degree_one(const Config& cfg, const std::string& key_text, std::optional<unsigned> genus,
                   std::ostream& out) {
  DescendentKey key;
  try {
    key = DescendentKey::parse(key_text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const Rational value = genus ? degree1_invariant(key, *genus) : degree1_invariant(key);
  std::string key_str;
  for (std::size_t i = 0; i < key.size(); ++i) key_str += (i ? "," : "") + std::to_string(key.indices()[i]);

  if (cfg.output_format == OutputFormat::json) {
    Json doc{{"key", key.indices()}};
    if (genus) {
      doc["genus"] = *genus;
    } else if (key.genus()) {
      doc["genus"] = *key.genus();
    } else {
      doc["genus"] = nullptr;
    }
    doc["value"] = value.to_string();
    out << doc.dump(2) << "\n";
  } else if (cfg.output_format == OutputFormat::csv) {
    TextTable t{{"key", "value"}, {{key_str, value.to_string()}}};
    t.render(out, OutputFormat::csv);
  } else {
    out << value << "\n";
  }
  return kExitOk;
}

// ---- verify ----------------------------------------------------------------

struct VerifyOutcome {
  bool passed;
  std::vector<std::string> lines;
};

VerifyOutcome verify_genus0() {
  const ExpPoly f = small_phase_genus0_potential();
  const ExpPoly fxx = f.d_x0().d_x0();
  const ExpPoly lhs = fxx.exp();
  const ExpPoly rhs = f.d_y0().d_y0();
  return {lhs == rhs,
          {"F = " + f.to_string(), "F_x0x0 = " + fxx.to_string(), "exp(F_x0x0) = " + lhs.to_string(),
           "F_y0y0 = " + rhs.to_string()}};
}

VerifyOutcome verify_genus1() {
  const Genus1Report r = genus1_toda_report();
  return {r.holds(),
          {"lhs terms: " + std::to_string(r.lhs.numerator.term_count()) + " (over Delta^" +
               std::to_string(r.lhs.delta_power) + ")",
           "rhs terms: " + std::to_string(r.rhs.numerator.term_count()) + " (over Delta^" +
               std::to_string(r.rhs.delta_power) + ")",
           "residual: " + r.difference.to_string()}};
}

VerifyOutcome verify_toda_h(const Config& cfg) {
  std::vector<std::string> lines;
  std::optional<HurwitzTable> table;
  if (cfg.cache_path) {
    table = read_cache(*cfg.cache_path);
    if (table && !table->covers(cfg.gmax, cfg.dmax)) {
      throw UsageError("cache " + *cfg.cache_path + " does not cover gmax=" + std::to_string(cfg.gmax) +
                       " dmax=" + std::to_string(cfg.dmax));
    }
    if (table) lines.push_back("table: " + *cfg.cache_path);
  }
  if (!table) {
    table = hurwitz_by_recursion(cfg.gmax, cfg.dmax);
    lines.push_back("table: recursion");
  }
  const BiSeries residual = toda_residual_H(*table, cfg.gmax, cfg.dmax);
  lines.push_back("truncation: q^" + std::to_string(cfg.dmax - 1) + ", t^" + std::to_string(2 * cfg.gmax));
  if (const auto bad = first_nonzero(residual)) {
    lines.push_back("first nonzero residual at q^" + std::to_string(bad->q_power) + " t^" +
                    std::to_string(bad->t_power) + " (g=" + std::to_string(bad->t_power / 2) +
                    ", d=" + std::to_string(bad->q_power + 1) + "): " + bad->value.to_string());
    return {false, lines};
  }
  lines.push_back("residual: 0");
  return {true, lines};
}

VerifyOutcome verify_degree1(const Config& cfg, unsigned max_index, unsigned insertions) {
  const auto report = degree1_generating_check(cfg.gmax, max_index, insertions);
  std::vector<std::string> lines{"monomials compared: " + std::to_string(report.monomials_compared) + " (" +
                                 std::to_string(report.nonzero_monomials) + " nonzero)"};
  bool ok = report.passed();
  if (!ok) {
    const auto& m = report.mismatches.front();
    std::string mono;
    for (std::size_t i = 0; i < m.exponents.size(); ++i) {
      if (m.exponents[i]) mono += "y_" + std::to_string(i) + "^" + std::to_string(m.exponents[i]) + " ";
    }
    lines.push_back("first mismatch at " + mono + "t^" + std::to_string(m.t_power) + ": lhs " + m.lhs.to_string() +
                    ", rhs " + m.rhs.to_string());
  }
  const bool y1 = degree1_consistency_with_Y1(cfg.lambda_order);
  lines.push_back(std::string("agreement with Y_1 through t^") + std::to_string(cfg.lambda_order) + ": " +
                  (y1 ? "yes" : "NO"));
  return {ok && y1, lines};
}

VerifyOutcome verify_one_point(const Config& cfg) {
  const auto rec = one_point_by_recursion(cfg.dmax, cfg.lambda_order);
  for (unsigned d = 1; d <= cfg.dmax; ++d) {
    const Series y = one_point_Y_closed(d, cfg.lambda_order);
    const Series x = one_point_X_closed(d, cfg.lambda_order);
    for (std::size_t k = 0; k <= cfg.lambda_order; ++k) {
      if (rec[d].Y[k] != y[k]) {
        return {false, {"Y_" + std::to_string(d) + " differs at t^" + std::to_string(k) + ": recursion " +
                        rec[d].Y[k].to_string() + ", closed " + y[k].to_string()}};
      }
      if (rec[d].X[k] != x[k]) {
        return {false, {"X_" + std::to_string(d) + " differs at t^" + std::to_string(k) + ": recursion " +
                        rec[d].X[k].to_string() + ", closed " + x[k].to_string()}};
      }
    }
  }
  return {true, {"Y_d and X_d agree for d <= " + std::to_string(cfg.dmax) + " through t^" +
                 std::to_string(cfg.lambda_order)}};
}

int cmd_verify(const Config& cfg, const std::string& target, unsigned max_index, unsigned insertions,
               std::ostream& out) {
  VerifyOutcome outcome;
  if (target == "genus0") {
    outcome = verify_genus0();
  } else if (target == "genus1") {
    outcome = verify_genus1();
  } else if (target == "toda-h") {
    if (cfg.dmax == 0) throw UsageError("--dmax must be at least 1");
    outcome = verify_toda_h(cfg);
  } else if (target == "degree1-gen") {
    outcome = verify_degree1(cfg, max_index, insertions);
  } else if (target == "one-point") {
    if (cfg.dmax == 0) throw UsageError("--dmax must be at least 1");
    outcome = verify_one_point(cfg);
  } else {
    throw UsageError("unknown verify target '" + target + "'");
  }
  if (cfg.output_format == OutputFormat::json) {
    out << Json{{"target", target}, {"status", outcome.passed ? "PASS" : "FAIL"}, {"details", outcome.lines}}.dump(2)
        << "\n";
  } else {
    for (const auto& line : outcome.lines) out << line << "\n";
    out << (outcome.passed ? "PASS" : "FAIL") << " " << target << "\n";
  }
  return outcome.passed ? kExitOk : kExitMismatch;
}

std::optional<std::string> env(const char* name) {
  if (const char* v = std::getenv(name); v && *v) return std::string(v);
  return std::nullopt;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  if (auto v = env(kCacheEnv)) cfg.cache_path = *v;
  if (auto v = env(kOracleDmaxEnv)) {
    try {
      cfg.oracle_dmax = static_cast<unsigned>(std::stoul(*v));
    } catch (const std::exception&) {
      err << "error: " << kOracleDmaxEnv << " must be a positive integer\n";
      return kExitUsage;
    }
  }

  CLI::App app{"Exact Toda-equation recursions for the Gromov-Witten theory of the sphere and simple Hurwitz numbers"};
  app.require_subcommand(1);

  const std::map<std::string, OutputFormat> formats{
      {"table", OutputFormat::table}, {"csv", OutputFormat::csv}, {"json", OutputFormat::json}};
  const std::map<std::string, BackendChoice> backends{
      {"direct", BackendChoice::direct}, {"dp-sieve", BackendChoice::dp_sieve}, {"both", BackendChoice::both}};

  std::optional<unsigned> gmax_flag;
  std::optional<unsigned> dmax_flag;
  std::optional<std::size_t> order_flag;
  std::string cache_flag;

  auto add_common = [&](CLI::App* sub, bool bounds, bool order) {
    sub->add_option("--format", cfg.output_format, "Output format: table, csv or json")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--cache", cache_flag, std::string("Hurwitz table cache file (env ") + kCacheEnv + ")");
    if (bounds) {
      sub->add_option("--gmax", gmax_flag, "Largest genus");
      sub->add_option("--dmax", dmax_flag, "Largest degree");
    }
    if (order) sub->add_option("--order", order_flag, "Truncation order in t (lambda)");
  };

  std::string method = "recursion";
  auto* hurwitz = app.add_subcommand("hurwitz", "Table of simple Hurwitz numbers H_{g,d}");
  add_common(hurwitz, true, false);
  hurwitz->add_option("--method", method, "recursion, oracle or both")
      ->check(CLI::IsMember({"recursion", "oracle", "both"}));
  hurwitz->add_option("--backend", cfg.oracle_backend, "Oracle backend: direct, dp-sieve or both")
      ->transform(CLI::CheckedTransformer(backends, CLI::ignore_case));
  hurwitz->add_option("--oracle-dmax", cfg.oracle_dmax,
                      std::string("Largest degree the oracle accepts (env ") + kOracleDmaxEnv + ")")
      ->check(CLI::PositiveNumber);

  std::string which = "Y";
  std::string source = "both";
  auto* one_point = app.add_subcommand("one-point", "Genus expansions Y_d(t), X_d(t) of the 1-point series");
  add_common(one_point, true, true);
  one_point->add_option("--series", which, "Y or X")->check(CLI::IsMember({"Y", "X"}));
  one_point->add_option("--source", source, "recursion, closed or both")
      ->check(CLI::IsMember({"recursion", "closed", "both"}));

  std::string key_text;
  std::optional<unsigned> genus_flag;
  auto* degree_one = app.add_subcommand("degree-one", "Degree-1 descendent invariant <tau_a1(y)...tau_an(y)>");
  add_common(degree_one, false, false);
  degree_one->add_option("key", key_text, "Comma-separated descendent indices, e.g. 2,2,4");
  degree_one->add_option("--genus", genus_flag, "Evaluate at this genus instead of sum/2");

  std::string target;
  unsigned max_index = 8;
  unsigned insertions = 8;
  auto* verify = app.add_subcommand("verify", "Run an identity check; exit 0 on PASS");
  add_common(verify, true, true);
  verify->add_option("target", target, "genus0, genus1, toda-h, degree1-gen or one-point")
      ->required()
      ->check(CLI::IsMember({"genus0", "genus1", "toda-h", "degree1-gen", "one-point"}));
  verify->add_option("--max-index", max_index, "degree1-gen: largest descendent index K");
  verify->add_option("--insertions", insertions, "degree1-gen: largest number of insertions");

  std::string series_name;
  unsigned series_degree = 1;
  auto* series = app.add_subcommand("series", "Dump a closed-form series: S, Y0, X0, Y or X");
  add_common(series, false, true);
  series->add_option("name", series_name, "S, Y0, X0, Y or X")->required();
  series->add_option("--degree", series_degree, "Degree d for Y and X");

  std::vector<const char*> argv{"toda"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  if (!cache_flag.empty()) cfg.cache_path = cache_flag;
  if (order_flag) cfg.lambda_order = *order_flag;

  try {
    if (*hurwitz) {
      cfg.gmax = gmax_flag.value_or(cfg.gmax);
      cfg.dmax = dmax_flag.value_or(cfg.dmax);
      return cmd_hurwitz(cfg, method, out);
    }
    if (*one_point) {
      cfg.dmax = dmax_flag.value_or(3);
      return cmd_one_point(cfg, which, source, out);
    }
    if (*degree_one) return cmd_degree_one(cfg, key_text, genus_flag, out);
    if (*series) return cmd_series(cfg, series_name, series_degree, out);
    if (*verify) {
      if (target == "degree1-gen") {
        cfg.gmax = gmax_flag.value_or(4);
      } else if (target == "one-point") {
        cfg.dmax = dmax_flag.value_or(6);
      } else {
        cfg.gmax = gmax_flag.value_or(cfg.gmax);
        cfg.dmax = dmax_flag.value_or(cfg.dmax);
      }
      return cmd_verify(cfg, target, max_index, insertions, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace toda::cli
