#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace toda::cli {

enum class OutputFormat { table, csv, json };
enum class BackendChoice { direct, dp_sieve, both };

struct Config {
  std::size_t lambda_order = 20;
  unsigned gmax = 3;
  unsigned dmax = 5;
  BackendChoice oracle_backend = BackendChoice::dp_sieve;
  unsigned oracle_dmax = 7;
  OutputFormat output_format = OutputFormat::table;
  std::optional<std::string> cache_path;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

/// Environment variables honoured for the cache path and the oracle bound.
inline constexpr const char* kCacheEnv = "TODA_CACHE";
inline constexpr const char* kOracleDmaxEnv = "TODA_ORACLE_DMAX";

/// Runs the command line `args` (without the program name) and returns the
/// process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toda::cli
