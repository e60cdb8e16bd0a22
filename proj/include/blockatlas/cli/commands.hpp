#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <set>
#include <string>

#include "blockatlas/cli/exceptional.hpp"
#include "blockatlas/cli/serialize.hpp"

namespace blockatlas::cli {

inline constexpr const char* kEngineVersion = "1.0.0";
inline constexpr const char* kReportSchema = "report_v1";

/// Flag values shared by all commands; a zero or empty value means unset.
struct Options {
  std::string type;
  int rank = 0;
  int d = 0;
  std::uint64_t q = 0;
  std::uint64_t ell = 0;
  int dmax = 0;
  std::string dset;  // "1,6"
  std::string datum;
  std::uint64_t p = 0;
  std::string config;
  std::string data;
};

struct Context {
  Bounds bounds;
  std::shared_ptr<const ExceptionalTables> tables;  // may be null
};

struct Outcome {
  /// 0 success, 1 internal invariant violation or failed verification,
  /// 2 rejected input.
  int exit_code = 0;
  Json report;
};

/// Bounds after applying BLOCKATLAS_MAX_RANK (symbol rank N, partition
/// size N + 1). Malformed values raise InvalidArgument.
Bounds bounds_from_environment();

/// Parses "1,6", "{1,6}" or "1 6".
std::set<int> parse_int_set(const std::string& text);

/// Runs one command; never throws for library errors, which become
/// structured error reports.
Outcome run_command(const std::string& command, const Options& options, const Context& context);

/// Full command-line entry point.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace blockatlas::cli
