#pragma once

#include <string>
#include <vector>

#include "blockatlas/cli/commands.hpp"

namespace blockatlas::cli {

/// One command invocation produced by expanding a grid config.
struct GridInstance {
  std::string key;  // sort key; zero-padded so that it orders naturally
  std::string command;
  Options options;
};

/// Grid configs are flat "key = value" lines; '#' starts a comment.
///
///   threads = 4
///   fusion.families = A 2A B C D 2D
///   fusion.ranks = 1..8            # lists and a..b ranges
///   fusion.ranks.2A = 1..11        # per-family override
///   fusion.q = 2 4 8
///   fusion.dmax = 12               # optional, default 2(n+1)
///   dseries.families = B C
///   dseries.ranks = 1..8
///   dseries.sets = 2,4; 1,4        # ';' separates sets
///   defect.families = 2A B C D 2D
///   defect.ranks = 2..8
///   zsygmondy.q = 2..16
///   zsygmondy.d = 3..12
///   bijection.data = all           # catalog names or "all"
///   bijection.p = 2 3 5            # likewise cornqs.*, components.*
struct GridConfig {
  std::vector<GridInstance> instances;  // sorted by key, keys unique
  unsigned threads = 1;
};

/// Unknown keys and malformed values raise SourceError at the offending
/// line and column.
GridConfig parse_grid(const std::string& text, const std::string& source);

struct GridRun {
  Json results;
  int exit_code = 0;  // worst instance: 1 before 2 before 0
};

/// Runs every instance on `threads` workers. The output depends only on
/// the instances, not on scheduling.
GridRun run_grid(const GridConfig& config, const Context& context);

}  // namespace blockatlas::cli
