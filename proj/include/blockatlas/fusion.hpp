#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "blockatlas/arith.hpp"
#include "blockatlas/unipotent.hpp"

namespace blockatlas {

/// Two labels found in one d-series, witnessed by an ell-block for ell.
struct MergeEvent {
  std::size_t a = 0;
  std::size_t b = 0;
  int d = 1;
  std::uint64_t ell = 0;
};

enum class FusionVerdict {
  SingleClass,
  // Several classes remain. The closure only uses odd good primes, so this
  // is never evidence against a single class.
  Inconclusive,
};

struct FusionResult {
  GroupType type;
  std::uint64_t q = 2;
  int d_max = 1;
  std::map<int, std::uint64_t> admissible;  // d -> witness ell actually used
  std::vector<int> skipped_d;               // admissible but no series data
  std::vector<UnipotentLabel> labels;
  std::vector<std::vector<std::size_t>> classes;
  std::vector<MergeEvent> certificate;

  FusionVerdict verdict() const {
    return classes.size() == 1 ? FusionVerdict::SingleClass : FusionVerdict::Inconclusive;
  }
};

/// 2 * (rank + 1).
int default_d_max(const GroupType& type);

FusionResult fusion_closure(const SeriesSource& source, const PrimePower& q, int d_max);
FusionResult fusion_closure(const GroupType& type, const PrimePower& q, int d_max,
                            const Bounds& bounds = {});

/// Rebuilds the classes from the certificate alone and compares; throws
/// InvariantViolation on mismatch or on an unsound event.
void verify_certificate(const FusionResult& result, const SeriesSource& source);

struct DSeriesResult {
  bool single = false;
  std::vector<std::vector<std::size_t>> join;
  std::vector<UnipotentLabel> labels;
};

DSeriesResult is_single_d_series(const SeriesSource& source, const std::set<int>& ds);
DSeriesResult is_single_d_series(const GroupType& type, const std::set<int>& ds,
                                 const Bounds& bounds = {});

struct DefectBoundRow {
  std::string core;
  int defect = 0;
  long long lhs = 0;  // k(k+1)/2, (k^2-1)/4 or k^2/4
  long long rhs = 0;  // n+1 or n
  bool satisfied = false;
};

/// One row per 1-series occurring for the type. Type A is rejected with
/// NotSupported: it has a single 1-series and no defect bound.
std::vector<DefectBoundRow> defect_bound_report(const GroupType& type, const Bounds& bounds = {});

struct DerivedInequalityRow {
  int defect = 0;
  long long lhs = 0;  // (k^2-3k+2)/2, (k^2-4k+3)/4 or (k^2-4k+4)/4
  long long rhs = 0;  // n-2
  bool base_case = false;  // k=1 (2A, B/C) or k=2 (D/2D): lhs vanishes
  bool holds = false;
};

struct DerivedInequalityResult {
  bool holds = false;
  std::vector<DerivedInequalityRow> rows;
};

DerivedInequalityResult derived_inequality_check(const GroupType& type, const Bounds& bounds = {});

}  // namespace blockatlas
