#include "blockatlas/fusion.hpp"

#include <algorithm>
#include <numeric>

#include "blockatlas/error.hpp"

namespace blockatlas {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

  /// Classes sorted by smallest member, members ascending.
  std::vector<std::vector<std::size_t>> classes() {
    std::vector<std::vector<std::size_t>> by_root(parent_.size());
    for (std::size_t i = 0; i < parent_.size(); ++i) by_root[find(i)].push_back(i);
    std::vector<std::vector<std::size_t>> out;
    for (auto& c : by_root)
      if (!c.empty()) out.push_back(std::move(c));
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::vector<std::size_t> parent_;
};

void merge_blocks(DisjointSets& sets, const SeriesPartition& series, std::uint64_t ell,
                  std::vector<MergeEvent>* events) {
  for (const auto& block : series.blocks) {
    const std::size_t head = block.members.front();
    for (std::size_t j = 1; j < block.members.size(); ++j) {
      if (sets.unite(head, block.members[j]) && events)
        events->push_back({head, block.members[j], series.d, ell});
    }
  }
}

}  // namespace

int default_d_max(const GroupType& type) { return 2 * (type.rank + 1); }

FusionResult fusion_closure(const SeriesSource& source, const PrimePower& q, int d_max) {
  ensure(d_max >= 1, ErrorKind::InvalidArgument, "d_max must be positive");
  FusionResult result;
  result.type = source.type();
  result.q = q.q;
  result.d_max = d_max;
  result.labels = source.labels();
  result.admissible = admissible_d(source.type(), q, d_max);

  DisjointSets sets(result.labels.size());
  for (const auto& [d, ell] : result.admissible) {
    auto series = source.series(d);
    if (!series) {
      result.skipped_d.push_back(d);
      continue;
    }
    validate(*series);
    merge_blocks(sets, *series, ell, &result.certificate);
  }
  result.classes = sets.classes();
  return result;
}

FusionResult fusion_closure(const GroupType& type, const PrimePower& q, int d_max,
                            const Bounds& bounds) {
  return fusion_closure(ClassicalSeries(type, bounds), q, d_max);
}

void verify_certificate(const FusionResult& result, const SeriesSource& source) {
  const auto filter = GoodnessFilter::block_theory(result.type);
  DisjointSets sets(result.labels.size());
  for (const auto& event : result.certificate) {
    if (!filter.accepts(event.ell) || result.q % event.ell == 0 ||
        mult_order(result.q, event.ell) != static_cast<std::uint64_t>(event.d))
      fail(ErrorKind::InvariantViolation,
           "certificate prime " + std::to_string(event.ell) + " does not witness d = " +
               std::to_string(event.d));
    const auto series = source.series(event.d);
    if (!series || series->block_of(event.a) != series->block_of(event.b))
      fail(ErrorKind::InvariantViolation, "certificate merges labels outside a common series");
    sets.unite(event.a, event.b);
  }
  if (sets.classes() != result.classes)
    fail(ErrorKind::InvariantViolation, "certificate does not reproduce the classes");
}

DSeriesResult is_single_d_series(const SeriesSource& source, const std::set<int>& ds) {
  ensure(!ds.empty(), ErrorKind::InvalidArgument, "the set D must be non-empty");
  DisjointSets sets(source.labels().size());
  for (int d : ds) {
    auto series = source.series(d);
    if (!series)
      fail(ErrorKind::NotSupported,
           "no " + std::to_string(d) + "-series data for " + source.type().name());
    validate(*series);
    merge_blocks(sets, *series, 0, nullptr);
  }
  DSeriesResult out;
  out.join = sets.classes();
  out.single = out.join.size() == 1;
  out.labels = source.labels();
  return out;
}

DSeriesResult is_single_d_series(const GroupType& type, const std::set<int>& ds,
                                 const Bounds& bounds) {
  return is_single_d_series(ClassicalSeries(type, bounds), ds);
}

std::vector<DefectBoundRow> defect_bound_report(const GroupType& type, const Bounds& bounds) {
  if (type.family == Family::A)
    fail(ErrorKind::NotSupported, "type A has a single 1-series and no defect bound");
  if (!type.is_classical())
    fail(ErrorKind::NotSupported, "defect bounds are only defined for classical types");
  const auto series = d_series(type, 1, bounds);
  const long long n = type.rank;
  std::vector<DefectBoundRow> rows;
  for (const auto& block : series.blocks) {
    const auto& label = series.labels[block.members.front()];
    DefectBoundRow row;
    row.core = block.core_key;
    long long k = 0;
    switch (type.family) {
      case Family::A2: {
        const auto index = staircase_index(d_core(label.partition(), 2));
        if (!index) fail(ErrorKind::InvariantViolation, "a 2-core is not a staircase");
        k = *index;
        row.lhs = k * (k + 1) / 2;
        row.rhs = n + 1;
        break;
      }
      case Family::B:
      case Family::C:
        k = hook_core(label.symbol(), 1).defect();
        row.lhs = (k * k - 1) / 4;
        row.rhs = n;
        break;
      default:  // D, 2D
        k = hook_core(label.symbol(), 1).defect();
        row.lhs = k * k / 4;
        row.rhs = n;
        break;
    }
    row.defect = static_cast<int>(k);
    row.satisfied = row.lhs <= row.rhs;
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(),
            [](const DefectBoundRow& a, const DefectBoundRow& b) { return a.defect < b.defect; });
  return rows;
}

DerivedInequalityResult derived_inequality_check(const GroupType& type, const Bounds& bounds) {
  ensure(type.rank >= 2, ErrorKind::InvalidArgument, "the derived inequality needs rank >= 2");
  const auto bound_rows = defect_bound_report(type, bounds);
  DerivedInequalityResult out;
  out.holds = true;
  const long long n = type.rank;
  for (const auto& bound_row : bound_rows) {
    const long long k = bound_row.defect;
    DerivedInequalityRow row;
    row.defect = bound_row.defect;
    row.rhs = n - 2;
    switch (type.family) {
      case Family::A2:
        row.lhs = (k * k - 3 * k + 2) / 2;
        row.base_case = k == 1;
        break;
      case Family::B:
      case Family::C:
        row.lhs = (k * k - 4 * k + 3) / 4;
        row.base_case = k == 1;
        break;
      default:
        row.lhs = (k * k - 4 * k + 4) / 4;
        row.base_case = k == 2;
        break;
    }
    row.holds = row.lhs <= row.rhs;
    out.holds = out.holds && row.holds;
    out.rows.push_back(row);
  }
  return out;
}

}  // namespace blockatlas
