#include "blockatlas/unipotent.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "blockatlas/error.hpp"

namespace blockatlas {

std::string UnipotentLabel::render() const {
  if (is_partition()) return partition().to_string();
  if (!is_symbol()) return std::get<std::string>(payload);
  std::string out = symbol().key();
  if (marker == DegenerateMarker::Prime) out += "′";
  if (marker == DegenerateMarker::DoublePrime) out += "″";
  return out;
}

std::size_t SeriesPartition::block_of(std::size_t label) const {
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const auto& m = blocks[b].members;
    if (std::find(m.begin(), m.end(), label) != m.end()) return b;
  }
  fail(ErrorKind::InvalidArgument, "label index out of range");
}

std::vector<UnipotentLabel> enumerate(const GroupType& type, const Bounds& bounds) {
  std::vector<UnipotentLabel> out;
  auto add_symbols = [&](DefectClass cls, bool split_degenerate) {
    for (auto& sigma : enumerate_symbols(type.rank, cls, bounds.max_symbol_rank)) {
      if (split_degenerate && sigma.degenerate()) {
        out.push_back({sigma, DegenerateMarker::Prime});
        out.push_back({sigma, DegenerateMarker::DoublePrime});
      } else {
        out.push_back({std::move(sigma), DegenerateMarker::None});
      }
    }
  };
  switch (type.family) {
    case Family::A:
    case Family::A2:
      for (auto& lambda : partitions_of(type.rank + 1, bounds.max_partition_size))
        out.push_back({std::move(lambda), DegenerateMarker::None});
      break;
    case Family::B:
    case Family::C:
      add_symbols(DefectClass::odd(), false);
      break;
    case Family::D:
      add_symbols(DefectClass::zero_mod_four(), true);
      break;
    case Family::D2:
      add_symbols(DefectClass::two_mod_four(), false);
      break;
    default:
      fail(ErrorKind::NotSupported,
           "no built-in unipotent data for type " + type.name() + "; load a table");
  }
  return out;
}

std::string series_key(const GroupType& type, const UnipotentLabel& label, int d) {
  ensure(d >= 1, ErrorKind::InvalidArgument, "d must be positive");
  switch (type.family) {
    case Family::A:
      return d_core(label.partition(), d).to_string();
    case Family::A2:
      return d_core(label.partition(), ennola_dual(d)).to_string();
    case Family::B:
    case Family::C:
    case Family::D:
    case Family::D2:
      if (d % 2 == 1) return hook_core(label.symbol(), d).key();
      return cohook_core(label.symbol(), d / 2).key();
    default:
      fail(ErrorKind::NotSupported, "no built-in series rule for type " + type.name());
  }
}

namespace {

SeriesPartition group_by_key(const GroupType& type, int d, std::vector<UnipotentLabel> labels) {
  SeriesPartition out;
  out.type = type;
  out.d = d;
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto key = series_key(type, labels[i], d);
    auto [it, inserted] = index.emplace(key, out.blocks.size());
    if (inserted) out.blocks.push_back({std::move(key), {}});
    out.blocks[it->second].members.push_back(i);
  }
  out.labels = std::move(labels);
  return out;
}

}  // namespace

ClassicalSeries::ClassicalSeries(const GroupType& type, const Bounds& bounds)
    : type_(type), labels_(enumerate(type, bounds)) {}

std::optional<SeriesPartition> ClassicalSeries::series(int d) const {
  return group_by_key(type_, d, labels_);
}

TabulatedSeries::TabulatedSeries(GroupType type, std::vector<std::string> labels,
                                 std::map<int, std::vector<std::vector<std::size_t>>> series)
    : type_(type), series_(std::move(series)) {
  std::set<std::string> seen;
  for (auto& name : labels) {
    ensure(seen.insert(name).second, ErrorKind::InvalidArgument,
           "duplicate label '" + name + "' for " + type_.name());
    labels_.push_back({std::move(name), DegenerateMarker::None});
  }
  for (const auto& [d, blocks] : series_) {
    ensure(d >= 1, ErrorKind::InvalidArgument, "tabulated d must be positive");
    std::vector<int> hits(labels_.size(), 0);
    for (const auto& block : blocks) {
      ensure(!block.empty(), ErrorKind::InvalidArgument, "empty tabulated series");
      for (std::size_t i : block) {
        ensure(i < labels_.size(), ErrorKind::InvalidArgument, "tabulated label index out of range");
        ++hits[i];
      }
    }
    ensure(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }),
           ErrorKind::InvalidArgument,
           "tabulated " + std::to_string(d) + "-series of " + type_.name() +
               " do not partition the label set");
  }
}

std::optional<SeriesPartition> TabulatedSeries::series(int d) const {
  auto it = series_.find(d);
  if (it == series_.end()) return std::nullopt;
  SeriesPartition out;
  out.type = type_;
  out.d = d;
  out.labels = labels_;
  auto blocks = it->second;
  for (auto& block : blocks) std::sort(block.begin(), block.end());
  std::sort(blocks.begin(), blocks.end());
  for (auto& block : blocks) {
    out.blocks.push_back({"block:" + labels_[block.front()].render(), std::move(block)});
  }
  return out;
}

std::vector<int> TabulatedSeries::tabulated_d() const {
  std::vector<int> out;
  for (const auto& entry : series_) out.push_back(entry.first);
  return out;
}

SeriesPartition d_series(const GroupType& type, int d, const Bounds& bounds) {
  ensure(d >= 1, ErrorKind::InvalidArgument, "d must be positive");
  auto out = group_by_key(type, d, enumerate(type, bounds));
  validate(out);
  return out;
}

SeriesPartition ell_blocks(const GroupType& type, const PrimePower& q, std::uint64_t ell,
                           const Bounds& bounds) {
  const std::string where = " (ell = " + std::to_string(ell) + ", " + type.name() + ")";
  if (!is_prime(ell)) fail(ErrorKind::BadPrimeHypothesis, "ell is not prime" + where);
  if (ell == 2) fail(ErrorKind::BadPrimeHypothesis, "ell must be odd" + where);
  if (!is_good(ell, type)) fail(ErrorKind::BadPrimeHypothesis, "ell is bad for the type" + where);
  if (q.q % ell == 0) fail(ErrorKind::BadPrimeHypothesis, "ell divides q" + where);
  if (type.family == Family::D4_3 && ell == 3)
    fail(ErrorKind::BadPrimeHypothesis, "ell = 3 is excluded when 3D4 is involved" + where);
  auto out = d_series(type, static_cast<int>(mult_order(q.q, ell)), bounds);
  out.ell = ell;
  out.q = q.q;
  return out;
}

void validate(const SeriesPartition& partition) {
  std::vector<int> hits(partition.labels.size(), 0);
  std::set<std::string> keys;
  for (const auto& block : partition.blocks) {
    if (block.members.empty()) fail(ErrorKind::InvariantViolation, "empty series block");
    if (!keys.insert(block.core_key).second)
      fail(ErrorKind::InvariantViolation, "duplicate series key " + block.core_key);
    for (std::size_t i : block.members) {
      if (i >= hits.size()) fail(ErrorKind::InvariantViolation, "series member out of range");
      ++hits[i];
      if (partition.type.is_classical() &&
          series_key(partition.type, partition.labels[i], partition.d) != block.core_key)
        fail(ErrorKind::InvariantViolation,
             "label " + partition.labels[i].render() + " does not match its series key");
    }
  }
  for (int h : hits)
    if (h != 1) fail(ErrorKind::InvariantViolation, "series blocks do not partition the labels");
}

}  // namespace blockatlas
