#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "blockatlas/arith.hpp"
#include "blockatlas/partitions.hpp"
#include "blockatlas/symbols.hpp"

namespace blockatlas {

/// Enumeration limits. The partition bound applies to types A/2A
/// (partitions of n+1), the symbol bound to B/C/D/2D.
struct Bounds {
  int max_partition_size = kDefaultPartitionBound;
  int max_symbol_rank = kDefaultSymbolRankBound;
};

/// Marker distinguishing the two characters attached to a degenerate
/// D-symbol.
enum class DegenerateMarker { None, Prime, DoublePrime };

struct UnipotentLabel {
  std::variant<Partition, Symbol, std::string> payload;
  DegenerateMarker marker = DegenerateMarker::None;

  bool is_partition() const { return std::holds_alternative<Partition>(payload); }
  bool is_symbol() const { return std::holds_alternative<Symbol>(payload); }
  const Partition& partition() const { return std::get<Partition>(payload); }
  const Symbol& symbol() const { return std::get<Symbol>(payload); }

  /// Partitions as "(a,b)", symbols in canonical form with a trailing
  /// ′/″ for degenerate D labels, tabulated labels verbatim.
  std::string render() const;

  bool operator==(const UnipotentLabel&) const = default;
};

struct SeriesBlock {
  std::string core_key;
  std::vector<std::size_t> members;  // indices into SeriesPartition::labels
};

struct SeriesPartition {
  GroupType type;
  int d = 1;
  std::optional<std::uint64_t> ell;  // set when produced by ell_blocks
  std::optional<std::uint64_t> q;
  std::vector<UnipotentLabel> labels;
  std::vector<SeriesBlock> blocks;  // ordered by smallest member

  std::size_t block_of(std::size_t label) const;
};

/// Source of labels and per-d series for one type. Classical types are
/// computed; exceptional types can be supplied from tables.
class SeriesSource {
 public:
  virtual ~SeriesSource() = default;
  virtual const GroupType& type() const = 0;
  virtual const std::vector<UnipotentLabel>& labels() const = 0;
  /// Nothing when the source has no data for d.
  virtual std::optional<SeriesPartition> series(int d) const = 0;
};

class ClassicalSeries final : public SeriesSource {
 public:
  explicit ClassicalSeries(const GroupType& type, const Bounds& bounds = {});

  const GroupType& type() const override { return type_; }
  const std::vector<UnipotentLabel>& labels() const override { return labels_; }
  std::optional<SeriesPartition> series(int d) const override;

 private:
  GroupType type_;
  std::vector<UnipotentLabel> labels_;
};

/// Externally supplied labels and series partitions (exceptional types).
class TabulatedSeries final : public SeriesSource {
 public:
  /// `series` maps d to blocks of label indices; validated to be a
  /// partition of the label set.
  TabulatedSeries(GroupType type, std::vector<std::string> labels,
                  std::map<int, std::vector<std::vector<std::size_t>>> series);

  const GroupType& type() const override { return type_; }
  const std::vector<UnipotentLabel>& labels() const override { return labels_; }
  std::optional<SeriesPartition> series(int d) const override;
  std::vector<int> tabulated_d() const;

 private:
  GroupType type_;
  std::vector<UnipotentLabel> labels_;
  std::map<int, std::vector<std::vector<std::size_t>>> series_;
};

std::vector<UnipotentLabel> enumerate(const GroupType& type, const Bounds& bounds = {});

/// Canonical rendering of the d-series invariant of one label.
std::string series_key(const GroupType& type, const UnipotentLabel& label, int d);

SeriesPartition d_series(const GroupType& type, int d, const Bounds& bounds = {});
SeriesPartition ell_blocks(const GroupType& type, const PrimePower& q, std::uint64_t ell,
                           const Bounds& bounds = {});

/// Disjointness, coverage and (for classical types) key consistency;
/// throws InvariantViolation.
void validate(const SeriesPartition& partition);

}  // namespace blockatlas
