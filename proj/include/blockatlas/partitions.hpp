#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace blockatlas {

inline constexpr int kDefaultPartitionBound = 30;

class Partition {
 public:
  Partition() = default;
  /// Parts must be positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  /// "(a,b,c)"; the empty partition renders as "()".
  std::string to_string() const;

  bool operator==(const Partition& other) const { return parts_ == other.parts_; }
  std::strong_ordering operator<=>(const Partition& other) const {
    return parts_ <=> other.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Finite set of distinct non-negative integers, stored descending.
class BetaSet {
 public:
  BetaSet() = default;
  explicit BetaSet(std::vector<int> entries);

  const std::vector<int>& entries() const { return entries_; }
  int length() const { return static_cast<int>(entries_.size()); }
  bool contains(int x) const;

  bool operator==(const BetaSet&) const = default;

 private:
  std::vector<int> entries_;
};

/// All partitions of m, from (m) down to (1,...,1).
std::vector<Partition> partitions_of(int m, int bound = kDefaultPartitionBound);

BetaSet to_beta_set(const Partition& lambda, int length);
Partition from_beta_set(const BetaSet& beta);

/// Every partition obtained from lambda by removing one d-hook.
std::vector<Partition> remove_hook(const Partition& lambda, int d);

Partition d_core(const Partition& lambda, int d);

/// Image of d under q -> -q.
int ennola_dual(int d);

/// k when lambda is the staircase (k, k-1, ..., 1), nothing otherwise.
std::optional<int> staircase_index(const Partition& lambda);

}  // namespace blockatlas
