#include "blockatlas/partitions.hpp"

#include <algorithm>
#include <functional>

#include "blockatlas/error.hpp"

namespace blockatlas {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    ensure(parts_[i] >= 1, ErrorKind::InvalidArgument, "partition parts must be positive");
    ensure(i == 0 || parts_[i - 1] >= parts_[i], ErrorKind::InvalidArgument,
           "partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

BetaSet::BetaSet(std::vector<int> entries) : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(), std::greater<>());
  ensure(std::adjacent_find(entries_.begin(), entries_.end()) == entries_.end(),
         ErrorKind::InvalidArgument, "beta-set entries must be distinct");
  ensure(entries_.empty() || entries_.back() >= 0, ErrorKind::InvalidArgument,
         "beta-set entries must be non-negative");
}

bool BetaSet::contains(int x) const {
  return std::binary_search(entries_.begin(), entries_.end(), x, std::greater<>());
}

std::vector<Partition> partitions_of(int m, int bound) {
  ensure(m >= 0, ErrorKind::InvalidArgument, "cannot partition a negative integer");
  if (m > bound)
    fail(ErrorKind::BoundExceeded, "partitions of " + std::to_string(m) +
                                       " exceed the enumeration bound " + std::to_string(bound));
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(m, m);
  return out;
}

BetaSet to_beta_set(const Partition& lambda, int length) {
  if (length < lambda.length())
    fail(ErrorKind::LengthTooShort, "beta-set length " + std::to_string(length) +
                                        " is shorter than " + lambda.to_string());
  std::vector<int> entries(static_cast<std::size_t>(length));
  for (int i = 0; i < length; ++i) {
    const int part = i < lambda.length() ? lambda.parts()[static_cast<std::size_t>(i)] : 0;
    entries[static_cast<std::size_t>(i)] = part + (length - 1 - i);
  }
  return BetaSet(std::move(entries));
}

Partition from_beta_set(const BetaSet& beta) {
  const int m = beta.length();
  std::vector<int> parts;
  for (int i = 0; i < m; ++i) {
    const int part = beta.entries()[static_cast<std::size_t>(i)] - (m - 1 - i);
    if (part > 0) parts.push_back(part);
  }
  return Partition(std::move(parts));
}

std::vector<Partition> remove_hook(const Partition& lambda, int d) {
  ensure(d >= 1, ErrorKind::InvalidArgument, "hook length must be positive");
  const BetaSet beta = to_beta_set(lambda, lambda.length());
  std::vector<Partition> out;
  for (std::size_t i = 0; i < beta.entries().size(); ++i) {
    const int x = beta.entries()[i];
    if (x < d || beta.contains(x - d)) continue;
    auto moved = beta.entries();
    moved[i] = x - d;
    out.push_back(from_beta_set(BetaSet(std::move(moved))));
  }
  return out;
}

Partition d_core(const Partition& lambda, int d) {
  ensure(d >= 1, ErrorKind::InvalidArgument, "hook length must be positive");
  // Sliding each bead as far down its runner as possible gives the core in
  // one pass.
  const BetaSet beta = to_beta_set(lambda, lambda.length());
  std::vector<int> per_runner(static_cast<std::size_t>(d), 0);
  for (int x : beta.entries()) ++per_runner[static_cast<std::size_t>(x % d)];
  std::vector<int> entries;
  for (int r = 0; r < d; ++r) {
    for (int k = 0; k < per_runner[static_cast<std::size_t>(r)]; ++k) entries.push_back(r + k * d);
  }
  return from_beta_set(BetaSet(std::move(entries)));
}

int ennola_dual(int d) {
  ensure(d >= 1, ErrorKind::InvalidArgument, "d must be positive");
  if (d % 2 == 1) return 2 * d;
  if (d % 4 == 2) return d / 2;
  return d;
}

std::optional<int> staircase_index(const Partition& lambda) {
  const int k = lambda.length();
  for (int i = 0; i < k; ++i) {
    if (lambda.parts()[static_cast<std::size_t>(i)] != k - i) return std::nullopt;
  }
  return k;
}

}  // namespace blockatlas
