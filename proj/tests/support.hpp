#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "blockatlas/abelian.hpp"
#include "blockatlas/partitions.hpp"

namespace testsupport {

using blockatlas::IntMatrix;
using blockatlas::Integer;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long long range(long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng_);
  }
  bool coin() { return range(0, 1) == 1; }
  std::mt19937_64& engine() { return rng_; }

  /// Uniform-ish random composition, sorted into a partition of m.
  blockatlas::Partition partition(int m) {
    std::vector<int> parts;
    int left = m;
    while (left > 0) {
      const int p = static_cast<int>(range(1, left));
      parts.push_back(p);
      left -= p;
    }
    std::sort(parts.rbegin(), parts.rend());
    return blockatlas::Partition(parts);
  }

  IntMatrix matrix(std::size_t rows, std::size_t cols, long long bound) {
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = range(-bound, bound);
    return m;
  }

  /// Product of random elementary operations and sign flips.
  IntMatrix unimodular(std::size_t n, int steps = 12) {
    IntMatrix m = IntMatrix::identity(n);
    if (n == 0) return m;
    for (int k = 0; k < steps; ++k) {
      const auto i = static_cast<std::size_t>(range(0, static_cast<long long>(n) - 1));
      const auto j = static_cast<std::size_t>(range(0, static_cast<long long>(n) - 1));
      if (i == j) {
        for (std::size_t c = 0; c < n; ++c) m(i, c) = -m(i, c);
        continue;
      }
      const long long f = range(-3, 3);
      for (std::size_t c = 0; c < n; ++c) m(i, c) += f * m(j, c);
    }
    return m;
  }

  /// Orders n_1, ..., n_k >= 2 with product at most `max_order`.
  std::vector<long long> cyclic_orders(long long max_order) {
    std::vector<long long> orders;
    long long total = 1;
    const int wanted = static_cast<int>(range(1, 3));
    for (int k = 0; k < wanted; ++k) {
      if (total * 2 > max_order) break;
      const long long n = range(2, max_order / total);
      orders.push_back(n);
      total *= n;
    }
    if (orders.empty()) orders.push_back(range(2, max_order));
    return orders;
  }

  /// Random endomorphism of Z/n_1 + ... + Z/n_k on the standard generators:
  /// column j is the image of e_j, which must be killed by n_j.
  IntMatrix endomorphism(const std::vector<long long>& orders) {
    const std::size_t k = orders.size();
    IntMatrix f(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        const long long step = orders[i] / std::gcd(orders[i], orders[j]);
        f(i, j) = step * range(0, orders[i] / step - 1);
      }
    return f;
  }

 private:
  std::mt19937_64 rng_;
};

/// Elements of Z/n_1 + ... + Z/n_k as residue tuples.
inline std::vector<std::vector<long long>> elements(const std::vector<long long>& orders) {
  std::vector<std::vector<long long>> out{{}};
  for (long long n : orders) {
    std::vector<std::vector<long long>> next;
    for (const auto& e : out)
      for (long long r = 0; r < n; ++r) {
        auto x = e;
        x.push_back(r);
        next.push_back(std::move(x));
      }
    out = std::move(next);
  }
  return out;
}

inline std::vector<long long> apply_mod(const IntMatrix& f, const std::vector<long long>& x,
                                        const std::vector<long long>& orders) {
  std::vector<long long> y(orders.size(), 0);
  for (std::size_t i = 0; i < orders.size(); ++i) {
    long long acc = 0;
    for (std::size_t j = 0; j < orders.size(); ++j)
      acc += f(i, j).convert_to<long long>() * x[j];
    y[i] = ((acc % orders[i]) + orders[i]) % orders[i];
  }
  return y;
}

/// |ker(f - 1)| and |coker(f - 1)| on the sum of cyclic groups, counted
/// by listing every element.
inline std::pair<long long, long long> ker_coker_by_listing(const std::vector<long long>& orders,
                                                            const IntMatrix& f) {
  const auto elems = elements(orders);
  long long fixed = 0;
  std::set<std::vector<long long>> image;
  for (const auto& x : elems) {
    const auto y = apply_mod(f, x, orders);
    std::vector<long long> diff(orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i)
      diff[i] = ((y[i] - x[i]) % orders[i] + orders[i]) % orders[i];
    if (std::all_of(diff.begin(), diff.end(), [](long long v) { return v == 0; })) ++fixed;
    image.insert(diff);
  }
  return {fixed, static_cast<long long>(elems.size()) / static_cast<long long>(image.size())};
}

inline blockatlas::AbelianGroup group_of(const std::vector<long long>& orders) {
  std::vector<Integer> big(orders.begin(), orders.end());
  return blockatlas::AbelianGroup::cyclic_sum(big);
}

}  // namespace testsupport
