#include "blockatlas/symbols.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "blockatlas/error.hpp"
#include "blockatlas/partitions.hpp"

namespace blockatlas {

namespace {

void normalize_row(std::vector<int>& row) {
  std::sort(row.begin(), row.end());
  ensure(std::adjacent_find(row.begin(), row.end()) == row.end(), ErrorKind::InvalidArgument,
         "symbol rows must have distinct entries");
  ensure(row.empty() || row.front() >= 0, ErrorKind::InvalidArgument,
         "symbol entries must be non-negative");
}

bool row_contains(const std::vector<int>& row, int x) {
  return std::binary_search(row.begin(), row.end(), x);
}

std::string render_row(const std::vector<int>& row) {
  std::string out = "{";
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(row[i]);
  }
  return out + "}";
}

std::vector<int> row_core(const std::vector<int>& row, int d) {
  std::vector<int> per_runner(static_cast<std::size_t>(d), 0);
  for (int x : row) ++per_runner[static_cast<std::size_t>(x % d)];
  std::vector<int> out;
  for (int r = 0; r < d; ++r)
    for (int k = 0; k < per_runner[static_cast<std::size_t>(r)]; ++k) out.push_back(r + k * d);
  return out;
}

std::vector<int> ascending_beta(const Partition& lambda, int length) {
  auto entries = to_beta_set(lambda, length).entries();
  std::reverse(entries.begin(), entries.end());
  return entries;
}

}  // namespace

Symbol::Symbol(std::vector<int> s, std::vector<int> t) : s_(std::move(s)), t_(std::move(t)) {
  normalize_row(s_);
  normalize_row(t_);
  while (!s_.empty() && !t_.empty() && s_.front() == 0 && t_.front() == 0) {
    s_.erase(s_.begin());
    t_.erase(t_.begin());
    for (int& x : s_) --x;
    for (int& x : t_) --x;
  }
}

int Symbol::rank() const {
  const int sum = std::accumulate(s_.begin(), s_.end(), 0) + std::accumulate(t_.begin(), t_.end(), 0);
  const int n = static_cast<int>(s_.size() + t_.size()) - 1;
  return sum - (n * n) / 4;
}

int Symbol::defect() const {
  const auto a = static_cast<int>(s_.size());
  const auto b = static_cast<int>(t_.size());
  return a > b ? a - b : b - a;
}

Symbol Symbol::canonical() const {
  if (s_.size() != t_.size()) return s_.size() > t_.size() ? *this : swapped();
  return s_ >= t_ ? *this : swapped();
}

std::string Symbol::to_string() const {
  return "(" + render_row(s_) + "," + render_row(t_) + ")";
}

bool symbol_less(const Symbol& a, const Symbol& b) {
  const Symbol ca = a.canonical();
  const Symbol cb = b.canonical();
  return std::forward_as_tuple(ca.rank(), ca.defect(), ca.s(), ca.t()) <
         std::forward_as_tuple(cb.rank(), cb.defect(), cb.s(), cb.t());
}

Symbol phi(const Symbol& sigma) {
  std::vector<int> first, second;
  for (int x : sigma.s()) (x % 2 == 0 ? first : second).push_back(x);
  for (int y : sigma.t()) (y % 2 == 0 ? second : first).push_back(y);
  return Symbol(std::move(first), std::move(second));
}

std::vector<Symbol> remove_hook(const Symbol& sigma, int d) {
  ensure(d >= 1, ErrorKind::InvalidArgument, "hook length must be positive");
  std::vector<Symbol> out;
  for (int which = 0; which < 2; ++which) {
    const auto& row = which == 0 ? sigma.s() : sigma.t();
    for (std::size_t i = 0; i < row.size(); ++i) {
      const int x = row[i];
      if (x < d || row_contains(row, x - d)) continue;
      auto moved = row;
      moved[i] = x - d;
      out.push_back(which == 0 ? Symbol(std::move(moved), sigma.t())
                               : Symbol(sigma.s(), std::move(moved)));
    }
  }
  return out;
}

std::vector<Symbol> remove_cohook(const Symbol& sigma, int d) {
  ensure(d >= 1, ErrorKind::InvalidArgument, "cohook length must be positive");
  std::vector<Symbol> out;
  for (int which = 0; which < 2; ++which) {
    const auto& from = which == 0 ? sigma.s() : sigma.t();
    const auto& to = which == 0 ? sigma.t() : sigma.s();
    for (std::size_t i = 0; i < from.size(); ++i) {
      const int x = from[i];
      if (x < d || row_contains(to, x - d)) continue;
      auto shrunk = from;
      shrunk.erase(shrunk.begin() + static_cast<std::ptrdiff_t>(i));
      auto grown = to;
      grown.push_back(x - d);
      out.push_back(which == 0 ? Symbol(std::move(shrunk), std::move(grown))
                               : Symbol(std::move(grown), std::move(shrunk)));
    }
  }
  return out;
}

Symbol hook_core(const Symbol& sigma, int d) {
  ensure(d >= 1, ErrorKind::InvalidArgument, "hook length must be positive");
  return Symbol(row_core(sigma.s(), d), row_core(sigma.t(), d));
}

Symbol cohook_core(const Symbol& sigma, int d) {
  Symbol current = sigma;
  for (auto moves = remove_cohook(current, d); !moves.empty(); moves = remove_cohook(current, d))
    current = moves.front();
  return current;
}

std::vector<Symbol> enumerate_symbols(int n, DefectClass cls, int bound) {
  ensure(n >= 0, ErrorKind::InvalidArgument, "rank must be non-negative");
  if (n > bound)
    fail(ErrorKind::BoundExceeded, "symbols of rank " + std::to_string(n) +
                                       " exceed the enumeration bound " + std::to_string(bound));
  std::vector<Symbol> out;
  // A symbol of defect k built from a bipartition (alpha, beta) has rank
  // |alpha| + |beta| + floor(k^2 / 4).
  for (int k = 0; k * k / 4 <= n; ++k) {
    if (!cls.contains(k)) continue;
    const int weight = n - k * k / 4;
    for (int a = 0; a <= weight; ++a) {
      const auto alphas = partitions_of(a, weight);
      const auto betas = partitions_of(weight - a, weight);
      for (const auto& alpha : alphas) {
        for (const auto& beta : betas) {
          if (k == 0 && alpha < beta) continue;  // unordered rows
          const int m = std::max({beta.length(), alpha.length() - k, 0});
          out.emplace_back(ascending_beta(alpha, m + k), ascending_beta(beta, m));
        }
      }
    }
  }
  for (auto& sigma : out) sigma = sigma.canonical();
  std::sort(out.begin(), out.end(), symbol_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace blockatlas
