#include "blockatlas/arith.hpp"

#include <algorithm>
#include <array>
#include <limits>

#include "blockatlas/error.hpp"

namespace blockatlas {

namespace {

struct FamilyInfo {
  Family family;
  std::string_view name;
  int implied_rank;  // 0 for the classical series
};

constexpr std::array<FamilyInfo, 13> kFamilies{{
    {Family::A, "A", 0},
    {Family::A2, "2A", 0},
    {Family::B, "B", 0},
    {Family::C, "C", 0},
    {Family::D, "D", 0},
    {Family::D2, "2D", 0},
    {Family::G2, "G2", 2},
    {Family::F4, "F4", 4},
    {Family::E6, "E6", 6},
    {Family::E6_2, "2E6", 6},
    {Family::E7, "E7", 7},
    {Family::E8, "E8", 8},
    {Family::D4_3, "3D4", 4},
}};

const FamilyInfo& info(Family family) {
  for (const auto& entry : kFamilies)
    if (entry.family == family) return entry;
  fail(ErrorKind::InvalidArgument, "unknown family");
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t mod) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % mod);
}

bool miller_rabin_witness(std::uint64_t n, std::uint64_t a, std::uint64_t d, int s) {
  std::uint64_t x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (int i = 1; i < s; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

}  // namespace

std::string family_name(Family family) { return std::string(info(family).name); }

GroupType GroupType::make(Family family, int rank) {
  const auto& fi = info(family);
  if (fi.implied_rank != 0) {
    if (rank > 0 && rank != fi.implied_rank)
      fail(ErrorKind::InvalidArgument,
           "type " + std::string(fi.name) + " has rank " + std::to_string(fi.implied_rank));
    return GroupType{family, fi.implied_rank};
  }
  if (rank < 1) fail(ErrorKind::InvalidArgument, "rank must be at least 1");
  if ((family == Family::D || family == Family::D2) && rank < 2)
    fail(ErrorKind::InvalidArgument, "types D and 2D need rank at least 2");
  return GroupType{family, rank};
}

GroupType GroupType::make(std::string_view family, int rank) {
  for (const auto& entry : kFamilies)
    if (entry.name == family) return make(entry.family, rank);
  fail(ErrorKind::InvalidArgument, "unknown group family '" + std::string(family) + "'");
}

bool GroupType::is_classical() const { return info(family).implied_rank == 0; }

std::string GroupType::family_name() const { return blockatlas::family_name(family); }

std::string GroupType::name() const {
  if (!is_classical()) return family_name();
  return family_name() + "_" + std::to_string(rank);
}

PrimePower PrimePower::make(std::uint64_t q) {
  if (q < 2) fail(ErrorKind::InvalidArgument, "q must be a prime power >= 2");
  const auto factors = prime_factors(q);
  if (factors.size() != 1)
    fail(ErrorKind::InvalidArgument, std::to_string(q) + " is not a prime power");
  PrimePower result{q, factors.front(), 0};
  for (std::uint64_t m = q; m > 1; m /= result.p) ++result.r;
  return result;
}

bool GoodnessFilter::accepts(std::uint64_t ell) const {
  if (ell < min_prime) return false;
  if (odd_only && ell == 2) return false;
  if (exclude_three && ell == 3) return false;
  if (type && !is_good(ell, *type)) return false;
  return true;
}

GoodnessFilter GoodnessFilter::block_theory(const GroupType& type) {
  GoodnessFilter f;
  f.type = type;
  f.odd_only = true;
  f.exclude_three = type.family == Family::D4_3;
  return f;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  if (mod == 1) return 0;
  std::uint64_t result = 1;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, mod);
    base = mul_mod(base, base, mod);
    exp >>= 1;
  }
  return result;
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t result = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && result > std::numeric_limits<std::uint64_t>::max() / base)
      fail(ErrorKind::Overflow, std::to_string(base) + "^" + std::to_string(exp) +
                                    " exceeds the 64-bit range");
    result *= base;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are deterministic for all 64-bit n.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (miller_rabin_witness(n, a, d, s)) return false;
  }
  return true;
}

namespace {

// Trial division restricted to candidates c with c ≡ 1 mod step (step = 1
// tries every integer). Primes found are appended in ascending order.
void factor_into(std::uint64_t n, std::uint64_t step, std::vector<std::uint64_t>& out) {
  auto take = [&](std::uint64_t c) {
    if (n % c != 0) return;
    out.push_back(c);
    while (n % c == 0) n /= c;
  };
  if (step == 1) {
    take(2);
    step = 2;
    for (std::uint64_t c = 3; n > 1; c += step) {
      if (is_prime(n)) break;
      if (c > n / c) break;
      take(c);
    }
  } else {
    for (std::uint64_t c = step + 1; n > 1; c += step) {
      if (is_prime(n)) break;
      if (c > n / c) break;
      take(c);
    }
  }
  if (n > 1) out.push_back(n);
}

}  // namespace

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  if (n < 2) return out;
  factor_into(n, 1, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t mult_order(std::uint64_t q, std::uint64_t ell) {
  if (!is_prime(ell)) fail(ErrorKind::InvalidArgument, std::to_string(ell) + " is not prime");
  if (q % ell == 0)
    fail(ErrorKind::DividesModulus,
         std::to_string(ell) + " divides " + std::to_string(q));
  std::uint64_t order = ell - 1;
  for (std::uint64_t f : prime_factors(ell - 1)) {
    while (order % f == 0 && pow_mod(q, order / f, ell) == 1) order /= f;
  }
  return order;
}

std::vector<std::uint64_t> primitive_primes(std::uint64_t q, int d) {
  if (q < 2) fail(ErrorKind::InvalidArgument, "q must be at least 2");
  if (d < 1) fail(ErrorKind::InvalidArgument, "d must be at least 1");
  std::uint64_t n = checked_pow(q, static_cast<unsigned>(d)) - 1;
  // Strip every prime dividing q^k - 1 for a proper divisor k of d; what
  // remains is divisible exactly by the primes of order d.
  for (int k = 1; k < d; ++k) {
    if (d % k != 0) continue;
    const std::uint64_t m = checked_pow(q, static_cast<unsigned>(k)) - 1;
    for (std::uint64_t g = gcd(n, m); g > 1; g = gcd(n, m)) n /= g;
  }
  std::vector<std::uint64_t> out;
  if (n > 1) factor_into(n, static_cast<std::uint64_t>(d), out);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::uint64_t> primitive_prime(std::uint64_t q, int d,
                                             const GoodnessFilter& filter) {
  for (std::uint64_t ell : primitive_primes(q, d)) {
    if (filter.accepts(ell)) return ell;
  }
  return std::nullopt;
}

std::vector<std::uint64_t> bad_primes(Family family) {
  switch (family) {
    case Family::A:
    case Family::A2:
      return {};
    case Family::B:
    case Family::C:
    case Family::D:
    case Family::D2:
      return {2};
    case Family::G2:
    case Family::F4:
    case Family::E6:
    case Family::E6_2:
    case Family::E7:
    case Family::D4_3:
      return {2, 3};
    case Family::E8:
      return {2, 3, 5};
  }
  return {};
}

bool is_good(std::uint64_t ell, const GroupType& type) {
  const auto bad = bad_primes(type.family);
  return std::find(bad.begin(), bad.end(), ell) == bad.end();
}

std::map<int, std::uint64_t> admissible_d(const GroupType& type, const PrimePower& q,
                                          int d_max) {
  std::map<int, std::uint64_t> out;
  const auto filter = GoodnessFilter::block_theory(type);
  for (int d = 1; d <= d_max; ++d) {
    if (auto ell = primitive_prime(q.q, d, filter)) out.emplace(d, *ell);
  }
  return out;
}

}  // namespace blockatlas
