#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace blockatlas {

/// Families of simple groups. Only the classical ones have built-in
/// unipotent combinatorics; the exceptional ones exist so that externally
/// tabulated data can be attached to them.
enum class Family { A, A2, B, C, D, D2, G2, F4, E6, E6_2, E7, E8, D4_3 };

struct GroupType {
  Family family = Family::A;
  int rank = 1;

  /// Accepts "A", "2A", "B", "C", "D", "2D", "G2", "F4", "E6", "2E6",
  /// "E7", "E8", "3D4". For exceptional names the rank is implied and a
  /// conflicting explicit rank is rejected.
  static GroupType make(std::string_view family, int rank);
  static GroupType make(Family family, int rank);

  bool is_classical() const;
  bool is_exceptional() const { return !is_classical(); }
  std::string family_name() const;
  std::string name() const;  // e.g. "2A_5"

  auto operator<=>(const GroupType&) const = default;
};

std::string family_name(Family family);

struct PrimePower {
  std::uint64_t q = 2;
  std::uint64_t p = 2;
  int r = 1;

  static PrimePower make(std::uint64_t q);
};

/// Restrictions placed on a candidate prime.
struct GoodnessFilter {
  std::optional<GroupType> type;  // reject primes bad for this type
  bool odd_only = false;
  std::uint64_t min_prime = 2;
  bool exclude_three = false;  // the extra hypothesis when 3D4 is involved

  bool accepts(std::uint64_t ell) const;

  static GoodnessFilter none() { return {}; }
  static GoodnessFilter odd() { return {std::nullopt, true, 2, false}; }
  /// Odd, good for `type`, and not 3 when `type` is 3D4.
  static GoodnessFilter block_theory(const GroupType& type);
};

bool is_prime(std::uint64_t n);
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

/// base^exp, throwing Overflow when it does not fit in 64 bits.
std::uint64_t checked_pow(std::uint64_t base, unsigned exp);

/// Distinct prime factors, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

std::uint64_t mult_order(std::uint64_t q, std::uint64_t ell);

/// Smallest prime passing `filter` modulo which q has order exactly d.
std::optional<std::uint64_t> primitive_prime(std::uint64_t q, int d,
                                             const GoodnessFilter& filter);

/// All primes modulo which q has order exactly d (before filtering).
std::vector<std::uint64_t> primitive_primes(std::uint64_t q, int d);

std::vector<std::uint64_t> bad_primes(Family family);
bool is_good(std::uint64_t ell, const GroupType& type);

/// d -> smallest witnessing prime, for every d <= d_max such that some odd
/// prime good for `type` has q of order d.
std::map<int, std::uint64_t> admissible_d(const GroupType& type, const PrimePower& q,
                                          int d_max);

}  // namespace blockatlas
