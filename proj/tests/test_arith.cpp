#include <doctest.h>

#include <set>

#include "blockatlas/arith.hpp"
#include "blockatlas/error.hpp"

using namespace blockatlas;

namespace {

std::uint64_t naive_order(std::uint64_t q, std::uint64_t ell) {
  std::uint64_t x = q % ell;
  for (std::uint64_t d = 1;; ++d, x = x * q % ell)
    if (x == 1) return d;
}

bool naive_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t k = 2; k < n; ++k)
    if (n % k == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("mult_order examples") {
  CHECK(mult_order(2, 7) == 3);
  CHECK(mult_order(4, 5) == 2);
  try {
    mult_order(2, 2);
    FAIL("expected DividesModulus");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DividesModulus);
  }
}

TEST_CASE("mult_order agrees with iteration for q, ell < 100") {
  for (std::uint64_t ell = 2; ell < 100; ++ell) {
    if (!naive_prime(ell)) continue;
    for (std::uint64_t q = 2; q < 100; ++q) {
      if (q % ell == 0) continue;
      const auto d = mult_order(q, ell);
      REQUIRE(pow_mod(q, d, ell) == 1);
      for (std::uint64_t e = 1; e < d; ++e) REQUIRE(pow_mod(q, e, ell) != 1);
      REQUIRE(d == naive_order(q, ell));
    }
  }
}

TEST_CASE("primitive_prime examples") {
  CHECK_FALSE(primitive_prime(2, 6, GoodnessFilter::none()).has_value());
  CHECK(primitive_prime(2, 4, GoodnessFilter::odd()) == 5u);
  CHECK(primitive_prime(2, 3, GoodnessFilter::odd()) == 7u);
}

TEST_CASE("primitive_primes match a brute-force scan") {
  for (std::uint64_t q = 2; q <= 7; ++q)
    for (int d = 1; d <= 6; ++d) {
      const std::uint64_t n = checked_pow(q, static_cast<unsigned>(d)) - 1;
      std::vector<std::uint64_t> expected;
      for (std::uint64_t ell = 2; ell <= n; ++ell)
        if (n % ell == 0 && naive_prime(ell) && q % ell != 0 && naive_order(q, ell) == static_cast<std::uint64_t>(d))
          expected.push_back(ell);
      CAPTURE(q);
      CAPTURE(d);
      CHECK(primitive_primes(q, d) == expected);
    }
}

TEST_CASE("odd primitive primes exist on the desk grid except at (2, 6)") {
  for (std::uint64_t q = 2; q <= 16; ++q)
    for (int d = 3; d <= 12; ++d) {
      const auto ell = primitive_prime(q, d, GoodnessFilter::odd());
      CAPTURE(q);
      CAPTURE(d);
      if (q == 2 && d == 6) {
        CHECK_FALSE(ell.has_value());
        continue;
      }
      REQUIRE(ell.has_value());
      CHECK(*ell % 2 == 1);
      CHECK(mult_order(q, *ell) == static_cast<std::uint64_t>(d));
      // q has order d mod ell, so d divides ell - 1 and ell > d
      for (int k = 1; k <= d; ++k) CHECK(*ell > static_cast<std::uint64_t>(k));
    }
}

TEST_CASE("is_good examples and bad-prime table") {
  CHECK_FALSE(is_good(2, GroupType::make("B", 3)));
  CHECK(is_good(5, GroupType::make("C", 4)));
  CHECK(is_good(3, GroupType::make("A", 7)));
  CHECK(bad_primes(Family::A).empty());
  CHECK(bad_primes(Family::A2).empty());
  for (auto f : {Family::B, Family::C, Family::D, Family::D2})
    CHECK(bad_primes(f) == std::vector<std::uint64_t>{2});
  for (auto f : {Family::G2, Family::F4, Family::E6, Family::E6_2, Family::E7, Family::D4_3})
    CHECK(bad_primes(f) == std::vector<std::uint64_t>{2, 3});
  CHECK(bad_primes(Family::E8) == std::vector<std::uint64_t>{2, 3, 5});
}

TEST_CASE("block-theory filter excludes 3 for 3D4") {
  const auto f = GoodnessFilter::block_theory(GroupType::make("3D4", 0));
  CHECK_FALSE(f.accepts(2));
  CHECK_FALSE(f.accepts(3));
  CHECK(f.accepts(5));
  const auto b = GoodnessFilter::block_theory(GroupType::make("B", 2));
  CHECK_FALSE(b.accepts(2));
  CHECK(b.accepts(3));
}

TEST_CASE("admissible_d examples") {
  const auto a5 = admissible_d(GroupType::make("A", 5), PrimePower::make(2), 6);
  CHECK(a5 == std::map<int, std::uint64_t>{{2, 3}, {3, 7}, {4, 5}, {5, 31}});
  const auto b3 = admissible_d(GroupType::make("B", 3), PrimePower::make(4), 3);
  CHECK(b3 == std::map<int, std::uint64_t>{{1, 3}, {2, 5}, {3, 7}});
  CHECK(admissible_d(GroupType::make("A", 2), PrimePower::make(3), 0).empty());
}

TEST_CASE("prime powers") {
  const auto q = PrimePower::make(8);
  CHECK(q.p == 2);
  CHECK(q.r == 3);
  for (std::uint64_t bad : {0ull, 1ull, 6ull, 12ull}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(PrimePower::make(bad), Error);
  }
}

TEST_CASE("checked_pow overflows loudly") {
  CHECK(checked_pow(2, 63) == (1ull << 63));
  try {
    checked_pow(2, 64);
    FAIL("expected Overflow");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Overflow);
  }
}

TEST_CASE("group type names") {
  CHECK(GroupType::make("2A", 5).name() == "2A_5");
  CHECK(GroupType::make("E8", 0).rank == 8);
  CHECK_THROWS_AS(GroupType::make("D", 1), Error);
  CHECK_THROWS_AS(GroupType::make("A", 0), Error);
  CHECK_THROWS_AS(GroupType::make("E6", 7), Error);
  CHECK_THROWS_AS(GroupType::make("X", 3), Error);
}
