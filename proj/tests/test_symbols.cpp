#include <doctest.h>

#include <map>
#include <set>

#include "blockatlas/error.hpp"
#include "blockatlas/symbols.hpp"
#include "support.hpp"

using namespace blockatlas;

namespace {

// Symbols of rank n and defect k built from bipartitions of n - floor(k^2/4):
// row lengths m + k and m, beta sets of the two partitions.
std::set<std::string> bipartition_oracle(int n, int k) {
  std::set<std::string> out;
  const int rest = n - (k * k) / 4;
  if (rest < 0) return out;
  for (int a = 0; a <= rest; ++a)
    for (const auto& alpha : partitions_of(a))
      for (const auto& beta : partitions_of(rest - a)) {
        const int m = std::max(alpha.length() - k, beta.length());
        auto row = [](const Partition& p, int len) {
          std::vector<int> r;
          for (int i = 0; i < len; ++i) {
            const int part = i < p.length() ? p.parts()[static_cast<std::size_t>(i)] : 0;
            r.push_back(part + len - 1 - i);
          }
          return r;
        };
        out.insert(Symbol(row(alpha, m + k), row(beta, m)).key());
      }
  return out;
}

std::set<std::string> keys(const std::vector<Symbol>& symbols) {
  std::set<std::string> out;
  for (const auto& s : symbols) out.insert(s.key());
  return out;
}

// Random-order removal, hooks or cohooks.
Symbol random_core(Symbol sigma, int d, bool cohook, testsupport::Gen& gen) {
  for (;;) {
    const auto moves = cohook ? remove_cohook(sigma, d) : remove_hook(sigma, d);
    if (moves.empty()) return sigma;
    sigma = moves[static_cast<std::size_t>(gen.range(0, static_cast<long long>(moves.size()) - 1))];
  }
}

std::vector<Symbol> all_symbols(int n) { return enumerate_symbols(n, DefectClass::any()); }

}  // namespace

TEST_CASE("rank and defect examples") {
  const Symbol a({0, 1}, {2});
  CHECK(a.rank() == 2);
  CHECK(a.defect() == 1);
  CHECK(Symbol({}, {}).rank() == 0);
  CHECK(Symbol({}, {}).defect() == 0);
  CHECK(Symbol({1}, {}).rank() == 1);
  CHECK(Symbol({1}, {}).defect() == 1);
}

TEST_CASE("reduction and rendering") {
  const Symbol shifted({0, 1, 2}, {0, 3});
  CHECK(shifted == Symbol({0, 1}, {2}));
  CHECK(shifted.rank() == Symbol({0, 1, 2}, {0, 3}).rank());
  CHECK(Symbol({2}, {0, 1}).key() == "({0,1},{2})");
  CHECK(Symbol({1}, {1}).degenerate());
  CHECK_THROWS_AS(Symbol({1, 1}, {}), Error);
  CHECK_THROWS_AS(Symbol({-1}, {}), Error);
}

TEST_CASE("phi examples") {
  const Symbol sigma({0, 1}, {2});
  CHECK(phi(sigma).same_unordered(Symbol({0}, {1, 2})));
  CHECK(phi(phi(sigma)).same_unordered(sigma));
  CHECK(phi(sigma).rank() == 2);
}

TEST_CASE("hook and cohook core examples") {
  CHECK(hook_core(Symbol({1}, {}), 1) == Symbol({0}, {}));
  CHECK(hook_core(Symbol({0, 1}, {1}), 1).same_unordered(Symbol({0}, {})));
  for (int n = 0; n <= 6; ++n)
    for (const auto& s : all_symbols(n))
      for (int d = 1; d <= 4; ++d) {
        CHECK((s.rank() - cohook_core(s, d).rank()) % d == 0);
        CHECK((s.rank() - hook_core(s, d).rank()) % d == 0);
        CHECK(hook_core(s, d).defect() == s.defect());
      }
}

TEST_CASE("enumerate_symbols examples") {
  const auto b1 = enumerate_symbols(1, DefectClass::odd());
  REQUIRE(b1.size() == 2);
  CHECK(keys(b1) == std::set<std::string>{"({1},{})", "({0,1},{1})"});
  CHECK(enumerate_symbols(2, DefectClass::odd()).size() == 6);
  const auto d2 = enumerate_symbols(2, DefectClass::zero_mod_four());
  CHECK(d2.size() == 3);
  CHECK(std::count_if(d2.begin(), d2.end(), [](const Symbol& s) { return s.degenerate(); }) == 1);
}

TEST_CASE("enumeration matches the bipartition construction") {
  for (int n = 0; n <= 8; ++n) {
    std::set<std::string> expected;
    for (int k = 0; k * k / 4 <= n; ++k) {
      const auto part = bipartition_oracle(n, k);
      expected.insert(part.begin(), part.end());
    }
    const auto got = all_symbols(n);
    CAPTURE(n);
    CHECK(got.size() == expected.size());
    CHECK(keys(got) == expected);
    for (const auto& s : got) {
      CHECK(s.rank() == n);
      CHECK(s == s.canonical());
    }
    for (std::size_t i = 1; i < got.size(); ++i) CHECK(symbol_less(got[i - 1], got[i]));
  }
}

TEST_CASE("defect classes filter") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& s : enumerate_symbols(n, DefectClass::odd())) CHECK(s.defect() % 2 == 1);
    for (const auto& s : enumerate_symbols(n, DefectClass::zero_mod_four())) CHECK(s.defect() % 4 == 0);
    for (const auto& s : enumerate_symbols(n, DefectClass::two_mod_four())) CHECK(s.defect() % 4 == 2);
  }
}

TEST_CASE("symbol rank bound") {
  try {
    enumerate_symbols(11, DefectClass::odd());
    FAIL("expected BoundExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BoundExceeded);
  }
}

TEST_CASE("phi: involution, rank, defect parity on rank <= 8") {
  for (int n = 0; n <= 8; ++n)
    for (const auto& s : all_symbols(n)) {
      const Symbol image = phi(s);
      REQUIRE(phi(image).same_unordered(s));
      REQUIRE(image.rank() == s.rank());
      REQUIRE((image.defect() - s.defect()) % 2 == 0);
    }
}

TEST_CASE("phi: defect change mod 4 depends only on (defect mod 4, rank mod 2)") {
  std::map<std::pair<int, int>, std::set<int>> fibres;
  for (int n = 0; n <= 8; ++n)
    for (const auto& s : all_symbols(n)) {
      if (s.defect() % 2) continue;
      const int change = ((phi(s).defect() - s.defect()) % 4 + 4) % 4;
      fibres[{s.defect() % 4, s.rank() % 2}].insert(change);
    }
  CHECK(fibres.size() == 4);
  for (const auto& [key, values] : fibres) {
    CAPTURE(key.first);
    CAPTURE(key.second);
    CHECK(values.size() == 1);
  }
}

TEST_CASE("phi transports 1-hook cores to 1-cohook cores and fixes 2-cohook cores") {
  for (int n = 1; n <= 8; ++n) {
    const auto symbols = all_symbols(n);
    for (std::size_t i = 0; i < symbols.size(); ++i)
      for (std::size_t j = i + 1; j < symbols.size(); ++j) {
        const auto &a = symbols[i], &b = symbols[j];
        if (a.defect() % 2 != b.defect() % 2) continue;
        const bool hook = hook_core(a, 1).same_unordered(hook_core(b, 1));
        const bool cohook = cohook_core(phi(a), 1).same_unordered(cohook_core(phi(b), 1));
        REQUIRE(hook == cohook);
        const bool two = cohook_core(a, 2).same_unordered(cohook_core(b, 2));
        const bool two_phi = cohook_core(phi(a), 2).same_unordered(cohook_core(phi(b), 2));
        REQUIRE(two == two_phi);
      }
  }
}

TEST_CASE("cores are idempotent and removal-order independent") {
  testsupport::Gen gen(0x5eed03);
  for (int n = 1; n <= 7; ++n)
    for (const auto& s : all_symbols(n))
      for (int d = 1; d <= 4; ++d) {
        const Symbol h = hook_core(s, d);
        const Symbol c = cohook_core(s, d);
        REQUIRE(hook_core(h, d) == h);
        REQUIRE(cohook_core(c, d).same_unordered(c));
        for (int trial = 0; trial < 4; ++trial) {
          REQUIRE(random_core(s, d, false, gen).same_unordered(h));
          REQUIRE(random_core(s, d, true, gen).same_unordered(c));
        }
      }
}
