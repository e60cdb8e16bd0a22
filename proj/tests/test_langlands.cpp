#include <doctest.h>

#include "blockatlas/error.hpp"
#include "blockatlas/langlands.hpp"
#include "support.hpp"

using namespace blockatlas;

namespace {

IntMatrix mat(const std::vector<std::vector<long long>>& rows) { return IntMatrix::from_rows(rows); }

// Element counts of ker(F - 1) and coker(F - 1) on the p-torsion of the
// inertia coinvariants, listed element by element.
std::pair<long long, long long> brute_sides(const RootDatum& d, std::uint64_t p) {
  const auto xi = coinvariants(AbelianGroup::free(static_cast<std::size_t>(d.rank)), d.inertia_matrices());
  const auto t = p_torsion(xi.group, p);
  const IntMatrix f = restrict_endo(t, d.frobenius_matrix());
  // rewrite on canonical generators so the module is a plain sum of cyclics
  const auto& g = t.group;
  std::vector<long long> orders;
  for (const auto& x : g.invariant_factors()) orders.push_back(x.convert_to<long long>());
  const std::size_t k = orders.size();
  IntMatrix fc(k, k);
  for (std::size_t j = 0; j < k; ++j) {
    const auto image = g.coordinates(f * g.canonical_generator(j));
    for (std::size_t i = 0; i < k; ++i) fc(i, j) = image[i];
  }
  return testsupport::ker_coker_by_listing(orders, fc);
}

RootDatum custom_torus(std::vector<GaloisElement> galois, std::vector<std::string> inertia,
                       std::vector<std::string> wild, int rank) {
  RootDatum d;
  d.name = "custom";
  d.rank = rank;
  d.galois = std::move(galois);
  d.inertia = std::move(inertia);
  d.wild = std::move(wild);
  d.frobenius = "frob";
  validate(d);
  return d;
}

}  // namespace

TEST_CASE("group side examples") {
  const auto& n1 = catalog_entry("norm_one_ramified");
  CHECK(group_side_torsor(n1, 2).to_string() == "Z/2");
  CHECK(group_side_torsor(n1, 3).is_trivial());
  for (std::uint64_t p : {2, 3, 5, 7}) CHECK(group_side_torsor(catalog_entry("split_torus"), p).is_trivial());
}

TEST_CASE("dual side examples") {
  CHECK(dual_side_torsor(catalog_entry("norm_one_ramified"), 2).to_string() == "Z/2");
  for (std::uint64_t p : {2, 3, 5}) CHECK(dual_side_torsor(catalog_entry("tame_induced_torus"), p).is_trivial());
  // coinvariants of the swap on Z^2 are Z, which has no torsion
  CHECK(dual_side_torsor(catalog_entry("wild_induced_torus"), 2).is_trivial());
  CHECK(dual_side_torsor(catalog_entry("wild_sign_torus_rank2"), 2).to_string() == "Z/2 x Z/2");
}

TEST_CASE("bijection examples") {
  const auto r = bijection_check(catalog_entry("norm_one_ramified"), 2);
  CHECK(r.group_order == 2);
  CHECK(r.dual_order == 2);
  CHECK(r.equal);
  CHECK(r.isomorphic);
  CHECK(r.regime == "quasi_split");
  const auto su3 = bijection_check(catalog_entry("su3_unramified"), 2);
  CHECK(su3.group_order == 1);
  CHECK(su3.dual_order == 1);
  CHECK(bijection_check(catalog_entry("split_torus"), 5).equal);
}

TEST_CASE("torsor orders agree with element counts on the whole catalog") {
  for (const auto& d : catalog())
    for (std::uint64_t p : {2, 3, 5}) {
      const auto r = bijection_check(d, p);
      const auto [ker, coker] = brute_sides(d, p);
      CAPTURE(d.name);
      CAPTURE(p);
      CHECK(r.equal);
      CHECK(r.group_order == ker);
      CHECK(r.dual_order == coker);
      CHECK(r.group_side.is_p_group(p));
      CHECK(r.dual_side.is_p_group(p));
      CHECK(*dual_side_torsor_via_torsion(d, p).order() == r.dual_order);
    }
}

TEST_CASE("tamely ramified entries have trivial torsors") {
  for (const auto& d : catalog()) {
    if (!d.wild.empty()) continue;
    for (std::uint64_t p : {2, 3, 5}) {
      CAPTURE(d.name);
      CHECK(bijection_check(d, p).group_order == 1);
      CHECK(bijection_check(d, p).dual_order == 1);
    }
  }
}

TEST_CASE("frobenius acting non-trivially on the torsion") {
  // inertia -1 on both coordinates, frobenius swapping them: X_I = (Z/2)^2
  const auto d = custom_torus({{"tau", mat({{-1, 0}, {0, -1}})}, {"frob", mat({{0, 1}, {1, 0}})}}, {"tau"},
                              {"tau"}, 2);
  const auto r = bijection_check(d, 2);
  CHECK(r.group_side.to_string() == "Z/2");
  CHECK(r.dual_side.to_string() == "Z/2");
  CHECK(r.equal);
  CHECK(*dual_side_torsor_via_torsion(d, 2).order() == 2);
}

TEST_CASE("non-quasi-split data are flagged") {
  RootDatum d = catalog_entry("norm_one_ramified");
  d.quasi_split = false;
  CHECK(bijection_check(d, 2).regime == "conjectural");
}

TEST_CASE("p must be prime") {
  for (std::uint64_t p : {0, 1, 4, 9}) {
    CAPTURE(p);
    CHECK_THROWS_AS(bijection_check(catalog_entry("split_torus"), p), Error);
  }
}

TEST_CASE("cornqs examples") {
  for (const char* name : {"sl2_split", "sl3_split"})
    for (std::uint64_t p : {2, 3, 5}) {
      const auto r = cornqs_check(catalog_entry(name), p);
      CHECK(r.hypothesis_a);
      CHECK(r.hypothesis_b);
      CHECK(r.conclusion);
      CHECK(r.consistent);
    }
  const auto pgl2 = cornqs_check(catalog_entry("pgl2_split"), 2);
  CHECK_FALSE(pgl2.hypothesis_a);
  CHECK(pgl2.pi1_der_order == 2);
  CHECK(pgl2.consistent);
  CHECK_FALSE(pgl2.conclusion);
  for (std::uint64_t p : {2, 3, 5}) {
    const auto gl2 = cornqs_check(catalog_entry("gl2_unramified_twist"), p);
    CHECK(gl2.hypothesis_a);
    CHECK(gl2.hypothesis_b);
    CHECK(gl2.conclusion);
  }
}

TEST_CASE("cornqs is consistent on the catalog") {
  for (const auto& d : catalog())
    for (std::uint64_t p : {2, 3, 5}) {
      const auto r = cornqs_check(d, p);
      CAPTURE(d.name);
      CAPTURE(p);
      CHECK(r.consistent);
      CHECK(r.chain_composite_zero);
      CHECK(r.chain_exact_middle);
      CHECK(r.chain_surjective);
      if (r.hypothesis_a && r.hypothesis_b) CHECK(r.pi1_p_torsion.is_trivial());
      CHECK(r.conclusion == r.pi1_p_torsion.is_trivial());
    }
}

TEST_CASE("cornqs hypothesis B follows the witness") {
  RootDatum d = catalog_entry("wild_induced_torus");
  CHECK(cornqs_check(d, 2).hypothesis_b);
  d.induced_witness = std::vector<IntVector>{{1, 1}, {0, 1}};
  CHECK_FALSE(cornqs_check(d, 2).hypothesis_b);
  CHECK(cornqs_check(d, 2).witness_supplied);
  d.induced_witness = std::vector<IntVector>{{1, 0}};
  CHECK_THROWS_AS(cornqs_check(d, 2), Error);
  CHECK_FALSE(cornqs_check(catalog_entry("wild_sign_torus_rank2"), 2).hypothesis_b);
}

TEST_CASE("lemma checks") {
  const auto pgl2 = lemma_checks(catalog_entry("pgl2_split"), 2);
  CHECK(pgl2.injective);
  CHECK(pgl2.all());
  CHECK(lemma_checks(catalog_entry("split_torus"), 3).all());
  CHECK(lemma_checks(catalog_entry("su3_unramified"), 3).all());
  for (const auto& d : catalog())
    for (std::uint64_t p : {2, 3, 5}) {
      CAPTURE(d.name);
      CAPTURE(p);
      CHECK(lemma_checks(d, p).all());
    }
}
