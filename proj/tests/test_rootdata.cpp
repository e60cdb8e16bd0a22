#include <doctest.h>

#include <algorithm>
#include <functional>

#include "blockatlas/error.hpp"
#include "blockatlas/rootdata.hpp"

using namespace blockatlas;

namespace {

IntVector vec(std::initializer_list<long long> xs) { return {xs.begin(), xs.end()}; }
IntMatrix mat(const std::vector<std::vector<long long>>& rows) { return IntMatrix::from_rows(rows); }

RootDatum torus(int rank, std::vector<GaloisElement> galois, std::vector<std::string> inertia = {},
                std::vector<std::string> wild = {}) {
  RootDatum d;
  d.name = "test_torus";
  d.rank = rank;
  d.galois = std::move(galois);
  d.inertia = std::move(inertia);
  d.wild = std::move(wild);
  d.frobenius = "frob";
  return d;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::InvariantViolation;
}

}  // namespace

TEST_CASE("catalog entries validate") {
  REQUIRE(catalog().size() >= 10);
  for (const auto& d : catalog()) {
    CAPTURE(d.name);
    CHECK_NOTHROW(validate(d));
    CHECK(&catalog_entry(d.name) == &d);
  }
  CHECK(kind_of([] { catalog_entry("nope"); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("catalog examples") {
  const auto& n1 = catalog_entry("norm_one_ramified");
  CHECK(n1.rank == 1);
  CHECK(n1.inertia_matrices().size() == 1);
  CHECK(n1.inertia_matrices()[0] == mat({{-1}}));
  CHECK(n1.frobenius_matrix() == mat({{1}}));

  const auto& pgl2 = catalog_entry("pgl2_split");
  for (const auto& g : pgl2.galois) CHECK(g.matrix == IntMatrix::identity(1));

  const auto& su3 = catalog_entry("su3_unramified");
  CHECK(su3.inertia_matrices().empty());
  const IntMatrix f = su3.frobenius_matrix();
  CHECK(f != IntMatrix::identity(2));
  CHECK(f * f == IntMatrix::identity(2));
  // the flip permutes the coroots
  for (const auto& c : su3.coroots) {
    const IntVector image = f * c;
    CHECK(std::find(su3.coroots.begin(), su3.coroots.end(), image) != su3.coroots.end());
  }
}

TEST_CASE("pi1 examples") {
  CHECK(pi1(catalog_entry("sl2_split")).is_trivial());
  CHECK(pi1(catalog_entry("pgl2_split")).to_string() == "Z/2");
  CHECK(pi1(catalog_entry("split_torus")).to_string() == "Z^2");
  CHECK(pi1(catalog_entry("sl3_split")).is_trivial());
  CHECK(pi1(catalog_entry("pgl3_split")).to_string() == "Z/3");
  CHECK(pi1(catalog_entry("gl3_split")).to_string() == "Z");
  CHECK(pi1(catalog_entry("sp4_split")).is_trivial());
}

TEST_CASE("galois generators preserve the coroot span") {
  for (const auto& d : catalog()) {
    const auto group = pi1(d);
    for (const auto& g : d.galois) CHECK(group.descends(g.matrix));
  }
}

TEST_CASE("kottwitz target examples") {
  CHECK(kottwitz_target(catalog_entry("pgl2_split")).group.to_string() == "Z/2");
  CHECK(kottwitz_target(catalog_entry("norm_one_ramified")).group.to_string() == "Z/2");
  CHECK(kottwitz_target(catalog_entry("unramified_induced_torus")).group.to_string() == "Z");
}

TEST_CASE("kottwitz target of a split datum is pi1") {
  for (const char* name : {"split_torus", "sl2_split", "pgl2_split", "gl2_split", "sl3_split",
                           "pgl3_split", "gl3_split", "sp4_split"})
    CHECK(same_structure(kottwitz_target(catalog_entry(name)).group, pi1(catalog_entry(name))));
}

TEST_CASE("derived and abelianized examples") {
  const auto gl2 = derived_and_abelianized(catalog_entry("gl2_split"));
  CHECK(gl2.pi1_der.group.is_trivial());
  CHECK(gl2.cochar_ab.to_string() == "Z");
  const auto pgl2 = derived_and_abelianized(catalog_entry("pgl2_split"));
  CHECK(pgl2.pi1_der.group.to_string() == "Z/2");
  CHECK(pgl2.cochar_ab.is_trivial());
  const auto t = derived_and_abelianized(catalog_entry("split_torus"));
  CHECK(t.pi1_der.group.is_trivial());
  CHECK(t.cochar_ab.to_string() == "Z^2");
}

TEST_CASE("exactness of pi1_der -> pi1 -> cochar_ab") {
  for (const auto& d : catalog()) {
    const auto da = derived_and_abelianized(d);
    CAPTURE(d.name);
    CHECK(da.to_ab.after(da.pi1_der.inclusion).is_zero());
    CHECK(da.to_ab.is_surjective());
    CHECK(same_structure(kernel(da.to_ab).group, da.pi1_der.group));
    CHECK(da.cochar_ab.is_finite() == (da.cochar_ab.free_rank() == 0));
    CHECK(da.cochar_ab.invariant_factors().empty());
  }
}

TEST_CASE("is_induced examples") {
  const auto z2 = AbelianGroup::free(2);
  const IntMatrix swap = mat({{0, 1}, {1, 0}});
  CHECK(is_induced(z2, std::vector{swap}, {vec({1, 0}), vec({0, 1})}));
  CHECK_FALSE(is_induced(AbelianGroup::free(1), std::vector{mat({{-1}})}, {vec({1})}));
  CHECK_FALSE(is_induced(z2, std::vector{mat({{0, 1}, {-1, 0}})}, {vec({1, 0}), vec({0, 1})}));
  // not a basis
  CHECK_FALSE(is_induced(z2, std::vector{swap}, {vec({1, 1}), vec({1, -1})}));
  CHECK(kind_of([&] { is_induced(z2, std::vector{swap}, {vec({1, 0})}); }) == ErrorKind::InvalidWitness);
  CHECK(kind_of([] {
          is_induced(AbelianGroup::cyclic_sum({2}), std::vector<IntMatrix>{}, {vec({1})});
        }) == ErrorKind::InvalidWitness);
}

TEST_CASE("invalid data are rejected") {
  SUBCASE("roots not pairing to 2") {
    RootDatum d = torus(1, {{"frob", mat({{1}})}});
    d.coroots = {vec({1}), vec({-1})};
    d.roots = {vec({1}), vec({-1})};
    CHECK(kind_of([&] { validate(d); }) == ErrorKind::InvalidDatum);
  }
  SUBCASE("galois element not permuting coroots") {
    RootDatum d = torus(2, {{"frob", mat({{1, 1}, {0, 1}})}});
    d.coroots = {vec({1, -1}), vec({-1, 1})};
    d.roots = {vec({1, -1}), vec({-1, 1})};
    CHECK(kind_of([&] { validate(d); }) == ErrorKind::InvalidDatum);
  }
  SUBCASE("wild not inside inertia") {
    RootDatum d = torus(1, {{"tau", mat({{-1}})}, {"frob", mat({{1}})}}, {}, {"tau"});
    CHECK(kind_of([&] { validate(d); }) == ErrorKind::InvalidDatum);
  }
  SUBCASE("unknown frobenius label") {
    RootDatum d = torus(1, {{"tau", mat({{-1}})}});
    CHECK(kind_of([&] { validate(d); }) == ErrorKind::InvalidDatum);
  }
  SUBCASE("non-invertible matrix") {
    RootDatum d = torus(1, {{"frob", mat({{2}})}});
    CHECK(kind_of([&] { validate(d); }) == ErrorKind::InvalidDatum);
  }
  SUBCASE("frobenius not normalizing inertia") {
    // inertia generated by diag(-1, 1); frob swaps the coordinates
    RootDatum d = torus(2, {{"tau", mat({{-1, 0}, {0, 1}})}, {"frob", mat({{0, 1}, {1, 0}})}}, {"tau"});
    CHECK(kind_of([&] { validate(d); }) == ErrorKind::InvalidDatum);
  }
  SUBCASE("infinite inertia image") {
    RootDatum d = torus(2, {{"tau", mat({{1, 1}, {0, 1}})}, {"frob", IntMatrix::identity(2)}}, {"tau"});
    CHECK(kind_of([&] { validate(d); }) == ErrorKind::InvalidDatum);
  }
}

TEST_CASE("unimodular inverse") {
  const IntMatrix m = mat({{2, 1}, {1, 1}});
  CHECK(m * unimodular_inverse(m) == IntMatrix::identity(2));
  CHECK(kind_of([] { unimodular_inverse(mat({{2, 0}, {0, 1}})); }) == ErrorKind::InvalidArgument);
}
