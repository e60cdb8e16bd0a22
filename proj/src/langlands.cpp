#include "blockatlas/langlands.hpp"

#include "blockatlas/arith.hpp"
#include "blockatlas/error.hpp"

namespace blockatlas {

namespace {

void check_prime(std::uint64_t p) {
  ensure(is_prime(p), ErrorKind::InvalidArgument, "p = " + std::to_string(p) + " is not prime");
}

std::vector<IntMatrix> restrict_all(const Subgroup& sub, const std::vector<IntMatrix>& fs) {
  std::vector<IntMatrix> out;
  for (const auto& f : fs) out.push_back(restrict_endo(sub, f));
  return out;
}

AbelianGroup inertia_coinvariants(const RootDatum& datum) {
  return coinvariants(AbelianGroup::free(datum.rank), datum.inertia_matrices()).group;
}

Homomorphism between_p_torsion(const Homomorphism& f, const Subgroup& from, const Subgroup& to) {
  return corestrict(restrict_hom(f, from), to);
}

struct CoinvariantComparison {
  bool p_groups = false;
  bool iso = false;
  bool h1_orders = false;
};

// For a module A (presented on Z^r with the Galois matrices): compares the
// inertia coinvariants of the p-torsion of the wild coinvariants with the
// p-torsion of the inertia coinvariants.
CoinvariantComparison compare_coinvariants(const RootDatum& datum, const AbelianGroup& a,
                                           std::uint64_t p) {
  const auto inertia = datum.inertia_matrices();
  const IntMatrix& frob = datum.frobenius_matrix();
  const auto a_wild = coinvariants(a, datum.wild_matrices());
  const auto a_inertia = coinvariants(a, inertia);
  const Subgroup n = p_torsion(a_wild.group, p);
  const Subgroup t = p_torsion(a_inertia.group, p);
  const auto n_inertia = coinvariants(n.group, restrict_all(n, inertia));

  CoinvariantComparison out;
  out.p_groups = n.group.is_p_group(p) && t.group.is_p_group(p);
  const Homomorphism to_inertia(n_inertia.group, a_inertia.group, n.inclusion.matrix());
  out.iso = corestrict(to_inertia, t).is_isomorphism();
  const auto h1_n = h1_cyclic(n_inertia.group, restrict_endo(n, frob));
  const auto h1_t = h1_cyclic(t.group, restrict_endo(t, frob));
  out.h1_orders = h1_n.order() == h1_t.order();
  return out;
}

}  // namespace

AbelianGroup group_side_torsor(const RootDatum& datum, std::uint64_t p) {
  check_prime(p);
  const auto fixed = fixed_points(inertia_coinvariants(datum), datum.frobenius_matrix());
  return p_torsion(fixed.group, p).group;
}

AbelianGroup dual_side_torsor(const RootDatum& datum, std::uint64_t p) {
  check_prime(p);
  const Subgroup tors = p_torsion(inertia_coinvariants(datum), p);
  const IntMatrix frob = restrict_endo(tors, datum.frobenius_matrix());
  return coinvariants(tors.group, std::span<const IntMatrix>(&frob, 1)).group;
}

AbelianGroup dual_side_torsor_via_torsion(const RootDatum& datum, std::uint64_t p) {
  check_prime(p);
  const Subgroup tors = torsion(inertia_coinvariants(datum));
  const IntMatrix frob = restrict_endo(tors, datum.frobenius_matrix());
  return p_torsion(coinvariants(tors.group, std::span<const IntMatrix>(&frob, 1)).group, p).group;
}

TorsorReport bijection_check(const RootDatum& datum, std::uint64_t p) {
  TorsorReport out;
  out.p = p;
  out.group_side = group_side_torsor(datum, p);
  out.dual_side = dual_side_torsor(datum, p);
  out.group_order = *out.group_side.order();
  out.dual_order = *out.dual_side.order();
  out.equal = out.group_order == out.dual_order;
  out.isomorphic = same_structure(out.group_side, out.dual_side);
  out.regime = datum.quasi_split ? "quasi_split" : "conjectural";
  return out;
}

CornqsReport cornqs_check(const RootDatum& datum, std::uint64_t p) {
  check_prime(p);
  CornqsReport out;
  out.p = p;
  const auto parts = derived_and_abelianized(datum);
  out.pi1_der_order = *parts.pi1_der.group.order();
  out.hypothesis_a = out.pi1_der_order % p != 0;

  const auto wild = datum.wild_matrices();
  std::vector<IntVector> witness;
  if (datum.induced_witness) {
    out.witness_supplied = true;
    witness = *datum.induced_witness;
  } else {
    for (std::size_t i = 0; i < parts.cochar_ab.num_canonical_generators(); ++i)
      witness.push_back(parts.cochar_ab.canonical_generator(i));
  }
  out.hypothesis_b = is_induced(parts.cochar_ab, wild, witness);

  const auto inertia = datum.inertia_matrices();
  const auto der_i = coinvariants(parts.pi1_der.group, restrict_all(parts.pi1_der, inertia));
  const auto pi1_i = coinvariants(parts.pi1, inertia);
  const auto ab_i = coinvariants(parts.cochar_ab, inertia);
  const Homomorphism first(der_i.group, pi1_i.group, parts.pi1_der.inclusion.matrix());
  const Homomorphism second(pi1_i.group, ab_i.group, IntMatrix::identity(datum.rank));
  const Subgroup t_der = p_torsion(der_i.group, p);
  const Subgroup t_pi1 = p_torsion(pi1_i.group, p);
  const Subgroup t_ab = p_torsion(ab_i.group, p);
  const auto f1 = between_p_torsion(first, t_der, t_pi1);
  const auto f2 = between_p_torsion(second, t_pi1, t_ab);
  out.chain_composite_zero = f2.after(f1).is_zero();
  out.chain_exact_middle = image(f1).group.order() == kernel(f2).group.order();
  out.chain_surjective = f2.is_surjective();

  out.pi1_p_torsion = p_torsion(kottwitz_target(datum).group, p).group;
  out.conclusion = out.pi1_p_torsion.is_trivial();
  const bool chain = out.chain_composite_zero && out.chain_exact_middle && out.chain_surjective;
  out.consistent = chain && (!(out.hypothesis_a && out.hypothesis_b) || out.conclusion);
  return out;
}

LemmaReport lemma_checks(const RootDatum& datum, std::uint64_t p) {
  check_prime(p);
  LemmaReport out;
  out.p = p;
  const AbelianGroup x = AbelianGroup::free(datum.rank);
  const AbelianGroup m = pi1(datum);
  const auto centre = compare_coinvariants(datum, m, p);
  const auto torus = compare_coinvariants(datum, x, p);
  out.p_groups = centre.p_groups && torus.p_groups;
  out.centre_coinvariants = centre.iso;
  out.centre_h1_orders = centre.h1_orders;
  out.torus_coinvariants = torus.iso;
  out.torus_h1_orders = torus.h1_orders;

  const auto inertia = datum.inertia_matrices();
  const auto x_i = coinvariants(x, inertia);
  const auto m_i = coinvariants(m, inertia);
  const Subgroup tx = p_torsion(x_i.group, p);
  const Subgroup tm = p_torsion(m_i.group, p);
  const Homomorphism iota(x_i.group, m_i.group, IntMatrix::identity(datum.rank));
  const auto iota_p = between_p_torsion(iota, tx, tm);
  out.injective = iota_p.is_injective();
  const auto fixed = fixed_points(tx.group, restrict_endo(tx, datum.frobenius_matrix()));
  out.injective_on_fixed = iota_p.after(fixed.inclusion).is_injective();
  return out;
}

}  // namespace blockatlas
