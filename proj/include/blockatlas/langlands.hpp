#pragma once

#include <cstdint>
#include <string>

#include "blockatlas/abelian.hpp"
#include "blockatlas/rootdata.hpp"

namespace blockatlas {

/// p-torsion of the Frobenius-fixed inertia coinvariants of X_*(T).
AbelianGroup group_side_torsor(const RootDatum& datum, std::uint64_t p);
/// Frobenius coinvariants of the p-torsion of the inertia coinvariants.
AbelianGroup dual_side_torsor(const RootDatum& datum, std::uint64_t p);
/// Same group computed the other way round: Frobenius coinvariants of the
/// full torsion, then the p-part.
AbelianGroup dual_side_torsor_via_torsion(const RootDatum& datum, std::uint64_t p);

struct TorsorReport {
  std::uint64_t p = 2;
  AbelianGroup group_side;
  AbelianGroup dual_side;
  Integer group_order;
  Integer dual_order;
  bool equal = false;
  bool isomorphic = false;
  /// "quasi_split", or "conjectural" for data flagged non-quasi-split.
  std::string regime;
};

TorsorReport bijection_check(const RootDatum& datum, std::uint64_t p);

/// Evaluation of the primitivity criterion for the depth-zero idempotent:
/// both hypotheses, the exact sequence on p-torsion of inertia
/// coinvariants, and the conclusion computed on its own.
struct CornqsReport {
  std::uint64_t p = 2;
  Integer pi1_der_order;
  bool hypothesis_a = false;  // p does not divide |pi1_der|
  bool hypothesis_b = false;  // the abelianization is wild-induced
  bool witness_supplied = false;
  bool chain_composite_zero = false;
  bool chain_exact_middle = false;
  bool chain_surjective = false;
  AbelianGroup pi1_p_torsion;  // p-torsion of the Kottwitz target
  bool conclusion = false;     // pi1_p_torsion is trivial
  /// False only when both hypotheses hold and the conclusion fails, or the
  /// exact sequence does not behave as expected.
  bool consistent = false;
};

CornqsReport cornqs_check(const RootDatum& datum, std::uint64_t p);

/// Per-instance checks of the abelian-group statements behind the dual
/// side. M = pi1(G) plays the character group of the centre of the dual
/// group and X = X_*(T) that of the dual torus.
struct LemmaReport {
  std::uint64_t p = 2;
  bool p_groups = false;              // X and M: p-torsion after P and after I
  bool centre_coinvariants = false;   // (M_{P,p-tors})_I -> M_{I,p-tors} iso
  bool centre_h1_orders = false;      // equal Frobenius coinvariant orders
  bool torus_coinvariants = false;    // same two statements for X
  bool torus_h1_orders = false;
  bool injective = false;             // X_{I,p-tors} -> M_{I,p-tors}
  bool injective_on_fixed = false;    // restricted to Frobenius-fixed points
  bool all() const {
    return p_groups && centre_coinvariants && centre_h1_orders && torus_coinvariants &&
           torus_h1_orders && injective && injective_on_fixed;
  }
};

LemmaReport lemma_checks(const RootDatum& datum, std::uint64_t p);

}  // namespace blockatlas
