#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "blockatlas/abelian.hpp"

namespace blockatlas {

struct GaloisElement {
  std::string label;
  IntMatrix matrix;  // acts on the cocharacter lattice Z^r
};

/// Integral root datum (cocharacters Z^r, coroots, roots in the dual) with
/// a Galois action given by generator matrices. `wild` and `inertia` list
/// labels of `galois`; `frobenius` names one lift of Frobenius. A datum
/// without roots is a torus.
struct RootDatum {
  std::string name;
  int rank = 0;
  std::vector<IntVector> coroots;
  std::vector<IntVector> roots;  // roots[i] pairs to 2 with coroots[i]
  std::vector<GaloisElement> galois;
  std::vector<std::string> wild;
  std::vector<std::string> inertia;
  std::string frobenius;
  /// Basis of the abelianized cocharacters (given by lifts in Z^r) claimed
  /// to be permuted by the wild generators.
  std::optional<std::vector<IntVector>> induced_witness;
  bool quasi_split = true;

  bool is_torus() const { return coroots.empty(); }
  const IntMatrix& matrix(std::string_view label) const;
  std::vector<IntMatrix> wild_matrices() const;
  std::vector<IntMatrix> inertia_matrices() const;
  const IntMatrix& frobenius_matrix() const { return matrix(frobenius); }
  /// r x |coroots|.
  IntMatrix coroot_matrix() const;
};

/// Throws InvalidDatum naming the first violated condition.
void validate(const RootDatum& datum);

/// Inverse of a matrix with determinant +-1; InvalidArgument otherwise.
IntMatrix unimodular_inverse(const IntMatrix& m);

/// X / <coroots>. The Galois matrices descend unchanged, since the
/// presentation generators are the lattice basis.
AbelianGroup pi1(const RootDatum& datum);

/// Frobenius-fixed points of the inertia coinvariants of pi1.
Subgroup kottwitz_target(const RootDatum& datum);

struct DerivedAbelianized {
  AbelianGroup pi1;
  Subgroup pi1_der;            // (X ∩ Q<coroots>) / <coroots> inside pi1
  AbelianGroup cochar_ab;      // X / (X ∩ Q<coroots>), free
  Homomorphism to_ab;          // pi1 -> cochar_ab
  IntMatrix saturation;        // basis of X ∩ Q<coroots>
};

/// Also checks exactness of pi1_der -> pi1 -> cochar_ab -> 0;
/// InvariantViolation on failure.
DerivedAbelianized derived_and_abelianized(const RootDatum& datum);

/// True when `witness` (presentation vectors of a free group) maps to a
/// basis and every generator permutes it. InvalidWitness when the lattice
/// is not free or the witness has the wrong size.
bool is_induced(const AbelianGroup& lattice, std::span<const IntMatrix> gens,
                const std::vector<IntVector>& witness);

/// Built-in data, in a fixed order.
const std::vector<RootDatum>& catalog();
/// InvalidArgument for unknown names.
const RootDatum& catalog_entry(std::string_view name);

}  // namespace blockatlas
