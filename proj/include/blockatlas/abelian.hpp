#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace blockatlas {

using Integer = boost::multiprecision::cpp_int;
using IntVector = std::vector<Integer>;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows, std::size_t cols);
  static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows);
  static IntMatrix from_columns(const std::vector<IntVector>& columns, std::size_t rows);
  static IntMatrix diagonal(const std::vector<Integer>& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector column(std::size_t j) const;
  IntMatrix transpose() const;
  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }
  /// Fraction-free (Bareiss) elimination; square matrices only.
  Integer determinant() const;

  IntMatrix operator*(const IntMatrix& other) const;
  IntVector operator*(const IntVector& v) const;
  IntMatrix operator+(const IntMatrix& other) const;
  IntMatrix operator-(const IntMatrix& other) const;
  bool operator==(const IntMatrix& other) const = default;

  /// Side-by-side / stacked concatenation.
  static IntMatrix hcat(const IntMatrix& left, const IntMatrix& right);
  static IntMatrix vcat(const IntMatrix& top, const IntMatrix& bottom);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Integer> data_;
};

/// U * M * V = S with U, V unimodular and S diagonal, its non-zero
/// diagonal entries positive and forming a divisibility chain. U_inv is
/// the inverse of U, maintained alongside.
struct SmithForm {
  IntMatrix u, u_inv, s, v;
  std::size_t rank = 0;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Basis of the lattice spanned by the columns.
IntMatrix column_span_basis(const IntMatrix& m);
/// Basis of the integer kernel {x : m x = 0}, as columns.
IntMatrix integer_kernel(const IntMatrix& m);
/// Some integer solution of m x = y, if one exists.
std::optional<IntVector> solve_integer(const IntMatrix& m, const IntVector& y);

/// Z^n modulo the column span of a relation matrix, with its canonical
/// decomposition Z/d_1 + ... + Z/d_k + Z^r (d_1 | ... | d_k, d_i >= 2).
class AbelianGroup {
 public:
  AbelianGroup() : AbelianGroup(IntMatrix(0, 0)) {}
  explicit AbelianGroup(IntMatrix relations);

  static AbelianGroup free(std::size_t rank);
  /// Z/n_1 + ... ; an order of 0 gives a free summand.
  static AbelianGroup cyclic_sum(const std::vector<Integer>& orders);

  std::size_t num_generators() const { return relations_.rows(); }
  const IntMatrix& relations() const { return relations_; }

  std::size_t free_rank() const { return free_idx_.size(); }
  std::vector<Integer> invariant_factors() const;
  bool is_finite() const { return free_idx_.empty(); }
  bool is_trivial() const { return free_idx_.empty() && torsion_idx_.empty(); }
  /// Nothing for infinite groups.
  std::optional<Integer> order() const;
  bool is_p_group(std::uint64_t p) const;
  bool is_elementary_abelian() const;

  /// Canonical coordinates of a presentation vector: torsion coordinates
  /// reduced into [0, d_i), then free coordinates.
  IntVector coordinates(const IntVector& x) const;
  bool is_zero(const IntVector& x) const;
  bool equal(const IntVector& x, const IntVector& y) const;
  /// Presentation vector of the i-th canonical generator.
  IntVector canonical_generator(std::size_t i) const;
  std::size_t num_canonical_generators() const { return torsion_idx_.size() + free_idx_.size(); }

  /// True when the matrix (acting on presentation generators) maps the
  /// relation lattice into itself.
  bool descends(const IntMatrix& f) const;

  /// "0", "Z/2 x Z/12", "Z/2 x Z^3".
  std::string to_string() const;

 private:
  IntMatrix relations_;
  IntMatrix u_, u_inv_;
  std::vector<Integer> diag_;  // per presentation generator; 0 = free
  std::vector<std::size_t> torsion_idx_, free_idx_;
};

bool same_structure(const AbelianGroup& a, const AbelianGroup& b);

/// A homomorphism given on presentation generators; the constructor
/// rejects matrices that do not respect the relations (IncompatibleAction).
class Homomorphism {
 public:
  Homomorphism(AbelianGroup source, AbelianGroup target, IntMatrix matrix);

  const AbelianGroup& source() const { return source_; }
  const AbelianGroup& target() const { return target_; }
  const IntMatrix& matrix() const { return matrix_; }

  IntVector apply(const IntVector& x) const { return matrix_ * x; }
  bool is_zero() const;
  bool is_injective() const;
  bool is_surjective() const;
  bool is_isomorphism() const { return is_injective() && is_surjective(); }

  /// this ∘ first.
  Homomorphism after(const Homomorphism& first) const;

 private:
  AbelianGroup source_, target_;
  IntMatrix matrix_;
};

struct Subgroup {
  AbelianGroup group;
  Homomorphism inclusion;
};

struct Quotient {
  AbelianGroup group;
  Homomorphism projection;
};

AbelianGroup cokernel(const IntMatrix& m);
Quotient cokernel(const Homomorphism& f);
Subgroup kernel(const Homomorphism& f);
Subgroup image(const Homomorphism& f);
Subgroup whole(const AbelianGroup& a);

/// A / <a - g(a)> over the listed endomorphisms; the quotient keeps the
/// presentation generators, so endomorphisms descend with the same matrix.
Quotient coinvariants(const AbelianGroup& a, std::span<const IntMatrix> gens);
Subgroup torsion(const AbelianGroup& a);
Subgroup p_torsion(const AbelianGroup& a, std::uint64_t p);
/// Common fixed points of the listed endomorphisms.
Subgroup fixed_points(const AbelianGroup& a, std::span<const IntMatrix> fs);
Subgroup fixed_points(const AbelianGroup& a, const IntMatrix& f);

/// Coinvariants of an automorphism of a finite group, i.e. H^1 of the
/// procyclic group it generates.
AbelianGroup h1_cyclic(const AbelianGroup& a, const IntMatrix& f);

/// Preimage of a parent element in subgroup coordinates, if it lies there.
std::optional<IntVector> lift(const Subgroup& sub, const IntVector& y);
/// Matrix of f restricted to a stable subgroup (IncompatibleAction otherwise).
IntMatrix restrict_endo(const Subgroup& sub, const IntMatrix& f);
/// Factor f : A -> B through a subgroup of B containing its image.
Homomorphism corestrict(const Homomorphism& f, const Subgroup& sub);
/// Restrict f : A -> B to a subgroup of A.
Homomorphism restrict_hom(const Homomorphism& f, const Subgroup& sub);

}  // namespace blockatlas
