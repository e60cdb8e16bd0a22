#include "blockatlas/abelian.hpp"

#include <algorithm>
#include <sstream>

#include "blockatlas/error.hpp"

namespace blockatlas {

namespace {

Integer abs_value(const Integer& x) { return x < 0 ? Integer(-x) : x; }

// Floor-style reduction into [0, m).
Integer reduce_mod(const Integer& x, const Integer& m) {
  Integer r = x % m;
  if (r < 0) r += m;
  return r;
}

void check_dims(bool ok, const char* what) {
  if (!ok) fail(ErrorKind::InvalidArgument, std::string("dimension mismatch in ") + what);
}

}  // namespace

// ---------------------------------------------------------------- IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows, std::size_t cols) {
  IntMatrix out(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    check_dims(rows[i].size() == cols, "from_rows");
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = rows[i][j];
  }
  return out;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
  return from_rows(rows, rows.empty() ? 0 : rows.front().size());
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& columns, std::size_t rows) {
  IntMatrix out(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    check_dims(columns[j].size() == rows, "from_columns");
    for (std::size_t i = 0; i < rows; ++i) out(i, j) = columns[j][i];
  }
  return out;
}

IntMatrix IntMatrix::diagonal(const std::vector<Integer>& entries) {
  IntMatrix out(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) out(i, i) = entries[i];
  return out;
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

Integer IntMatrix::determinant() const {
  check_dims(is_square(), "determinant");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix a = *this;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  check_dims(cols_ == other.rows_, "matrix product");
  IntMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
    }
  return out;
}

IntVector IntMatrix::operator*(const IntVector& v) const {
  check_dims(cols_ == v.size(), "matrix-vector product");
  IntVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& other) const {
  check_dims(rows_ == other.rows_ && cols_ == other.cols_, "matrix sum");
  IntMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += other.data_[i];
  return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& other) const {
  check_dims(rows_ == other.rows_ && cols_ == other.cols_, "matrix difference");
  IntMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= other.data_[i];
  return out;
}

IntMatrix IntMatrix::hcat(const IntMatrix& left, const IntMatrix& right) {
  check_dims(left.rows_ == right.rows_, "hcat");
  IntMatrix out(left.rows_, left.cols_ + right.cols_);
  for (std::size_t i = 0; i < left.rows_; ++i) {
    for (std::size_t j = 0; j < left.cols_; ++j) out(i, j) = left(i, j);
    for (std::size_t j = 0; j < right.cols_; ++j) out(i, left.cols_ + j) = right(i, j);
  }
  return out;
}

IntMatrix IntMatrix::vcat(const IntMatrix& top, const IntMatrix& bottom) {
  check_dims(top.cols_ == bottom.cols_, "vcat");
  IntMatrix out(top.rows_ + bottom.rows_, top.cols_);
  for (std::size_t j = 0; j < top.cols_; ++j) {
    for (std::size_t i = 0; i < top.rows_; ++i) out(i, j) = top(i, j);
    for (std::size_t i = 0; i < bottom.rows_; ++i) out(top.rows_ + i, j) = bottom(i, j);
  }
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) out << ',';
    out << '[';
    for (std::size_t j = 0; j < cols_; ++j) out << (j ? "," : "") << (*this)(i, j);
    out << ']';
  }
  out << ']';
  return out.str();
}

// ------------------------------------------------------- Smith normal form

namespace {

class SmithReducer {
 public:
  explicit SmithReducer(const IntMatrix& m)
      : s_(m),
        u_(IntMatrix::identity(m.rows())),
        u_inv_(IntMatrix::identity(m.rows())),
        v_(IntMatrix::identity(m.cols())) {}

  SmithForm run() {
    const std::size_t limit = std::min(s_.rows(), s_.cols());
    std::size_t t = 0;
    for (; t < limit; ++t) {
      if (!place_smallest(t)) break;
      settle(t);
      if (s_(t, t) < 0) negate_row(t);
    }
    return SmithForm{std::move(u_), std::move(u_inv_), std::move(s_), std::move(v_), t};
  }

 private:
  // Moves a non-zero entry of least absolute value in the trailing block to
  // (t, t). Returns false when the block is zero.
  bool place_smallest(std::size_t t) {
    std::size_t bi = 0, bj = 0;
    bool found = false;
    Integer best;
    for (std::size_t i = t; i < s_.rows(); ++i)
      for (std::size_t j = t; j < s_.cols(); ++j) {
        if (s_(i, j) == 0) continue;
        Integer a = abs_value(s_(i, j));
        if (!found || a < best) {
          best = a;
          bi = i;
          bj = j;
          found = true;
        }
      }
    if (!found) return false;
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  // Clears row and column t and enforces divisibility of the trailing block
  // by the pivot. Each pass brings the smallest entry of the column (or row)
  // to the pivot and reduces the others by it, rounding to nearest, which
  // keeps intermediate growth in check.
  void settle(std::size_t t) {
    for (;;) {
      while (clear_column(t)) {
      }
      if (!clear_row(t)) {
        bool fixed = false;
        for (std::size_t i = t + 1; i < s_.rows() && !fixed; ++i)
          for (std::size_t j = t + 1; j < s_.cols(); ++j) {
            if (s_(i, j) % s_(t, t) != 0) {
              add_row(t, i, 1);
              fixed = true;
              break;
            }
          }
        if (!fixed) return;
      }
    }
  }

  // One reduction pass on column t; true while entries below the pivot remain.
  bool clear_column(std::size_t t) {
    std::size_t best = t;
    for (std::size_t i = t + 1; i < s_.rows(); ++i)
      if (s_(i, t) != 0 && (s_(best, t) == 0 || abs_value(s_(i, t)) < abs_value(s_(best, t)))) best = i;
    swap_rows(t, best);
    bool left = false;
    for (std::size_t i = t + 1; i < s_.rows(); ++i) {
      if (s_(i, t) == 0) continue;
      add_row(i, t, Integer(-nearest_quotient(s_(i, t), s_(t, t))));
      left = left || s_(i, t) != 0;
    }
    return left;
  }

  // Same for row t; true when the column became dirty or entries remain.
  bool clear_row(std::size_t t) {
    bool any = false;
    for (;;) {
      std::size_t best = t;
      for (std::size_t j = t + 1; j < s_.cols(); ++j)
        if (s_(t, j) != 0 && (s_(t, best) == 0 || abs_value(s_(t, j)) < abs_value(s_(t, best)))) best = j;
      if (best != t) {
        swap_cols(t, best);
        any = true;
      }
      bool left = false;
      for (std::size_t j = t + 1; j < s_.cols(); ++j) {
        if (s_(t, j) == 0) continue;
        add_col(j, t, Integer(-nearest_quotient(s_(t, j), s_(t, t))));
        left = left || s_(t, j) != 0;
        any = true;
      }
      if (!left) break;
    }
    if (!any) return false;
    for (std::size_t i = t + 1; i < s_.rows(); ++i)
      if (s_(i, t) != 0) return true;
    return false;
  }

  static Integer nearest_quotient(const Integer& a, const Integer& b) {
    Integer q = a / b;
    const Integer r = a - q * b;
    if (2 * abs_value(r) > abs_value(b)) q += ((r < 0) == (b < 0)) ? 1 : -1;
    return q;
  }

  // row_i += c * row_k
  void add_row(std::size_t i, std::size_t k, const Integer& c) {
    for (std::size_t j = 0; j < s_.cols(); ++j) s_(i, j) += c * s_(k, j);
    for (std::size_t j = 0; j < u_.cols(); ++j) u_(i, j) += c * u_(k, j);
    for (std::size_t r = 0; r < u_inv_.rows(); ++r) u_inv_(r, k) -= c * u_inv_(r, i);
  }

  // col_j += c * col_k
  void add_col(std::size_t j, std::size_t k, const Integer& c) {
    for (std::size_t i = 0; i < s_.rows(); ++i) s_(i, j) += c * s_(i, k);
    for (std::size_t i = 0; i < v_.rows(); ++i) v_(i, j) += c * v_(i, k);
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < s_.cols(); ++j) std::swap(s_(a, j), s_(b, j));
    for (std::size_t j = 0; j < u_.cols(); ++j) std::swap(u_(a, j), u_(b, j));
    for (std::size_t r = 0; r < u_inv_.rows(); ++r) std::swap(u_inv_(r, a), u_inv_(r, b));
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < s_.rows(); ++i) std::swap(s_(i, a), s_(i, b));
    for (std::size_t i = 0; i < v_.rows(); ++i) std::swap(v_(i, a), v_(i, b));
  }

  void negate_row(std::size_t i) {
    for (std::size_t j = 0; j < s_.cols(); ++j) s_(i, j) = -s_(i, j);
    for (std::size_t j = 0; j < u_.cols(); ++j) u_(i, j) = -u_(i, j);
    for (std::size_t r = 0; r < u_inv_.rows(); ++r) u_inv_(r, i) = -u_inv_(r, i);
  }

  IntMatrix s_, u_, u_inv_, v_;
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) { return SmithReducer(m).run(); }

IntMatrix column_span_basis(const IntMatrix& m) {
  const auto snf = smith_normal_form(m);
  IntMatrix out(m.rows(), snf.rank);
  for (std::size_t j = 0; j < snf.rank; ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) out(i, j) = snf.s(j, j) * snf.u_inv(i, j);
  return out;
}

IntMatrix integer_kernel(const IntMatrix& m) {
  const auto snf = smith_normal_form(m);
  IntMatrix out(m.cols(), m.cols() - snf.rank);
  for (std::size_t j = snf.rank; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.cols(); ++i) out(i, j - snf.rank) = snf.v(i, j);
  return out;
}

std::optional<IntVector> solve_integer(const IntMatrix& m, const IntVector& y) {
  check_dims(y.size() == m.rows(), "solve_integer");
  const auto snf = smith_normal_form(m);
  const IntVector w = snf.u * y;
  IntVector z(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i < snf.rank) {
      if (w[i] % snf.s(i, i) != 0) return std::nullopt;
      z[i] = w[i] / snf.s(i, i);
    } else if (w[i] != 0) {
      return std::nullopt;
    }
  }
  return snf.v * z;
}

// ------------------------------------------------------------ AbelianGroup

AbelianGroup::AbelianGroup(IntMatrix relations) : relations_(std::move(relations)) {
  const auto snf = smith_normal_form(relations_);
  u_ = snf.u;
  u_inv_ = snf.u_inv;
  diag_.assign(relations_.rows(), 0);
  for (std::size_t i = 0; i < snf.rank; ++i) diag_[i] = snf.s(i, i);
  for (std::size_t i = 0; i < diag_.size(); ++i) {
    if (diag_[i] == 0)
      free_idx_.push_back(i);
    else if (diag_[i] != 1)
      torsion_idx_.push_back(i);
  }
}

AbelianGroup AbelianGroup::free(std::size_t rank) { return AbelianGroup(IntMatrix(rank, 0)); }

AbelianGroup AbelianGroup::cyclic_sum(const std::vector<Integer>& orders) {
  return AbelianGroup(IntMatrix::diagonal(orders));
}

std::vector<Integer> AbelianGroup::invariant_factors() const {
  std::vector<Integer> out;
  for (std::size_t i : torsion_idx_) out.push_back(diag_[i]);
  return out;
}

std::optional<Integer> AbelianGroup::order() const {
  if (!is_finite()) return std::nullopt;
  Integer out = 1;
  for (std::size_t i : torsion_idx_) out *= diag_[i];
  return out;
}

bool AbelianGroup::is_p_group(std::uint64_t p) const {
  auto n = order();
  if (!n) return false;
  Integer m = *n;
  while (m % p == 0) m /= p;
  return m == 1;
}

bool AbelianGroup::is_elementary_abelian() const {
  if (!is_finite()) return false;
  const auto factors = invariant_factors();
  if (factors.empty()) return true;
  const Integer p = factors.front();
  for (const auto& f : factors)
    if (f != p) return false;
  // p must be prime for Z/p x ... x Z/p to be elementary abelian.
  for (Integer k = 2; k * k <= p; ++k)
    if (p % k == 0) return false;
  return true;
}

IntVector AbelianGroup::coordinates(const IntVector& x) const {
  check_dims(x.size() == num_generators(), "coordinates");
  const IntVector y = u_ * x;
  IntVector out;
  out.reserve(num_canonical_generators());
  for (std::size_t i : torsion_idx_) out.push_back(reduce_mod(y[i], diag_[i]));
  for (std::size_t i : free_idx_) out.push_back(y[i]);
  return out;
}

bool AbelianGroup::is_zero(const IntVector& x) const {
  check_dims(x.size() == num_generators(), "is_zero");
  const IntVector y = u_ * x;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (diag_[i] == 0 ? y[i] != 0 : y[i] % diag_[i] != 0) return false;
  }
  return true;
}

bool AbelianGroup::equal(const IntVector& x, const IntVector& y) const {
  check_dims(x.size() == y.size(), "equal");
  IntVector diff(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) diff[i] = x[i] - y[i];
  return is_zero(diff);
}

IntVector AbelianGroup::canonical_generator(std::size_t i) const {
  const std::size_t idx =
      i < torsion_idx_.size() ? torsion_idx_[i] : free_idx_.at(i - torsion_idx_.size());
  return u_inv_.column(idx);
}

bool AbelianGroup::descends(const IntMatrix& f) const {
  if (f.rows() != num_generators() || f.cols() != num_generators()) return false;
  for (std::size_t j = 0; j < relations_.cols(); ++j)
    if (!is_zero(f * relations_.column(j))) return false;
  return true;
}

std::string AbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::string out;
  for (std::size_t i : torsion_idx_) {
    if (!out.empty()) out += " x ";
    out += "Z/" + diag_[i].str();
  }
  if (!free_idx_.empty()) {
    if (!out.empty()) out += " x ";
    out += "Z";
    if (free_idx_.size() > 1) out += "^" + std::to_string(free_idx_.size());
  }
  return out;
}

bool same_structure(const AbelianGroup& a, const AbelianGroup& b) {
  return a.free_rank() == b.free_rank() && a.invariant_factors() == b.invariant_factors();
}

// ------------------------------------------------------------ Homomorphism

Homomorphism::Homomorphism(AbelianGroup source, AbelianGroup target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != target_.num_generators() || matrix_.cols() != source_.num_generators())
    fail(ErrorKind::InvalidArgument, "homomorphism matrix has the wrong shape");
  for (std::size_t j = 0; j < source_.relations().cols(); ++j) {
    if (!target_.is_zero(matrix_ * source_.relations().column(j)))
      fail(ErrorKind::IncompatibleAction, "matrix does not respect the relations");
  }
}

bool Homomorphism::is_zero() const {
  for (std::size_t j = 0; j < matrix_.cols(); ++j)
    if (!target_.is_zero(matrix_.column(j))) return false;
  return true;
}

bool Homomorphism::is_injective() const { return kernel(*this).group.is_trivial(); }

bool Homomorphism::is_surjective() const { return cokernel(*this).group.is_trivial(); }

Homomorphism Homomorphism::after(const Homomorphism& first) const {
  if (first.target_.num_generators() != source_.num_generators())
    fail(ErrorKind::InvalidArgument, "cannot compose homomorphisms with mismatched presentations");
  return Homomorphism(first.source_, target_, matrix_ * first.matrix_);
}

// ---------------------------------------------------- derived constructions

AbelianGroup cokernel(const IntMatrix& m) { return AbelianGroup(m); }

Quotient cokernel(const Homomorphism& f) {
  AbelianGroup q(IntMatrix::hcat(f.target().relations(), f.matrix()));
  const std::size_t n = f.target().num_generators();
  return Quotient{q, Homomorphism(f.target(), q, IntMatrix::identity(n))};
}

namespace {

// The subgroup K / L(relations) for a lattice K (given by generators) that
// contains the relation lattice of `parent`.
Subgroup subgroup_from_lattice(const AbelianGroup& parent, const IntMatrix& generators) {
  const IntMatrix basis = column_span_basis(generators);
  const IntMatrix& rel = parent.relations();
  IntMatrix coords(basis.cols(), rel.cols());
  for (std::size_t j = 0; j < rel.cols(); ++j) {
    auto c = solve_integer(basis, rel.column(j));
    if (!c) fail(ErrorKind::InvariantViolation, "subgroup lattice misses a relation");
    for (std::size_t i = 0; i < basis.cols(); ++i) coords(i, j) = (*c)[i];
  }
  AbelianGroup sub(std::move(coords));
  return Subgroup{sub, Homomorphism(sub, parent, basis)};
}

}  // namespace

Subgroup kernel(const Homomorphism& f) {
  const std::size_t n = f.source().num_generators();
  const IntMatrix big = IntMatrix::hcat(f.matrix(), f.target().relations());
  const IntMatrix ker = integer_kernel(big);
  IntMatrix gens(n, ker.cols());
  for (std::size_t j = 0; j < ker.cols(); ++j)
    for (std::size_t i = 0; i < n; ++i) gens(i, j) = ker(i, j);
  return subgroup_from_lattice(f.source(), gens);
}

Subgroup image(const Homomorphism& f) {
  const IntMatrix gens = IntMatrix::hcat(f.matrix(), f.target().relations());
  return subgroup_from_lattice(f.target(), gens);
}

Subgroup whole(const AbelianGroup& a) {
  return Subgroup{a, Homomorphism(a, a, IntMatrix::identity(a.num_generators()))};
}

Quotient coinvariants(const AbelianGroup& a, std::span<const IntMatrix> gens) {
  IntMatrix rel = a.relations();
  const std::size_t n = a.num_generators();
  for (const auto& g : gens) {
    if (!a.descends(g)) fail(ErrorKind::IncompatibleAction, "action does not descend to the group");
    rel = IntMatrix::hcat(rel, g - IntMatrix::identity(n));
  }
  AbelianGroup q(std::move(rel));
  return Quotient{q, Homomorphism(a, q, IntMatrix::identity(n))};
}

Subgroup torsion(const AbelianGroup& a) {
  std::vector<IntVector> gens;
  const auto factors = a.invariant_factors();
  for (std::size_t i = 0; i < factors.size(); ++i) gens.push_back(a.canonical_generator(i));
  AbelianGroup sub = AbelianGroup::cyclic_sum(factors);
  return Subgroup{sub, Homomorphism(sub, a, IntMatrix::from_columns(gens, a.num_generators()))};
}

Subgroup p_torsion(const AbelianGroup& a, std::uint64_t p) {
  if (p < 2) fail(ErrorKind::InvalidArgument, "p must be a prime");
  std::vector<IntVector> gens;
  std::vector<Integer> orders;
  const auto factors = a.invariant_factors();
  for (std::size_t i = 0; i < factors.size(); ++i) {
    Integer part = 1;
    Integer rest = factors[i];
    while (rest % p == 0) {
      rest /= p;
      part *= p;
    }
    if (part == 1) continue;
    IntVector g = a.canonical_generator(i);
    for (auto& x : g) x *= rest;
    gens.push_back(std::move(g));
    orders.push_back(part);
  }
  AbelianGroup sub = AbelianGroup::cyclic_sum(orders);
  return Subgroup{sub, Homomorphism(sub, a, IntMatrix::from_columns(gens, a.num_generators()))};
}

Subgroup fixed_points(const AbelianGroup& a, std::span<const IntMatrix> fs) {
  if (fs.empty()) return whole(a);
  const std::size_t n = a.num_generators();
  IntMatrix stacked(0, n);
  IntMatrix block_rel(0, 0);
  for (const auto& f : fs) {
    if (!a.descends(f)) fail(ErrorKind::IncompatibleAction, "action does not descend to the group");
    stacked = IntMatrix::vcat(stacked, f - IntMatrix::identity(n));
    // block-diagonal copy of the relations
    IntMatrix grown(block_rel.rows() + n, block_rel.cols() + a.relations().cols());
    for (std::size_t i = 0; i < block_rel.rows(); ++i)
      for (std::size_t j = 0; j < block_rel.cols(); ++j) grown(i, j) = block_rel(i, j);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < a.relations().cols(); ++j)
        grown(block_rel.rows() + i, block_rel.cols() + j) = a.relations()(i, j);
    block_rel = std::move(grown);
  }
  return kernel(Homomorphism(a, AbelianGroup(std::move(block_rel)), stacked));
}

Subgroup fixed_points(const AbelianGroup& a, const IntMatrix& f) {
  return fixed_points(a, std::span<const IntMatrix>(&f, 1));
}

AbelianGroup h1_cyclic(const AbelianGroup& a, const IntMatrix& f) {
  if (!a.is_finite()) fail(ErrorKind::NotFinite, "H^1 of a cyclic group needs a finite module");
  if (!a.descends(f)) fail(ErrorKind::IncompatibleAction, "action does not descend to the group");
  if (!Homomorphism(a, a, f).is_injective())
    fail(ErrorKind::NotAutomorphism, "the generator does not act by an automorphism");
  return coinvariants(a, std::span<const IntMatrix>(&f, 1)).group;
}

std::optional<IntVector> lift(const Subgroup& sub, const IntVector& y) {
  const auto& parent = sub.inclusion.target();
  const IntMatrix big = IntMatrix::hcat(sub.inclusion.matrix(), parent.relations());
  auto x = solve_integer(big, y);
  if (!x) return std::nullopt;
  x->resize(sub.group.num_generators());
  return x;
}

IntMatrix restrict_endo(const Subgroup& sub, const IntMatrix& f) {
  const std::size_t m = sub.group.num_generators();
  IntMatrix out(m, m);
  for (std::size_t j = 0; j < m; ++j) {
    auto x = lift(sub, f * sub.inclusion.matrix().column(j));
    if (!x) fail(ErrorKind::IncompatibleAction, "subgroup is not stable under the endomorphism");
    for (std::size_t i = 0; i < m; ++i) out(i, j) = (*x)[i];
  }
  return out;
}

Homomorphism corestrict(const Homomorphism& f, const Subgroup& sub) {
  const std::size_t n = f.source().num_generators();
  const std::size_t m = sub.group.num_generators();
  IntMatrix out(m, n);
  for (std::size_t j = 0; j < n; ++j) {
    auto x = lift(sub, f.matrix().column(j));
    if (!x) fail(ErrorKind::IncompatibleAction, "image does not lie in the subgroup");
    for (std::size_t i = 0; i < m; ++i) out(i, j) = (*x)[i];
  }
  return Homomorphism(f.source(), sub.group, std::move(out));
}

Homomorphism restrict_hom(const Homomorphism& f, const Subgroup& sub) {
  return f.after(sub.inclusion);
}

}  // namespace blockatlas
