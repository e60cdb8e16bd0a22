#include "blockatlas/rootdata.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "blockatlas/error.hpp"

namespace blockatlas {

namespace {

constexpr std::size_t kMaxClosure = 4096;

Integer dot(const IntVector& a, const IntVector& b) {
  Integer out = 0;
  for (std::size_t i = 0; i < a.size(); ++i) out += a[i] * b[i];
  return out;
}

std::string vec_string(const IntVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].str();
  return out + ")";
}

[[noreturn]] void invalid(const RootDatum& datum, const std::string& what) {
  fail(ErrorKind::InvalidDatum, (datum.name.empty() ? "datum" : datum.name) + ": " + what);
}

std::optional<std::size_t> index_of(const std::vector<IntVector>& list, const IntVector& v) {
  auto it = std::find(list.begin(), list.end(), v);
  if (it == list.end()) return std::nullopt;
  return static_cast<std::size_t>(it - list.begin());
}

/// The finite matrix group generated by `gens`; nothing if it exceeds the cap.
std::optional<std::set<std::string>> closure(const std::vector<IntMatrix>& gens, std::size_t r) {
  std::set<std::string> seen;
  std::deque<IntMatrix> queue;
  const IntMatrix one = IntMatrix::identity(r);
  seen.insert(one.to_string());
  queue.push_back(one);
  while (!queue.empty()) {
    IntMatrix g = std::move(queue.front());
    queue.pop_front();
    for (const auto& h : gens) {
      IntMatrix gh = g * h;
      if (seen.insert(gh.to_string()).second) {
        if (seen.size() > kMaxClosure) return std::nullopt;
        queue.push_back(std::move(gh));
      }
    }
  }
  return seen;
}

void check_normalized(const RootDatum& datum, const std::vector<IntMatrix>& subgroup_gens,
                      const std::vector<IntMatrix>& by, const char* what) {
  const auto group = closure(subgroup_gens, datum.rank);
  if (!group) invalid(datum, std::string("the ") + what + " image is not a finite group");
  for (const auto& f : by) {
    const IntMatrix f_inv = unimodular_inverse(f);
    for (const auto& h : subgroup_gens)
      if (!group->count((f * h * f_inv).to_string()))
        invalid(datum, std::string("the ") + what + " image is not normalized");
  }
}

}  // namespace

const IntMatrix& RootDatum::matrix(std::string_view label) const {
  for (const auto& g : galois)
    if (g.label == label) return g.matrix;
  fail(ErrorKind::InvalidDatum, name + ": unknown Galois label '" + std::string(label) + "'");
}

std::vector<IntMatrix> RootDatum::wild_matrices() const {
  std::vector<IntMatrix> out;
  for (const auto& l : wild) out.push_back(matrix(l));
  return out;
}

std::vector<IntMatrix> RootDatum::inertia_matrices() const {
  std::vector<IntMatrix> out;
  for (const auto& l : inertia) out.push_back(matrix(l));
  return out;
}

IntMatrix RootDatum::coroot_matrix() const {
  return IntMatrix::from_columns(coroots, static_cast<std::size_t>(rank));
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  ensure(m.is_square(), ErrorKind::InvalidArgument, "only square matrices can be inverted");
  const auto snf = smith_normal_form(m);
  for (std::size_t i = 0; i < m.rows(); ++i)
    ensure(i < snf.rank && snf.s(i, i) == 1, ErrorKind::InvalidArgument,
           "matrix is not unimodular");
  return snf.v * snf.u;
}

void validate(const RootDatum& datum) {
  const std::size_t r = datum.rank;
  if (datum.rank < 0) invalid(datum, "negative rank");
  if (datum.coroots.size() != datum.roots.size())
    invalid(datum, "roots and coroots differ in number");
  for (std::size_t i = 0; i < datum.coroots.size(); ++i) {
    if (datum.coroots[i].size() != r || datum.roots[i].size() != r)
      invalid(datum, "root or coroot of the wrong dimension");
    if (dot(datum.roots[i], datum.coroots[i]) != 2)
      invalid(datum, "root " + vec_string(datum.roots[i]) + " does not pair to 2 with its coroot");
  }
  std::set<std::string> labels;
  for (const auto& g : datum.galois) {
    if (!labels.insert(g.label).second) invalid(datum, "duplicate Galois label " + g.label);
    if (g.matrix.rows() != r || g.matrix.cols() != r)
      invalid(datum, "Galois matrix " + g.label + " has the wrong size");
    const Integer det = g.matrix.determinant();
    if (det != 1 && det != -1) invalid(datum, "Galois matrix " + g.label + " is not invertible");
    const IntMatrix dual = unimodular_inverse(g.matrix).transpose();
    for (std::size_t i = 0; i < datum.coroots.size(); ++i) {
      auto j = index_of(datum.coroots, g.matrix * datum.coroots[i]);
      if (!j) invalid(datum, g.label + " does not permute the coroots");
      if (dual * datum.roots[i] != datum.roots[*j])
        invalid(datum, g.label + " does not permute the roots compatibly");
    }
  }
  for (const auto& l : datum.wild) {
    if (!labels.count(l)) invalid(datum, "unknown wild label " + l);
    if (std::find(datum.inertia.begin(), datum.inertia.end(), l) == datum.inertia.end())
      invalid(datum, "wild generator " + l + " is not listed under inertia");
  }
  for (const auto& l : datum.inertia)
    if (!labels.count(l)) invalid(datum, "unknown inertia label " + l);
  if (!labels.count(datum.frobenius)) invalid(datum, "unknown Frobenius label " + datum.frobenius);
  if (datum.induced_witness) {
    for (const auto& w : *datum.induced_witness)
      if (w.size() != r) invalid(datum, "witness vector of the wrong dimension");
  }
  const auto inertia = datum.inertia_matrices();
  const auto wild = datum.wild_matrices();
  std::vector<IntMatrix> frob{datum.frobenius_matrix()};
  check_normalized(datum, inertia, frob, "inertia");
  std::vector<IntMatrix> outer = inertia;
  outer.push_back(frob.front());
  check_normalized(datum, wild, outer, "wild inertia");
}

AbelianGroup pi1(const RootDatum& datum) {
  AbelianGroup out(datum.coroot_matrix());
  for (const auto& g : datum.galois)
    if (!out.descends(g.matrix))
      fail(ErrorKind::InvalidDatum, datum.name + ": " + g.label + " does not preserve the coroots");
  return out;
}

Subgroup kottwitz_target(const RootDatum& datum) {
  const auto inertia = datum.inertia_matrices();
  const auto coinv = coinvariants(pi1(datum), inertia);
  return fixed_points(coinv.group, datum.frobenius_matrix());
}

DerivedAbelianized derived_and_abelianized(const RootDatum& datum) {
  const std::size_t r = datum.rank;
  AbelianGroup group = pi1(datum);
  const auto snf = smith_normal_form(datum.coroot_matrix());
  IntMatrix saturation(r, snf.rank);
  for (std::size_t j = 0; j < snf.rank; ++j)
    for (std::size_t i = 0; i < r; ++i) saturation(i, j) = snf.u_inv(i, j);
  AbelianGroup ab(saturation);
  Subgroup der = torsion(group);
  Homomorphism to_ab(group, ab, IntMatrix::identity(r));

  const auto composite = to_ab.after(der.inclusion);
  ensure(composite.is_zero(), ErrorKind::InvariantViolation,
         datum.name + ": pi1_der does not map to zero in the abelianization");
  ensure(to_ab.is_surjective(), ErrorKind::InvariantViolation,
         datum.name + ": pi1 does not surject onto the abelianization");
  const auto ker = kernel(to_ab);
  ensure(ker.group.order() == der.group.order(), ErrorKind::InvariantViolation,
         datum.name + ": pi1_der is not the kernel of the abelianization");
  ensure(ab.invariant_factors().empty(), ErrorKind::InvariantViolation,
         datum.name + ": the abelianized cocharacters have torsion");
  return DerivedAbelianized{std::move(group), std::move(der), std::move(ab), std::move(to_ab),
                            std::move(saturation)};
}

bool is_induced(const AbelianGroup& lattice, std::span<const IntMatrix> gens,
                const std::vector<IntVector>& witness) {
  if (!lattice.invariant_factors().empty())
    fail(ErrorKind::InvalidWitness, "only a free lattice can carry a permuted basis");
  const std::size_t n = lattice.free_rank();
  if (witness.size() != n)
    fail(ErrorKind::InvalidWitness, "witness has " + std::to_string(witness.size()) +
                                        " vectors for a lattice of rank " + std::to_string(n));
  std::vector<IntVector> coords;
  for (const auto& w : witness) {
    if (w.size() != lattice.num_generators())
      fail(ErrorKind::InvalidWitness, "witness vector of the wrong dimension");
    coords.push_back(lattice.coordinates(w));
  }
  const Integer det = IntMatrix::from_columns(coords, n).determinant();
  if (det != 1 && det != -1) return false;
  for (const auto& g : gens) {
    if (!lattice.descends(g)) fail(ErrorKind::IncompatibleAction, "action does not descend");
    for (const auto& w : witness)
      if (!index_of(coords, lattice.coordinates(g * w))) return false;
  }
  return true;
}

// ------------------------------------------------------------------ catalog

namespace {

IntVector v(std::initializer_list<long long> xs) {
  IntVector out;
  for (long long x : xs) out.emplace_back(x);
  return out;
}

IntMatrix m(std::vector<std::vector<long long>> rows) { return IntMatrix::from_rows(rows); }

std::vector<IntVector> with_negatives(const std::vector<IntVector>& xs) {
  std::vector<IntVector> out;
  for (const auto& x : xs) {
    out.push_back(x);
    IntVector neg = x;
    for (auto& e : neg) e = -e;
    out.push_back(std::move(neg));
  }
  return out;
}

RootDatum torus(std::string name, int rank, std::vector<GaloisElement> galois,
                std::vector<std::string> wild, std::vector<std::string> inertia) {
  RootDatum d;
  d.name = std::move(name);
  d.rank = rank;
  d.galois = std::move(galois);
  d.wild = std::move(wild);
  d.inertia = std::move(inertia);
  d.frobenius = "frob";
  return d;
}

RootDatum split(std::string name, int rank, std::vector<IntVector> coroots,
                std::vector<IntVector> roots) {
  RootDatum d = torus(std::move(name), rank, {{"frob", IntMatrix::identity(rank)}}, {}, {});
  d.coroots = with_negatives(coroots);
  d.roots = with_negatives(roots);
  return d;
}

std::vector<IntVector> standard_basis(int r) {
  std::vector<IntVector> out;
  for (int i = 0; i < r; ++i) {
    IntVector e(r);
    e[i] = 1;
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<RootDatum> build_catalog() {
  std::vector<RootDatum> out;
  const IntMatrix swap = m({{0, 1}, {1, 0}});
  const IntMatrix id2 = IntMatrix::identity(2);

  out.push_back(torus("split_torus", 2, {{"frob", id2}}, {}, {}));
  out.push_back(torus("unramified_induced_torus", 2, {{"frob", swap}}, {}, {}));
  out.push_back(torus("tame_induced_torus", 2, {{"sigma", swap}, {"frob", id2}}, {}, {"sigma"}));
  out.push_back(
      torus("norm_one_ramified", 1, {{"tau", m({{-1}})}, {"frob", m({{1}})}}, {"tau"}, {"tau"}));
  out.push_back(torus("wild_induced_torus", 2, {{"tau", swap}, {"frob", id2}}, {"tau"}, {"tau"}));
  out.push_back(torus("wild_sign_torus_rank2", 2, {{"tau", m({{-1, 0}, {0, -1}})}, {"frob", id2}},
                      {"tau"}, {"tau"}));
  for (auto& d : out)
    if (d.name != "norm_one_ramified" && d.name != "wild_sign_torus_rank2")
      d.induced_witness = standard_basis(d.rank);

  out.push_back(split("sl2_split", 1, {v({1})}, {v({2})}));
  out.push_back(split("pgl2_split", 1, {v({2})}, {v({1})}));
  out.push_back(split("gl2_split", 2, {v({1, -1})}, {v({1, -1})}));
  out.push_back(split("sl3_split", 2, {v({1, 0}), v({0, 1}), v({1, 1})},
                      {v({2, -1}), v({-1, 2}), v({1, 1})}));
  out.push_back(split("pgl3_split", 2, {v({2, -1}), v({-1, 2}), v({1, 1})},
                      {v({1, 0}), v({0, 1}), v({1, 1})}));
  out.push_back(split("gl3_split", 3, {v({1, -1, 0}), v({0, 1, -1}), v({1, 0, -1})},
                      {v({1, -1, 0}), v({0, 1, -1}), v({1, 0, -1})}));
  out.push_back(split("sp4_split", 2, {v({1, -1}), v({1, 1}), v({1, 0}), v({0, 1})},
                      {v({1, -1}), v({1, 1}), v({2, 0}), v({0, 2})}));

  RootDatum su3 = split("su3_unramified", 2, {v({1, 0}), v({0, 1}), v({1, 1})},
                        {v({2, -1}), v({-1, 2}), v({1, 1})});
  su3.galois = {{"frob", swap}};
  out.push_back(std::move(su3));

  RootDatum twist = split("gl2_unramified_twist", 2, {v({1, -1})}, {v({1, -1})});
  twist.galois = {{"frob", m({{0, -1}, {-1, 0}})}};
  twist.induced_witness = std::vector<IntVector>{v({1, 0})};
  out.push_back(std::move(twist));

  // Witnesses live in the abelianized lattice, given by lifts to Z^r.
  for (auto& d : out)
    if (d.name == "gl2_split" || d.name == "gl3_split")
      d.induced_witness = std::vector<IntVector>{standard_basis(d.rank).front()};

  for (const auto& d : out) validate(d);
  return out;
}

}  // namespace

const std::vector<RootDatum>& catalog() {
  static const std::vector<RootDatum> entries = build_catalog();
  return entries;
}

const RootDatum& catalog_entry(std::string_view name) {
  for (const auto& d : catalog())
    if (d.name == name) return d;
  fail(ErrorKind::InvalidArgument, "no catalog entry named '" + std::string(name) + "'");
}

}  // namespace blockatlas
