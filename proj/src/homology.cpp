#include "hqft/homology.hpp"

#include "hqft/errors.hpp"
#include "hqft/smith.hpp"

#include <functional>

namespace hqft {

namespace {

size_t support(const IntVector& v) {
  size_t n = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) n += v(i) != 0;
  return n;
}

// Greedy support reduction of a cycle by adding boundaries of single cells.
// Returns the total chain b (in (k+1)-simplex coordinates) that was added as D b.
IntVector shrink_cycle(IntVector& z, const IntMatrix& D) {
  IntVector added = IntVector::Zero(D.cols());
  bool improved = true;
  for (int pass = 0; improved && pass < 64; ++pass) {
    improved = false;
    for (Eigen::Index j = 0; j < D.cols(); ++j)
      for (int s : {1, -1}) {
        IntVector candidate = z + Integer(s) * D.col(j);
        if (support(candidate) < support(z)) {
          z = candidate;
          added(j) += s;
          improved = true;
        }
      }
  }
  return added;
}

IntMatrix column_lattice_basis(const IntMatrix& G) {
  auto snf = smith_normal_form(G);
  IntMatrix B = snf.U_inv.leftCols(snf.rank);
  for (Eigen::Index i = 0; i < snf.rank; ++i) B.col(i) *= snf.S(i, i);
  return B;
}

IntMatrix hcat(const IntMatrix& A, const IntMatrix& B) {
  IntMatrix C(A.rows(), A.cols() + B.cols());
  C << A, B;
  return C;
}

}  // namespace

IntVector HomologyGroup::class_of(const Chain& z) const {
  if (z.is_zero()) return group.zero();
  if (z.dim() != degree)
    throw DimensionError("class_of: expected a " + std::to_string(degree) + "-chain, got a " +
                         std::to_string(z.dim()) + "-chain");
  if (!is_cycle(z)) throw PreconditionError("class_of: chain " + to_string(z) + " is not a cycle");
  return group.reduce(class_map * to_vector(*complex, z));
}

Chain HomologyGroup::representative(const IntVector& x) const {
  Chain c(degree);
  for (Eigen::Index i = 0; i < x.size(); ++i) c += x(i) * generators[static_cast<size_t>(i)];
  return c;
}

bool is_cycle(const Chain& z) { return z.dim() == 0 || boundary(z).is_zero(); }

HomologyGroup homology(const ComplexPtr& X, int k) {
  if (k < 0) throw DimensionError("homology degree must be non-negative, got " + std::to_string(k));
  HomologyGroup H;
  H.complex = X;
  H.degree = k;
  const IntMatrix Dk = boundary_operator(*X, k);
  const IntMatrix Dk1 = boundary_operator(*X, k + 1);
  const auto snf1 = smith_normal_form(Dk);
  const Eigen::Index r = snf1.rank, ck = X->count(k);
  const IntMatrix K = snf1.V.rightCols(ck - r);
  const IntMatrix C = snf1.V_inv.bottomRows(ck - r);
  const IntMatrix M = C * Dk1;
  const auto snf2 = smith_normal_form(M);
  const IntMatrix gens = K * snf2.U_inv;

  std::vector<Eigen::Index> torsion, free;
  for (Eigen::Index j = 0; j < M.rows(); ++j) {
    if (j < snf2.rank) {
      if (snf2.S(j, j) > 1) torsion.push_back(j);
    } else {
      free.push_back(j);
    }
  }
  std::vector<Integer> factors;
  for (auto j : torsion) factors.push_back(snf2.S(j, j));
  std::vector<std::string> labels;
  for (size_t i = 0; i < torsion.size() + free.size(); ++i) labels.push_back("g" + std::to_string(i));
  H.group = FgAbGroup(factors, static_cast<int>(free.size()), labels);

  const IntMatrix UC = snf2.U * C;
  H.class_map = IntMatrix(static_cast<Eigen::Index>(torsion.size() + free.size()), ck);
  Eigen::Index row = 0;
  for (auto j : torsion) H.class_map.row(row++) = UC.row(j);
  for (auto j : free) H.class_map.row(row++) = UC.row(j);

  auto emit = [&](Eigen::Index j, bool is_torsion) {
    IntVector z = gens.col(j);
    IntVector added = shrink_cycle(z, Dk1);
    H.generators.push_back(from_vector(*X, k, z));
    if (is_torsion) {
      IntVector w = snf2.V.col(j) + snf2.S(j, j) * added;
      Chain witness = from_vector(*X, k + 1, w);
      if (!(boundary(witness) == snf2.S(j, j) * H.generators.back()))
        throw InvariantViolation("homology: torsion witness does not bound");
      H.relation_witnesses.push_back(std::move(witness));
    }
  };
  for (auto j : torsion) emit(j, true);
  for (auto j : free) emit(j, false);
  for (const auto& g : H.generators)
    if (!is_cycle(g)) throw InvariantViolation("homology: generator is not a cycle");
  return H;
}

std::optional<Chain> is_boundary_with_witness(const SimplicialComplex& X, const Chain& z) {
  require_in(X, z, "is_boundary_with_witness");
  if (!is_cycle(z)) throw PreconditionError("chain " + to_string(z) + " is not a cycle");
  if (z.is_zero()) return Chain(z.dim() + 1);
  const IntMatrix D = boundary_operator(X, z.dim() + 1);
  auto x = solve_integer(D, to_vector(X, z));
  if (!x) return std::nullopt;
  Chain w = from_vector(X, z.dim() + 1, *x);
  if (!(boundary(w) == z)) throw InvariantViolation("is_boundary_with_witness: witness does not bound");
  return w;
}

Cochain::Cochain(ComplexPtr X, int degree, CoeffGroup A)
    : complex_(std::move(X)), degree_(degree), group_(std::move(A)) {
  if (degree_ < 0) throw DimensionError("cochain degree must be non-negative");
  values_.assign(static_cast<size_t>(complex_->count(degree_)), group_.zero());
}

CoeffElement Cochain::operator()(const Simplex& s) const {
  auto i = complex_->index_of(s);
  if (!i || s.dim() != degree_)
    throw DomainMismatch("cochain of degree " + std::to_string(degree_) + " evaluated on " + to_string(s) +
                         ", which is not a simplex of that degree");
  return values_[static_cast<size_t>(*i)];
}

CoeffElement Cochain::operator()(const OrientedSimplex& s) const {
  CoeffElement v = (*this)(s.simplex);
  return s.sign > 0 ? v : -v;
}

CoeffElement Cochain::evaluate(const Chain& c) const {
  CoeffElement out = group_.zero();
  if (c.is_zero()) return out;
  if (c.dim() != degree_)
    throw DimensionError("cochain of degree " + std::to_string(degree_) + " evaluated on a " +
                         std::to_string(c.dim()) + "-chain");
  for (const auto& [s, k] : c.terms()) out += k * (*this)(s);
  return out;
}

void Cochain::set(const Simplex& s, const CoeffElement& v) {
  auto i = complex_->index_of(s);
  if (!i || s.dim() != degree_)
    throw DomainMismatch("simplex " + to_string(s) + " is not a " + std::to_string(degree_) +
                         "-simplex of the complex");
  set(*i, v);
}

void Cochain::set(Eigen::Index i, const CoeffElement& v) {
  if (!(v.group() == group_)) throw DomainMismatch("value " + v.to_string() + " is not in " + group_.to_string());
  values_.at(static_cast<size_t>(i)) = v;
}

bool Cochain::is_zero() const {
  for (const auto& v : values_)
    if (!v.is_zero()) return false;
  return true;
}

void Cochain::require_compatible(const Cochain& o) const {
  if (degree_ != o.degree_ || !(group_ == o.group_) || values_.size() != o.values_.size())
    throw DomainMismatch("cochains live on different complexes, degrees or groups");
}

Cochain& Cochain::operator+=(const Cochain& o) {
  require_compatible(o);
  for (size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
  return *this;
}

Cochain& Cochain::operator-=(const Cochain& o) {
  require_compatible(o);
  for (size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
  return *this;
}

Cochain Cochain::operator-() const {
  Cochain out = *this;
  for (auto& v : out.values_) v = -v;
  return out;
}

Cochain operator*(const Integer& k, const Cochain& c) {
  Cochain out = c;
  for (auto& v : out.values_) v = k * v;
  return out;
}

bool Cochain::operator==(const Cochain& o) const {
  return degree_ == o.degree_ && group_ == o.group_ && values_ == o.values_;
}

Cochain coboundary(const Cochain& f) {
  const auto& X = *f.complex();
  Cochain out(f.complex(), f.degree() + 1, f.group());
  const auto& cells = X.simplices(f.degree() + 1);
  for (size_t j = 0; j < cells.size(); ++j) {
    CoeffElement v = f.group().zero();
    const Simplex& s = cells[j];
    for (size_t i = 0; i < s.vertices.size(); ++i) {
      CoeffElement face = f(s.face(i));
      if (i % 2 == 0) v += face;
      else v -= face;
    }
    out.set(static_cast<Eigen::Index>(j), v);
  }
  return out;
}

std::optional<CocycleViolation> cocycle_violation(const Cochain& theta) {
  const Cochain d = coboundary(theta);
  const auto& cells = theta.complex()->simplices(theta.degree() + 1);
  for (size_t j = 0; j < cells.size(); ++j)
    if (!d.values()[j].is_zero()) return CocycleViolation{cells[j], d.values()[j]};
  return std::nullopt;
}

void require_cocycle(const Cochain& theta) {
  if (auto v = cocycle_violation(theta))
    throw NotACocycle("not a cocycle: coboundary is " + v->value.to_string() + " on the " +
                      std::to_string(theta.degree() + 1) + "-simplex " + to_string(v->simplex));
}

std::optional<Cochain> coboundary_witness(const Cochain& theta) {
  if (theta.degree() == 0) throw DimensionError("a 0-cochain is never a coboundary");
  const IntMatrix D = boundary_operator(*theta.complex(), theta.degree());
  auto x = solve_linear(IntMatrix(D.transpose()), theta.values(), theta.group());
  if (!x) return std::nullopt;
  Cochain f(theta.complex(), theta.degree() - 1, theta.group());
  for (size_t i = 0; i < x->size(); ++i) f.set(static_cast<Eigen::Index>(i), (*x)[i]);
  if (!(coboundary(f) == theta)) throw InvariantViolation("coboundary_witness: verification failed");
  return f;
}

UctSplit uct_split(const LowHomology& H, const Cochain& theta) {
  if (theta.degree() != 2) throw DimensionError("uct_split needs a degree-2 cochain");
  require_cocycle(theta);
  const CoeffGroup& A = theta.group();
  std::vector<CoeffElement> values;
  for (const auto& g : H.h2.generators) values.push_back(theta.evaluate(g));
  UctSplit out{hom_values(H.h2.group, A, values), ext_group(H.h1.group, A), {}};
  for (size_t i = 0; i < H.h1.relation_witnesses.size(); ++i)
    out.ext_part.values.push_back(
        reduce_mod_multiples(theta.evaluate(H.h1.relation_witnesses[i]), H.h1.group.invariant_factors()[i]));
  return out;
}

UctSplit uct_split(const Cochain& theta) { return uct_split(LowHomology(theta.complex()), theta); }

Integer CohomologyGroup::order() const {
  Integer n = 1;
  for (const auto& d : coordinate_orders) n *= d;
  return n;
}

std::vector<Integer> CohomologyGroup::class_of(const Cochain& theta) const {
  if (theta.degree() != degree || !(theta.group() == coeff))
    throw DomainMismatch("class_of: cochain has the wrong degree or coefficient group");
  require_cocycle(theta);
  std::vector<Integer> coords(coordinate_orders.size());
  for (size_t a = 0; a < atoms.size(); ++a) {
    const auto& data = atoms[a];
    IntVector lift(static_cast<Eigen::Index>(theta.values().size()));
    for (size_t i = 0; i < theta.values().size(); ++i)
      lift(static_cast<Eigen::Index>(i)) = boost::multiprecision::numerator(theta.values()[i].components()[a]);
    auto t = solve_integer(data.cocycle_lattice, lift);
    if (!t) throw InvariantViolation("class_of: cocycle lift is outside the cocycle lattice");
    IntVector c = data.coordinate_rows * *t;
    for (Eigen::Index i = 0; i < c.size(); ++i) {
      size_t idx = data.first_coordinate + static_cast<size_t>(i);
      coords[idx] = mod_positive(c(i), coordinate_orders[idx]);
    }
  }
  return coords;
}

Cochain CohomologyGroup::representative(const std::vector<Integer>& coords) const {
  if (coords.size() != generators.size()) throw DimensionError("representative: wrong number of coordinates");
  Cochain out(complex, degree, coeff);
  for (size_t i = 0; i < coords.size(); ++i) out += coords[i] * generators[i];
  return out;
}

std::vector<Cochain> CohomologyGroup::representatives() const {
  std::vector<Cochain> out;
  std::vector<Integer> coords(coordinate_orders.size(), Integer(0));
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == coords.size()) {
      out.push_back(representative(coords));
      return;
    }
    for (Integer v = 0; v < coordinate_orders[i]; ++v) {
      coords[i] = v;
      rec(i + 1);
    }
    coords[i] = 0;
  };
  rec(0);
  return out;
}

CohomologyGroup cohomology(const ComplexPtr& X, const CoeffGroup& A, int k) {
  if (!A.is_finite()) throw PreconditionError("cohomology classes are enumerated only for finite coefficients");
  if (k < 0) throw DimensionError("cohomology degree must be non-negative");
  CohomologyGroup H;
  H.complex = X;
  H.degree = k;
  H.coeff = A;
  const Eigen::Index ck = X->count(k), cup = X->count(k + 1);
  const IntMatrix Dup = boundary_operator(*X, k + 1);  // ck x cup
  const IntMatrix Ddown = boundary_operator(*X, k);    // cdown x ck
  for (size_t a = 0; a < A.arity(); ++a) {
    const Integer n = A.atom(a).order;
    CohomologyGroup::AtomData data;
    data.first_coordinate = H.coordinate_orders.size();
    const IntMatrix nI_up = n * IntMatrix::Identity(cup, cup);
    const IntMatrix nI = n * IntMatrix::Identity(ck, ck);
    // Integer lifts of cocycles: x with D_up^T x = 0 mod n.
    IntMatrix cocycle_gens = kernel_basis(hcat(IntMatrix(Dup.transpose()), nI_up)).topRows(ck);
    data.cocycle_lattice = column_lattice_basis(cocycle_gens);
    const IntMatrix coboundary_lattice = column_lattice_basis(hcat(IntMatrix(Ddown.transpose()), nI));
    const auto lattice_snf = smith_normal_form(data.cocycle_lattice);
    IntMatrix rel(ck, ck);
    for (Eigen::Index j = 0; j < ck; ++j) {
      auto col = solve_integer(lattice_snf, data.cocycle_lattice, IntVector(coboundary_lattice.col(j)));
      if (!col) throw InvariantViolation("cohomology: coboundary lattice is not inside the cocycle lattice");
      rel.col(j) = *col;
    }
    const auto rel_snf = smith_normal_form(rel);
    const IntMatrix gens = data.cocycle_lattice * rel_snf.U_inv;
    std::vector<Eigen::Index> kept;
    for (Eigen::Index i = 0; i < ck; ++i)
      if (rel_snf.S(i, i) > 1) kept.push_back(i);
    data.coordinate_rows = IntMatrix(static_cast<Eigen::Index>(kept.size()), ck);
    for (size_t r = 0; r < kept.size(); ++r) {
      const Eigen::Index i = kept[r];
      data.coordinate_rows.row(static_cast<Eigen::Index>(r)) = rel_snf.U.row(i);
      H.coordinate_orders.push_back(rel_snf.S(i, i));
      Cochain g(X, k, A);
      for (Eigen::Index s = 0; s < ck; ++s) {
        std::vector<Rational> comps(A.arity(), Rational(0));
        comps[a] = Rational(gens(s, i));
        g.set(s, A.element(comps));
      }
      require_cocycle(g);
      H.generators.push_back(std::move(g));
    }
    H.atoms.push_back(std::move(data));
  }
  H.group = FgAbGroup::from_orders(H.coordinate_orders);
  return H;
}

}  // namespace hqft
