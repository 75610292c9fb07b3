#pragma once

#include "hqft/coefficients.hpp"
#include "hqft/complex.hpp"

#include <optional>
#include <vector>

namespace hqft {

/// H_k(X; Z) with explicit generator cycles and torsion witnesses.
struct HomologyGroup {
  ComplexPtr complex;
  int degree = 0;
  FgAbGroup group;
  /// One cycle per generator of `group`, torsion generators first.
  std::vector<Chain> generators;
  /// For torsion generator i of order d: a (k+1)-chain w with boundary(w) = d * generators[i].
  std::vector<Chain> relation_witnesses;

  /// Coordinates of the class of a k-cycle in `group`, reduced.
  IntVector class_of(const Chain& z) const;
  /// Cycle representing the given group element.
  Chain representative(const IntVector& x) const;

  /// Rows map cycle vectors (in k-simplex order) to unreduced group coordinates.
  IntMatrix class_map;
};

/// H_k for k >= 0; degrees above dim X give the trivial group.
HomologyGroup homology(const ComplexPtr& X, int k);

bool is_cycle(const Chain& z);

/// A chain w with boundary(w) = z, or nullopt if z is not a boundary.
std::optional<Chain> is_boundary_with_witness(const SimplicialComplex& X, const Chain& z);

/// A-valued k-cochain, stored densely in the complex's k-simplex order.
class Cochain {
 public:
  Cochain(ComplexPtr X, int degree, CoeffGroup A);

  const ComplexPtr& complex() const { return complex_; }
  int degree() const { return degree_; }
  const CoeffGroup& group() const { return group_; }
  const std::vector<CoeffElement>& values() const { return values_; }

  CoeffElement operator()(const Simplex& s) const;
  CoeffElement operator()(const OrientedSimplex& s) const;
  CoeffElement evaluate(const Chain& c) const;
  void set(const Simplex& s, const CoeffElement& v);
  void set(Eigen::Index i, const CoeffElement& v);
  bool is_zero() const;

  Cochain& operator+=(const Cochain& o);
  Cochain& operator-=(const Cochain& o);
  Cochain operator-() const;
  friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
  friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
  friend Cochain operator*(const Integer& k, const Cochain& c);
  bool operator==(const Cochain& o) const;

 private:
  void require_compatible(const Cochain& o) const;
  ComplexPtr complex_;
  int degree_;
  CoeffGroup group_;
  std::vector<CoeffElement> values_;
};

/// (delta f)(s) = f(boundary s). For f of top degree the result has no simplices.
Cochain coboundary(const Cochain& f);

struct CocycleViolation {
  Simplex simplex;
  CoeffElement value;
};

/// First (k+1)-simplex on which delta(theta) is non-zero.
std::optional<CocycleViolation> cocycle_violation(const Cochain& theta);
/// Throws NotACocycle naming the offending simplex.
void require_cocycle(const Cochain& theta);

/// A (k-1)-cochain f with delta f = theta, or nullopt when theta is not a coboundary.
std::optional<Cochain> coboundary_witness(const Cochain& theta);

/// H_1 and H_2 of one complex, computed together.
struct LowHomology {
  HomologyGroup h1, h2;
  explicit LowHomology(const ComplexPtr& X) : h1(homology(X, 1)), h2(homology(X, 2)) {}
};

/// The two universal-coefficient components of a degree-2 cocycle.
struct UctSplit {
  GroupHom hom_part;
  ExtGroup ext;
  ExtClass ext_part;
  bool operator==(const UctSplit& o) const { return hom_part == o.hom_part && ext_part == o.ext_part; }
};

UctSplit uct_split(const LowHomology& H, const Cochain& theta);
UctSplit uct_split(const Cochain& theta);

/// H^k(X; A) for finite A, with explicit class representatives.
struct CohomologyGroup {
  ComplexPtr complex;
  int degree = 0;
  CoeffGroup coeff;
  /// Invariant-factor form of the group.
  FgAbGroup group;
  /// Cyclic orders of the internal coordinates, possibly not a divisibility chain.
  std::vector<Integer> coordinate_orders;
  /// One cocycle per internal coordinate.
  std::vector<Cochain> generators;

  Integer order() const;
  /// Coordinates of the class of a cocycle.
  std::vector<Integer> class_of(const Cochain& theta) const;
  Cochain representative(const std::vector<Integer>& coords) const;
  /// One representative per class, in lexicographic order of coordinates.
  std::vector<Cochain> representatives() const;

  struct AtomData {
    IntMatrix cocycle_lattice;  // basis of integer lifts of cocycles, one per column
    IntMatrix coordinate_rows;  // lattice coordinates to class coordinates
    size_t first_coordinate = 0;
  };
  std::vector<AtomData> atoms;
};

CohomologyGroup cohomology(const ComplexPtr& X, const CoeffGroup& A, int k);

}  // namespace hqft
