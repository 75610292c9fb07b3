#pragma once

#include "hqft/report.hpp"
#include "hqft/smith.hpp"
#include "hqft/turaev.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace hqft {

/// Symmetric monoidal functor from the discrete category on a group into
/// A-torsors. Every fiber is a copy of A and the structure maps are
/// (a, b) -> a + b + twist(x, y).
struct MonFunctor {
  FgAbGroup base_group;
  CoeffGroup fiber;
  std::function<CoeffElement(const IntVector&, const IntVector&)> twist;

  /// Structure map from fiber(x) x fiber(y) to fiber(x + y).
  CoeffElement structure(const IntVector& x, const IntVector& y, const CoeffElement& a, const CoeffElement& b) const;
};

/// Elements on which the monoidal axioms are checked: all of a finite group,
/// or the coordinate box [-2, 2] on free generators otherwise.
std::vector<IntVector> axiom_samples(const FgAbGroup& G);

/// First failed unit, symmetry or associativity law, or nullopt.
std::optional<std::string> axiom_violation(const MonFunctor& F);

MonFunctor functor_from_extension(const Extension& e);
/// Throws NotMonoidalFunctor if an axiom fails on the samples.
Extension extension_from_functor(const MonFunctor& F);

/// Lift of the projection Z_1 -> H_1 to the extension, fixed on a cycle basis.
class CycleLift {
 public:
  CycleLift(const ComplexPtr& X, const HomologyGroup& h1, const Extension& e);

  /// Columns are the basis 1-cycles, as vectors over the edges.
  const IntMatrix& cycle_basis() const { return basis_; }
  const std::vector<ExtElement>& lift_values() const { return lifts_; }
  const Extension& extension() const { return ext_; }
  const HomologyGroup& h1() const { return h1_; }
  const ComplexPtr& complex() const { return X_; }

  /// Lift of a 1-cycle, extended linearly over the basis.
  ExtElement operator()(const Chain& z) const;

 private:
  ComplexPtr X_;
  HomologyGroup h1_;
  IntMatrix basis_;
  SmithDecomposition<Integer> basis_snf_;
  Extension ext_;
  std::vector<ExtElement> lifts_;
};

/// Cocycle sending a 2-simplex to the fiber part of the lifted boundary.
Cochain iota(const ComplexPtr& X, const Extension& e);
Cochain iota(const CycleLift& lift);

/// Isomorphism between tau(iota(e)) and the theory whose fibers are the
/// preimages p^-1([gamma]) and whose cobordisms act as identities.
struct ExtensionTheory {
  CycleLift lift;
  Hqft theory;

  explicit ExtensionTheory(const CycleLift& l) : lift(l), theory(iota(l)) {}

  /// Image of a fiber element of tau(iota(e)) in the extension.
  ExtElement psi(const FiberElement& e) const;
  /// Class of the object in H_1, the fiber the image must lie over.
  IntVector object_class(const MappedCircles& object) const;
};

struct DiagramOptions {
  std::uint64_t seed = 1;
  int cobordism_samples = 6;
  /// Test cocycles when the coefficient group is infinite.
  std::vector<Cochain> test_cocycles;
};

/// Checks both squares of the comparison between H^2(X; A) and
/// Hom(H_2, A) + Ext(H_1, A), and the order count for finite A.
Report verify_cohomology_diagram(const ComplexPtr& X, const CoeffGroup& A, const DiagramOptions& options = {});

}  // namespace hqft
