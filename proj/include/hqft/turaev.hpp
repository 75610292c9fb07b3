#pragma once

#include "hqft/homology.hpp"
#include "hqft/surface.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hqft {

/// Point of the fiber over an object: a phase relative to the canonical cycle.
struct FiberElement {
  MappedCircles object;
  CoeffElement phase;

  bool operator==(const FiberElement& o) const { return object == o.object && phase == o.phase; }
  std::string to_string() const;
};

/// Tensor product of fiber elements: circles concatenated, phases added.
FiberElement tensor(const FiberElement& a, const FiberElement& b);

/// Rank-one theory built from a degree-2 cocycle with values in A.
class Hqft {
 public:
  /// Throws NotACocycle unless delta(theta) = 0.
  explicit Hqft(Cochain theta);

  const ComplexPtr& base() const { return theta_.complex(); }
  const CoeffGroup& coeff() const { return theta_.group(); }
  const Cochain& cocycle() const { return theta_; }

  /// Fiber element with the given phase. Validates the object against the base.
  FiberElement element(const MappedCircles& object, const CoeffElement& phase) const;
  FiberElement unit(const MappedCircles& object) const { return element(object, coeff().zero()); }
  /// Phase relative to the canonical cycle of an element given relative to a
  /// 1-cycle `a` on identity_cylinder(object), homologous there to the bottom circles.
  FiberElement normalize(const MappedCircles& object, const Chain& a, const CoeffElement& phase) const;

 private:
  Cochain theta_;
};

/// tau(theta). The same as the Hqft constructor.
Hqft tau(const Cochain& theta);
Hqft trivial(const ComplexPtr& X, const CoeffGroup& A);
Hqft tensor(const Hqft& a, const Hqft& b);
Hqft inverse(const Hqft& h);

/// Value of the cocycle on the pushed-forward fundamental cycle of a closed surface.
CoeffElement holonomy(const Hqft& h, const XSurface& g);

/// Output element of the cobordism g applied to e. With `selfcheck` the
/// relative cycle is recomputed from the boundary circles and compared.
FiberElement evaluate(const Hqft& h, const XSurface& g, const FiberElement& e, bool selfcheck = false);

struct HolonomyCharacter {
  FgAbGroup h2;
  CoeffGroup coeff;
  std::vector<CoeffElement> values;

  GroupHom as_hom() const;
  bool operator==(const HolonomyCharacter& o) const { return values == o.values; }
  /// One "label: value" line per generator.
  std::string to_string() const;
};

/// Holonomy on surfaces representing the H_2 generators.
HolonomyCharacter holonomy_character(const Hqft& h, const HomologyGroup& h2);
HolonomyCharacter holonomy_character(const Hqft& h);

/// Family of fiber maps source -> target of the form phase + shift(object).
struct FiberIso {
  Hqft source, target;
  std::function<CoeffElement(const MappedCircles&)> shift;

  FiberElement operator()(const FiberElement& e) const;
};

/// Isomorphism tau(theta) -> tau(theta - delta f), phase + f(canonical cycle).
FiberIso coboundary_iso(const Hqft& h, const Cochain& f);
/// Isomorphism from h to the trivial theory, when theta is a coboundary.
std::optional<FiberIso> trivializing_iso(const Hqft& h);

/// Message describing a failure of psi(g(e)) = g(psi(e)), or nullopt.
std::optional<std::string> naturality_defect(const FiberIso& psi, const XSurface& g, const FiberElement& e);
/// Message describing a failure of psi(a (x) b) = psi(a) (x) psi(b), or nullopt.
std::optional<std::string> monoidality_defect(const FiberIso& psi, const FiberElement& a, const FiberElement& b);

}  // namespace hqft
