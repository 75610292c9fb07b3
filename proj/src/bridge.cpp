#include "hqft/bridge.hpp"

#include "hqft/errors.hpp"
#include "hqft/sampling.hpp"

#include <set>
#include <sstream>

namespace hqft {

namespace {

std::string vec_string(const IntVector& x) {
  std::ostringstream os;
  os << '(';
  for (Eigen::Index i = 0; i < x.size(); ++i) os << (i ? "," : "") << x(i).str();
  os << ')';
  return os.str();
}

std::string element_string(const ExtElement& u) { return "(" + u.a.to_string() + ", " + vec_string(u.x) + ")"; }

std::string values_string(const std::vector<CoeffElement>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "; " : "") + v[i].to_string();
  return s + ")";
}

}  // namespace

CoeffElement MonFunctor::structure(const IntVector& x, const IntVector& y, const CoeffElement& a,
                                   const CoeffElement& b) const {
  return a + b + twist(x, y);
}

std::vector<IntVector> axiom_samples(const FgAbGroup& G) {
  if (G.is_finite()) return G.elements();
  const int range = G.rank() > 2 ? 1 : 2;
  std::vector<IntVector> out{G.zero()};
  for (int i = 0; i < G.generator_count(); ++i) {
    std::vector<IntVector> next;
    const Integer d = G.generator_order(i);
    const int lo = d == 0 ? -range : 0;
    const int hi = d == 0 ? range : static_cast<int>(d) - 1;
    for (const auto& x : out)
      for (int k = lo; k <= hi; ++k) {
        IntVector y = x;
        y(i) = k;
        next.push_back(y);
      }
    out = std::move(next);
  }
  return out;
}

std::optional<std::string> axiom_violation(const MonFunctor& F) {
  const auto& G = F.base_group;
  const auto samples = axiom_samples(G);
  const IntVector zero = G.zero();
  for (const auto& x : samples) {
    if (!F.twist(zero, x).is_zero() || !F.twist(x, zero).is_zero())
      return "unit axiom fails at " + vec_string(x);
  }
  for (const auto& x : samples)
    for (const auto& y : samples) {
      const CoeffElement xy = F.twist(x, y);
      if (!(xy.group() == F.fiber)) return "structure map leaves the fiber group at " + vec_string(x);
      if (!(xy == F.twist(y, x)))
        return "symmetry axiom fails at (" + vec_string(x) + ", " + vec_string(y) + "): " + xy.to_string() +
               " vs " + F.twist(y, x).to_string();
    }
  for (const auto& x : samples)
    for (const auto& y : samples)
      for (const auto& z : samples) {
        const CoeffElement left = F.twist(x, y) + F.twist(G.reduce(x + y), z);
        const CoeffElement right = F.twist(y, z) + F.twist(x, G.reduce(y + z));
        if (!(left == right))
          return "associativity fails at (" + vec_string(x) + ", " + vec_string(y) + ", " + vec_string(z) + ")";
      }
  return std::nullopt;
}

MonFunctor functor_from_extension(const Extension& e) {
  return MonFunctor{e.base(), e.fiber(), [e](const IntVector& x, const IntVector& y) { return e.cocycle(x, y); }};
}

Extension extension_from_functor(const MonFunctor& F) {
  if (auto v = axiom_violation(F)) throw NotMonoidalFunctor("not a symmetric monoidal functor: " + *v);
  return Extension(F.base_group, F.fiber, F.twist);
}

CycleLift::CycleLift(const ComplexPtr& X, const HomologyGroup& h1, const Extension& e)
    : X_(X), h1_(h1), ext_(e) {
  if (h1.degree != 1) throw DimensionError("CycleLift needs H_1");
  if (!(e.base() == h1.group))
    throw DomainMismatch("extension base " + e.base().to_string() + " is not H_1 = " + h1.group.to_string());
  const IntMatrix D1 = boundary_operator(*X, 1);
  basis_ = kernel_basis(D1);
  basis_snf_ = smith_normal_form(basis_);
  for (Eigen::Index k = 0; k < basis_.cols(); ++k)
    lifts_.push_back(ext_.section(h1.class_of(from_vector(*X, 1, basis_.col(k)))));
}

ExtElement CycleLift::operator()(const Chain& z) const {
  if (z.is_zero()) return ext_.zero();
  if (z.dim() != 1 || !is_cycle(z)) throw PreconditionError("lift needs a 1-cycle");
  require_in(*X_, z, "lift");
  auto n = solve_integer(basis_snf_, basis_, to_vector(*X_, z));
  if (!n) throw InvariantViolation("cycle " + to_string(z) + " is not in the span of the cycle basis");
  ExtElement acc = ext_.zero();
  for (Eigen::Index k = 0; k < n->size(); ++k)
    if ((*n)(k) != 0) acc = ext_.add(acc, ext_.scale((*n)(k), lifts_[static_cast<size_t>(k)]));
  return acc;
}

Cochain iota(const CycleLift& lift) {
  const ComplexPtr& X = lift.complex();
  Cochain theta(X, 2, lift.extension().fiber());
  const auto& cells = X->simplices(2);
  for (size_t i = 0; i < cells.size(); ++i) {
    Chain c(2);
    c.add(cells[i], 1);
    const ExtElement u = lift(boundary(c));
    if (!(u.x == lift.extension().base().zero()))
      throw InvariantViolation("lift of a boundary does not lie over zero at " + to_string(cells[i]));
    theta.set(static_cast<Eigen::Index>(i), u.a);
  }
  return theta;
}

Cochain iota(const ComplexPtr& X, const Extension& e) { return iota(CycleLift(X, homology(X, 1), e)); }

ExtElement ExtensionTheory::psi(const FiberElement& e) const {
  const FiberElement f = theory.element(e.object, e.phase);
  return lift.extension().add(lift.extension().include(f.phase), lift(f.object.canonical_cycle()));
}

IntVector ExtensionTheory::object_class(const MappedCircles& object) const {
  return lift.h1().class_of(object.canonical_cycle());
}

Report verify_cohomology_diagram(const ComplexPtr& X, const CoeffGroup& A, const DiagramOptions& options) {
  Report report;
  report.title = "comparison of H^2(X; " + A.to_string() + ") with Hom(H_2, A) + Ext(H_1, A)";
  const LowHomology H(X);
  const ExtGroup E = ext_group(H.h1.group, A);
  Sampler sampler(options.seed);

  std::vector<XSurface> h2_surfaces;
  for (const auto& z : H.h2.generators) h2_surfaces.push_back(surface_from_cycle(X, z));
  auto character = [&](const Hqft& h) {
    std::vector<CoeffElement> values;
    for (const auto& s : h2_surfaces) values.push_back(holonomy(h, s));
    return values;
  };

  report.add("H_1", H.h1.group.to_string(), H.h1.group.to_string(), true);
  report.add("H_2", H.h2.group.to_string(), H.h2.group.to_string(), true);

  // Left square: extensions through iota, compared with the identity-morphism theories.
  std::vector<ExtClass> ext_classes = E.classes();
  std::vector<Cochain> iota_values;
  for (const auto& cls : ext_classes) {
    const std::string name = "left square, class " + cls.to_string();
    const Extension ext = extension_from_class(H.h1.group, A, cls);
    const ExtensionTheory T{CycleLift(X, H.h1, ext)};
    iota_values.push_back(T.theory.cocycle());

    const UctSplit split = uct_split(H, T.theory.cocycle());
    const bool hom_zero = std::all_of(split.hom_part.values.begin(), split.hom_part.values.end(),
                                      [](const CoeffElement& v) { return v.is_zero(); });
    report.add(name + ": split of iota", "(0; " + cls.to_string() + ")",
               "(" + values_string(split.hom_part.values) + "; " + split.ext_part.to_string() + ")",
               hom_zero && split.ext_part == E.canonical(cls));

    const Extension round = extension_from_functor(functor_from_extension(ext));
    report.add(name + ": functor round trip", E.canonical(cls).to_string(), E.canonical(round.ext_class()).to_string(),
               E.canonical(round.ext_class()) == E.canonical(cls));

    std::string witness;
    int checked = 0;
    for (int s = 0; s < options.cobordism_samples && witness.empty(); ++s) {
      const MappedCircles obj = sampler.object(X, 2);
      const XSurface g = sampler.cobordism(obj, 2);
      const FiberElement e = T.theory.element(obj, A.is_finite() ? sampler.element(A) : A.zero());
      const FiberElement out = evaluate(T.theory, g, e);
      const ExtElement before = T.psi(e), after = T.psi(out);
      if (!(before == after))
        witness = "cobordism from " + obj.to_string() + ": psi(e) = " + element_string(before) +
                  ", psi(g(e)) = " + element_string(after);
      else if (!(before.x == T.object_class(obj)))
        witness = "psi(e) = " + element_string(before) + " does not lie over the class of " + obj.to_string();
      const MappedCircles other = sampler.object(X, 1);
      const FiberElement f = T.theory.element(other, A.is_finite() ? sampler.element(A) : A.zero());
      const ExtElement joint = T.psi(tensor(e, f));
      const ExtElement separate = ext.add(T.psi(e), T.psi(f));
      if (witness.empty() && !(joint == separate))
        witness = "psi(e (x) f) = " + element_string(joint) + " but psi(e) + psi(f) = " + element_string(separate);
      ++checked;
    }
    report.add(name + ": naturality and monoidality", "all samples commute",
               std::to_string(checked) + " samples" + (witness.empty() ? " commute" : " with a failure"),
               witness.empty(), witness);
  }

  // iota is additive up to coboundaries.
  {
    std::string witness;
    const size_t n = std::min<size_t>(ext_classes.size(), 8);
    for (size_t i = 0; i < n && witness.empty(); ++i)
      for (size_t j = 0; j < n && witness.empty(); ++j) {
        const ExtClass sum = E.add(ext_classes[i], ext_classes[j]);
        const auto k = static_cast<size_t>(std::find(ext_classes.begin(), ext_classes.end(), sum) - ext_classes.begin());
        const Cochain defect = iota_values[k] - iota_values[i] - iota_values[j];
        if (!coboundary_witness(defect))
          witness = "iota(" + sum.to_string() + ") - iota(" + ext_classes[i].to_string() + ") - iota(" +
                    ext_classes[j].to_string() + ") is not a coboundary";
      }
    report.add("iota is additive", "defects are coboundaries", witness.empty() ? "all coboundaries" : "failure",
               witness.empty(), witness);
  }

  // Right square: holonomy character against the Hom part, for every class.
  std::vector<Cochain> cocycles;
  std::optional<CohomologyGroup> C;
  if (A.is_finite()) {
    C = cohomology(X, A, 2);
    cocycles = C->representatives();
  } else {
    cocycles = options.test_cocycles;
    if (cocycles.empty())
      for (int i = 0; i < 8; ++i) cocycles.push_back(sampler.cocycle(X, A));
  }
  std::set<std::pair<std::vector<CoeffElement>, std::vector<CoeffElement>>> images;
  std::string right_witness;
  size_t kernel = 0;
  for (const auto& theta : cocycles) {
    const Hqft h(theta);
    const auto values = character(h);
    const UctSplit split = uct_split(H, theta);
    if (values != split.hom_part.values && right_witness.empty())
      right_witness = "holonomy " + values_string(values) + " but hom part " + values_string(split.hom_part.values);
    images.insert({split.hom_part.values, split.ext_part.values});
    if (std::all_of(values.begin(), values.end(), [](const CoeffElement& v) { return v.is_zero(); })) ++kernel;
  }
  report.add("right square", "holonomy equals hom part",
             std::to_string(cocycles.size()) + (A.is_finite() ? " classes" : " test cocycles") +
                 (right_witness.empty() ? " agree" : " with a mismatch"),
             right_witness.empty(), right_witness);

  if (A.is_finite()) {
    const Integer hom = hom_order(H.h2.group, A);
    const Integer ext = E.order();
    report.add("|H^2| = |Hom| * |Ext|", hom.str() + " * " + ext.str() + " = " + (hom * ext).str(), C->order().str(),
               C->order() == hom * ext);
    report.add("classes separated by (hom, ext)", C->order().str() + " distinct pairs",
               std::to_string(images.size()) + " distinct pairs", Integer(images.size()) == C->order());
    report.add("kernel of holonomy equals image of iota", ext.str() + " classes", std::to_string(kernel) + " classes",
               Integer(kernel) == ext);
  } else {
    report.add("Ext(H_1, A)", "not enumerated", E.order().str() + " classes", true);
  }
  return report;
}

}  // namespace hqft
