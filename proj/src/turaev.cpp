#include "hqft/turaev.hpp"

#include "hqft/errors.hpp"
#include "hqft/smith.hpp"

#include <sstream>

namespace hqft {

namespace {

void require_object_in(const ComplexPtr& X, const MappedCircles& object) {
  if (object.space && object.space != X &&
      (object.space->vertex_count() != X->vertex_count() ||
       object.space->maximal_simplices() != X->maximal_simplices()))
    throw DomainMismatch("object maps into a different space than the theory");
  MappedCircles o = object;
  o.space = X;
  validate(o);
}

void require_same_theory_space(const Hqft& a, const Hqft& b, const std::string& what) {
  const auto& X = *a.base();
  const auto& Y = *b.base();
  if (a.base() != b.base() && (X.vertex_count() != Y.vertex_count() || X.maximal_simplices() != Y.maximal_simplices()))
    throw DomainMismatch(what + ": theories live over different spaces");
  if (!(a.coeff() == b.coeff()))
    throw DomainMismatch(what + ": coefficient groups " + a.coeff().to_string() + " and " + b.coeff().to_string() +
                         " differ");
}

void require_surface_space(const Hqft& h, const XSurface& g) {
  const auto& X = *h.base();
  const auto& Y = *g.space();
  if (h.base() != g.space() && (X.vertex_count() != Y.vertex_count() || X.maximal_simplices() != Y.maximal_simplices()))
    throw DomainMismatch("surface maps into a different space than the theory");
}

// Relative cycle recomputed from the boundary circles alone.
Chain second_relative_cycle(const XSurface& g) {
  const auto& S = *g.surface;
  if (S.count(2) == 0) return Chain(2);
  Chain target(1);
  for (const auto& c : g.inputs)
    for (size_t i = 0; i < c.size(); ++i) target.add(*OrientedSimplex::from_tuple({c[i], c[(i + 1) % c.size()]}));
  for (const auto& c : g.outputs)
    for (size_t i = 0; i < c.size(); ++i) target.add(*OrientedSimplex::from_tuple({c[i], c[(i + 1) % c.size()]}), -1);
  const IntMatrix D = boundary_matrix(S, 2);
  auto x = solve_integer(D, to_vector(S, target));
  if (!x) throw InvariantViolation("selfcheck: boundary circles do not bound a 2-chain on the surface");
  Chain alt = from_vector(S, 2, *x);
  // On closed components the solution is free up to multiples of the fundamental cycle.
  std::vector<int> comp(static_cast<size_t>(S.vertex_count()));
  for (int v = 0; v < S.vertex_count(); ++v) comp[static_cast<size_t>(v)] = v;
  auto find = [&](int v) {
    while (comp[static_cast<size_t>(v)] != v) v = comp[static_cast<size_t>(v)] = comp[static_cast<size_t>(comp[static_cast<size_t>(v)])];
    return v;
  };
  for (const auto& e : S.simplices(1)) {
    int a = find(e.vertices[0]), b = find(e.vertices[1]);
    if (a != b) comp[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
  }
  std::map<int, Chain> pieces;
  for (const auto& [s, c] : g.cycle.terms()) {
    auto it = pieces.try_emplace(find(s.vertices[0]), Chain(2)).first;
    it->second.add(s, c);
  }
  for (const auto& [root, piece] : pieces) {
    const Simplex& first = piece.terms().begin()->first;
    Integer k = alt.coefficient(first) * piece.coefficient(first);
    if (k != 1) alt += (1 - k) * piece;
  }
  return alt;
}

}  // namespace

std::string FiberElement::to_string() const { return phase.to_string() + " over " + object.to_string(); }

FiberElement tensor(const FiberElement& a, const FiberElement& b) {
  return FiberElement{disjoint_union(a.object, b.object), a.phase + b.phase};
}

Hqft::Hqft(Cochain theta) : theta_(std::move(theta)) {
  if (theta_.degree() != 2) throw DimensionError("a theory needs a degree-2 cocycle");
  require_cocycle(theta_);
}

FiberElement Hqft::element(const MappedCircles& object, const CoeffElement& phase) const {
  require_object_in(base(), object);
  if (!(phase.group() == coeff()))
    throw DomainMismatch("phase " + phase.to_string() + " is not in " + coeff().to_string());
  return FiberElement{MappedCircles{base(), object.images}, phase};
}

FiberElement Hqft::normalize(const MappedCircles& object, const Chain& a, const CoeffElement& phase) const {
  FiberElement e = element(object, phase);
  const XSurface prism = identity_cylinder(e.object, 1);
  require_in(*prism.surface, a, "normalize");
  Chain canonical(1);
  for (const auto& c : prism.inputs)
    for (size_t i = 0; i < c.size(); ++i) canonical.add(*OrientedSimplex::from_tuple({c[i], c[(i + 1) % c.size()]}));
  if (!is_cycle(a)) throw PreconditionError("normalize: representative is not a cycle");
  auto w = is_boundary_with_witness(*prism.surface, a - canonical);
  if (!w) throw InvalidClass("normalize: representative is not homologous to the fundamental class of the circles");
  e.phase += theta_.evaluate(push_forward(prism.map, *w));
  return e;
}

Hqft tau(const Cochain& theta) { return Hqft(theta); }

Hqft trivial(const ComplexPtr& X, const CoeffGroup& A) { return Hqft(Cochain(X, 2, A)); }

Hqft tensor(const Hqft& a, const Hqft& b) {
  require_same_theory_space(a, b, "tensor");
  return Hqft(a.cocycle() + b.cocycle());
}

Hqft inverse(const Hqft& h) { return Hqft(-h.cocycle()); }

CoeffElement holonomy(const Hqft& h, const XSurface& g) {
  if (!g.closed()) throw PreconditionError("holonomy needs a closed surface");
  require_surface_space(h, g);
  return h.cocycle().evaluate(g.pushed_cycle());
}

FiberElement evaluate(const Hqft& h, const XSurface& g, const FiberElement& e, bool selfcheck) {
  require_surface_space(h, g);
  const MappedCircles in = g.input_object();
  if (!(e.object == in))
    throw ObjectMismatch("fiber element lives over " + e.object.to_string() + " but the surface starts at " +
                         in.to_string());
  const CoeffElement value = h.cocycle().evaluate(g.pushed_cycle());
  if (selfcheck) {
    const CoeffElement other = h.cocycle().evaluate(push_forward(g.map, second_relative_cycle(g)));
    if (!(other == value))
      throw InvariantViolation("selfcheck: relative cycles give " + value.to_string() + " and " + other.to_string());
  }
  return FiberElement{g.output_object(), e.phase + value};
}

GroupHom HolonomyCharacter::as_hom() const { return hom_values(h2, coeff, values); }

std::string HolonomyCharacter::to_string() const {
  std::ostringstream os;
  for (size_t i = 0; i < values.size(); ++i) os << h2.labels()[i] << ": " << values[i].to_string() << '\n';
  return os.str();
}

HolonomyCharacter holonomy_character(const Hqft& h, const HomologyGroup& h2) {
  if (h2.degree != 2) throw DimensionError("holonomy_character needs H_2");
  HolonomyCharacter out{h2.group, h.coeff(), {}};
  for (const auto& z : h2.generators) out.values.push_back(holonomy(h, surface_from_cycle(h.base(), z)));
  hom_values(h2.group, h.coeff(), out.values);
  return out;
}

HolonomyCharacter holonomy_character(const Hqft& h) { return holonomy_character(h, homology(h.base(), 2)); }

FiberElement FiberIso::operator()(const FiberElement& e) const {
  FiberElement src = source.element(e.object, e.phase);
  return target.element(src.object, src.phase + shift(src.object));
}

FiberIso coboundary_iso(const Hqft& h, const Cochain& f) {
  if (f.degree() != 1) throw DimensionError("coboundary_iso needs a 1-cochain");
  if (!(f.group() == h.coeff())) throw DomainMismatch("coboundary_iso: cochain and theory use different groups");
  Hqft target(h.cocycle() - coboundary(f));
  return FiberIso{h, target, [f](const MappedCircles& object) { return f.evaluate(object.canonical_cycle()); }};
}

std::optional<FiberIso> trivializing_iso(const Hqft& h) {
  auto f = coboundary_witness(h.cocycle());
  if (!f) return std::nullopt;
  return coboundary_iso(h, *f);
}

std::optional<std::string> naturality_defect(const FiberIso& psi, const XSurface& g, const FiberElement& e) {
  const FiberElement left = psi(evaluate(psi.source, g, e));
  const FiberElement right = evaluate(psi.target, g, psi(e));
  if (left == right) return std::nullopt;
  return "psi(g(e)) = " + left.to_string() + " but g(psi(e)) = " + right.to_string();
}

std::optional<std::string> monoidality_defect(const FiberIso& psi, const FiberElement& a, const FiberElement& b) {
  const FiberElement left = psi(tensor(a, b));
  const FiberElement right = tensor(psi(a), psi(b));
  if (left == right) return std::nullopt;
  return "psi(a (x) b) = " + left.to_string() + " but psi(a) (x) psi(b) = " + right.to_string();
}

}  // namespace hqft
