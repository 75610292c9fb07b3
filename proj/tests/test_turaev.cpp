#include "hqft/errors.hpp"
#include "hqft/homology.hpp"
#include "hqft/turaev.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace hqft;

namespace {

const CoeffGroup QZ = CoeffGroup::rational_circle();

/// Cocycle on the torus pairing to `value` with the H_2 generator.
Cochain torus_theta(const std::string& value) {
  const auto T = fixtures::torus();
  const Chain fund = homology(T, 2).generators[0];
  const auto& [s, c] = *fund.terms().begin();
  Cochain theta(T, 2, QZ);
  theta.set(s, c > 0 ? QZ.parse_element(value) : -QZ.parse_element(value));
  return theta;
}

XSurface torus_identity() {
  const auto T = fixtures::torus();
  return surface_from_cycle(T, homology(T, 2).generators[0]);
}

MappedCircles torus_loop() { return MappedCircles{fixtures::torus(), {{0, 1, 3}}}; }

}  // namespace

TEST_CASE("holonomy on the torus") {
  const Hqft h(torus_theta("1/3"));
  const XSurface g = torus_identity();
  CHECK(holonomy(h, g) == QZ.parse_element("1/3"));
  CHECK(holonomy(h, reverse(g)) == QZ.parse_element("2/3"));
  CHECK(holonomy(h, disjoint_union(g, reverse(g))).is_zero());
  CHECK(holonomy(h, disjoint_union(g, g)) == QZ.parse_element("2/3"));
  CHECK(holonomy(h, constant_sphere(fixtures::torus(), 2)).is_zero());
  CHECK(holonomy(trivial(fixtures::torus(), QZ), g).is_zero());
  CHECK_THROWS_AS(holonomy(h, identity_cylinder(torus_loop())), PreconditionError);
}

TEST_CASE("the theory rejects non-cocycles") {
  Cochain f(fixtures::ball(), 2, QZ);
  f.set(Simplex{0, 1, 2}, QZ.parse_element("1/2"));
  CHECK_THROWS_AS(Hqft{f}, NotACocycle);
  CHECK_THROWS_AS(Hqft{Cochain(fixtures::torus(), 1, QZ)}, Error);
}

TEST_CASE("holonomy character and group structure") {
  const Hqft h(torus_theta("1/3"));
  CHECK(holonomy_character(h).values == std::vector<CoeffElement>{QZ.parse_element("1/3")});
  CHECK(holonomy_character(h).to_string() == "g0: 1/3\n");
  CHECK(holonomy_character(tensor(h, h)).values == std::vector<CoeffElement>{QZ.parse_element("2/3")});
  CHECK(holonomy_character(tensor(h, inverse(h))).values == std::vector<CoeffElement>{QZ.zero()});
  CHECK(holonomy_character(tensor(trivial(h.base(), QZ), h)) == holonomy_character(h));
  const Hqft other(Cochain(fixtures::sphere(), 2, QZ));
  CHECK_THROWS_AS(tensor(h, other), DomainMismatch);
}

TEST_CASE("evaluation on cylinders") {
  const Hqft h(torus_theta("1/3"));
  const auto loop = torus_loop();
  const FiberElement e = h.element(loop, QZ.parse_element("1/7"));
  CHECK(evaluate(h, identity_cylinder(loop, 2), e, true) == e);
  const XSurface g = insertion_cylinder(loop, 0, 0);
  const FiberElement out = evaluate(h, g, e, true);
  CHECK(out.object == g.output_object());
  CHECK(evaluate(h, glue(g, reverse(g)), e, true) == e);
  CHECK(evaluate(h, reverse(g), out) == e);
  const FiberElement wrong = h.element(MappedCircles{fixtures::torus(), {{0, 1, 5}}}, QZ.zero());
  CHECK_THROWS_AS(evaluate(h, g, wrong), ObjectMismatch);
}

TEST_CASE("closing an endomorphism adds the closed holonomy") {
  const Hqft h(torus_theta("1/3"));
  const auto loop = torus_loop();
  const XSurface g = glue(pants(loop), reverse(pants(loop)));
  const XSurface endo = disjoint_union(g, torus_identity());
  REQUIRE(endo.input_object() == loop);
  const FiberElement e = h.element(loop, QZ.parse_element("1/4"));
  const FiberElement r = evaluate(h, endo, e, true);
  CHECK(r.object == loop);
  CHECK(r.phase == e.phase + holonomy(h, close(endo)));
  CHECK(holonomy(h, close(endo)) == QZ.parse_element("1/3"));
}

TEST_CASE("coboundary isomorphisms") {
  const Hqft h(torus_theta("1/3"));
  const auto T = h.base();
  Cochain zero(T, 1, QZ);
  const FiberIso id = coboundary_iso(h, zero);
  const FiberElement e = h.element(torus_loop(), QZ.parse_element("1/5"));
  CHECK(id(e) == e);

  Cochain f(T, 1, QZ);
  f.set(Simplex{0, 1}, QZ.parse_element("1/4"));
  f.set(Simplex{1, 3}, QZ.parse_element("1/6"));
  const FiberIso psi = coboundary_iso(h, f);
  CHECK(psi.target.cocycle() == h.cocycle() - coboundary(f));
  CHECK(holonomy(psi.target, torus_identity()) == holonomy(h, torus_identity()));
  const XSurface g = insertion_cylinder(torus_loop(), 0, 2);
  CHECK_FALSE(naturality_defect(psi, g, e));
  const FiberElement b = h.element(MappedCircles{T, {{2, 3, 5}}}, QZ.parse_element("1/2"));
  CHECK_FALSE(monoidality_defect(psi, e, b));

  CHECK_FALSE(trivializing_iso(h));
  auto triv = trivializing_iso(Hqft(coboundary(f)));
  REQUIRE(triv);
  CHECK(triv->target.cocycle().is_zero());
}

TEST_CASE("RP2 over Z/2: zero character without trivialisation") {
  const auto P = fixtures::projective_plane();
  const auto C = cohomology(P, CoeffGroup::cyclic(2), 2);
  const auto reps = C.representatives();
  REQUIRE(reps.size() == 2);
  const Hqft h(reps[1]);
  CHECK(holonomy_character(h).values.empty());
  CHECK_FALSE(trivializing_iso(h));
  const auto coboundaries = oracle::z2_coboundaries(test_support::oracle_complex(*P));
  std::uint64_t mask = 0;
  for (size_t t = 0; t < reps[1].values().size(); ++t)
    if (!reps[1].values()[t].is_zero()) mask |= std::uint64_t{1} << t;
  CHECK(coboundaries.count(mask) == 0);
}
