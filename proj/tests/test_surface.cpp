#include "hqft/errors.hpp"
#include "hqft/homology.hpp"
#include "hqft/surface.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace hqft;

namespace {

MappedCircles torus_loop() { return MappedCircles{fixtures::torus(), {{0, 1, 3}}}; }

XSurface torus_identity() {
  const auto T = fixtures::torus();
  return surface_from_cycle(T, homology(T, 2).generators[0]);
}

}  // namespace

TEST_CASE("constant sphere and cones") {
  const auto T = fixtures::torus();
  const XSurface s = constant_sphere(T, 4);
  CHECK_FALSE(diagnose(s));
  CHECK(euler_characteristic(s) == 2);
  CHECK(genus(s) == 0);
  CHECK(s.pushed_cycle().is_zero());
  const XSurface cap = cone_cap(torus_loop(), 0);
  CHECK(cap.inputs.size() == 1);
  CHECK(cap.outputs.empty());
  CHECK(euler_characteristic(cap) == 1);
}

TEST_CASE("cylinders, gluing and closing") {
  const auto loop = torus_loop();
  const XSurface c1 = identity_cylinder(loop, 1);
  const XSurface c2 = identity_cylinder(loop, 2);
  CHECK(euler_characteristic(c1) == 0);
  CHECK(c1.input_object() == loop);
  CHECK(c1.output_object() == loop);
  const XSurface g = glue(c1, c2);
  CHECK_FALSE(diagnose(g));
  CHECK(g.input_object() == loop);
  CHECK(g.output_object() == loop);
  CHECK(euler_characteristic(g) == 0);
  const XSurface t = close(g);
  CHECK(t.closed());
  CHECK(genus(t) == 1);
  CHECK(component_count(t) == 1);
  CHECK(t.pushed_cycle().is_zero());
}

TEST_CASE("insertion cylinder lengthens the circle") {
  const XSurface g = insertion_cylinder(torus_loop(), 0, 1);
  CHECK_FALSE(diagnose(g));
  CHECK(g.output_object().images[0].size() == 4);
  CHECK(euler_characteristic(g) == 0);
}

TEST_CASE("pants and swap") {
  const auto loop = torus_loop();
  const XSurface p = pants(loop);
  CHECK_FALSE(diagnose(p));
  CHECK(p.inputs.size() == 1);
  CHECK(p.outputs.size() == 2);
  CHECK(euler_characteristic(p) == -1);
  CHECK(component_count(p) == 1);
  const MappedCircles other{fixtures::torus(), {{2, 3, 5}}};
  const XSurface s = swap_cylinder(loop, other);
  CHECK(s.input_object() == disjoint_union(loop, other));
  CHECK(s.output_object() == disjoint_union(other, loop));
}

TEST_CASE("reverse swaps the boundary and negates the cycle") {
  const XSurface g = insertion_cylinder(torus_loop(), 0, 0);
  const XSurface r = reverse(g);
  CHECK(r.input_object() == g.output_object());
  CHECK(r.output_object() == g.input_object());
  CHECK(r.pushed_cycle() == -g.pushed_cycle());
  CHECK(find_isomorphism(reverse(r), g));
}

TEST_CASE("surface from a cycle realises the fundamental class") {
  const auto T = fixtures::torus();
  const XSurface g = torus_identity();
  CHECK(g.closed());
  CHECK(genus(g) == 1);
  CHECK(g.pushed_cycle() == homology(T, 2).generators[0]);
  const Chain twice = Integer(2) * homology(T, 2).generators[0];
  const XSurface h = surface_from_cycle(T, twice);
  CHECK_FALSE(diagnose(h));
  CHECK(h.pushed_cycle() == twice);
  CHECK(surface_from_cycle(T, Chain(2)).closed());
  Chain not_cycle(2);
  not_cycle.add(Simplex{0, 1, 3}, 1);
  CHECK_THROWS_AS(surface_from_cycle(T, not_cycle), Error);
}

TEST_CASE("surface from a cycle handles a wedge of spheres") {
  const auto W = fixtures::wedge();
  const auto H2 = homology(W, 2);
  const Chain y = Integer(3) * H2.generators[0];
  const XSurface g = surface_from_cycle(W, y);
  CHECK_FALSE(diagnose(g));
  CHECK(g.pushed_cycle() == y);
}

TEST_CASE("local surgery adds a handle and can be undone") {
  const XSurface g = torus_identity();
  std::vector<Simplex> tris;
  for (const auto& [s, c] : g.cycle.terms()) tris.push_back(s);
  Simplex a = tris[0], b;
  for (const auto& s : tris)
    if (s != a && g.map(s.vertices[0]) == g.map(a.vertices[0])) {
      b = s;
      break;
    }
  REQUIRE(b.dim() == 2);
  auto p1 = insert_constant_patch_traced(g, a, 1);
  auto p2 = insert_constant_patch_traced(p1.surface, b, 2);
  CHECK(p2.surface.pushed_cycle() == g.pushed_cycle());
  const SurgerySite site{SurgerySite::Kind::TwoDisks, {p1.grid, p2.grid}, {}};
  CHECK(validate_site(p2.surface, site) >= 0);
  const auto out = local_surgery_traced(p2.surface, site);
  CHECK(euler_characteristic(out.surface) == euler_characteristic(g) - 2);
  CHECK(out.surface.pushed_cycle() == g.pushed_cycle());
  const XSurface back = local_surgery(out.surface, out.inverse);
  CHECK(euler_characteristic(back) == euler_characteristic(g));
  CHECK(back.pushed_cycle() == g.pushed_cycle());
}

TEST_CASE("invalid sites are rejected") {
  const XSurface g = torus_identity();
  std::vector<Simplex> tris;
  for (const auto& [s, c] : g.cycle.terms()) tris.push_back(s);
  const SurgerySite site{SurgerySite::Kind::TwoDisks, {{tris[0]}, {tris[1]}}, {}};
  CHECK_THROWS_AS(local_surgery(g, site), InvalidSite);
  CHECK_THROWS_AS(local_surgery(g, SurgerySite{SurgerySite::Kind::TwoDisks, {{}, {}}, {}}), InvalidSite);
}

TEST_CASE("an edge in three triangles is diagnosed") {
  const auto T = fixtures::torus();
  SurfaceBuilder b(T);
  for (int x : {0, 1, 3, 3, 3}) b.add_vertex(x);
  b.add_triangle(0, 1, 2);
  b.add_triangle(1, 0, 3);
  b.add_triangle(0, 1, 4);
  CHECK_THROWS_WITH_AS(b.build(), doctest::Contains("edge (0,1) lies in 3 triangles"), InvariantViolation);
}

TEST_CASE("isomorphism search") {
  const XSurface g = torus_identity();
  const auto iso = find_isomorphism(g, g);
  REQUIRE(iso);
  CHECK(iso->size() == static_cast<size_t>(g.surface->vertex_count()));
  CHECK_FALSE(find_isomorphism(g, constant_sphere(g.space(), 0)));
}

TEST_CASE("objects from cycles") {
  const auto T = fixtures::torus();
  const Chain z = torus_loop().canonical_cycle();
  const MappedCircles m = object_from_cycle(T, z);
  CHECK(m.canonical_cycle() == z);
  CHECK(balanced_schedule(3, 5).size() == 8);
}
