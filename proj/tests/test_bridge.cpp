#include "hqft/bridge.hpp"
#include "hqft/errors.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace hqft;

namespace {

std::uint64_t z2_mask(const Cochain& theta) {
  std::uint64_t mask = 0;
  for (size_t t = 0; t < theta.values().size(); ++t)
    if (!theta.values()[t].is_zero()) mask |= std::uint64_t{1} << t;
  return mask;
}

}  // namespace

TEST_CASE("functors from extensions") {
  const FgAbGroup G({2}, 0);
  const CoeffGroup A = CoeffGroup::cyclic(4);
  const ExtGroup E = ext_group(G, A);
  const MonFunctor split = functor_from_extension(extension_from_class(G, A, E.classes()[0]));
  for (const auto& x : G.elements())
    for (const auto& y : G.elements()) CHECK(split.twist(x, y).is_zero());
  const MonFunctor twisted = functor_from_extension(extension_from_class(G, A, E.classes()[1]));
  CHECK_FALSE(axiom_violation(twisted));
  CHECK(twisted.twist(G.generator(0), G.generator(0)) == A.parse_element("1"));
  CHECK(twisted.structure(G.generator(0), G.generator(0), A.parse_element("1"), A.parse_element("2")) ==
        A.parse_element("0"));
  CHECK(extension_from_functor(twisted).ext_class() == E.classes()[1]);
  CHECK(extension_from_functor(split).ext_class().is_zero());
}

TEST_CASE("broken axioms are detected") {
  const FgAbGroup G({3}, 0);
  const CoeffGroup A = CoeffGroup::cyclic(3);
  MonFunctor asym{G, A, [A](const IntVector& x, const IntVector& y) {
                    return x(0) == 1 && y(0) == 2 ? A.parse_element("1") : A.zero();
                  }};
  CHECK_THROWS_WITH_AS(extension_from_functor(asym), doctest::Contains("symmetry"), NotMonoidalFunctor);
  MonFunctor no_unit{G, A, [A](const IntVector&, const IntVector&) { return A.parse_element("1"); }};
  CHECK_THROWS_WITH_AS(extension_from_functor(no_unit), doctest::Contains("unit"), NotMonoidalFunctor);
}

TEST_CASE("cycle lifts project to homology classes") {
  const auto W = fixtures::wedge();
  const auto H1 = homology(W, 1);
  const CoeffGroup A = CoeffGroup::cyclic(4);
  const ExtGroup E = ext_group(H1.group, A);
  const Extension ext = extension_from_class(H1.group, A, E.classes()[1]);
  const CycleLift lift(W, H1, ext);
  for (Eigen::Index k = 0; k < lift.cycle_basis().cols(); ++k) {
    const Chain z = from_vector(*W, 1, lift.cycle_basis().col(k));
    CHECK(lift(z).x == H1.class_of(z));
  }
  const ExtensionTheory T(lift);
  const MappedCircles m{W, {{0, 6, 7}}};
  CHECK(T.psi(T.theory.unit(m)).x == T.object_class(m));
}

TEST_CASE("iota on RP2 against brute force") {
  const auto P = fixtures::projective_plane();
  const CoeffGroup Z2 = CoeffGroup::cyclic(2);
  const auto H1 = homology(P, 1);
  const ExtGroup E = ext_group(H1.group, Z2);
  REQUIRE(E.order() == 2);
  const auto coboundaries = oracle::z2_coboundaries(test_support::oracle_complex(*P));
  const Cochain split = iota(P, extension_from_class(H1.group, Z2, E.classes()[0]));
  const Cochain twisted = iota(P, extension_from_class(H1.group, Z2, E.classes()[1]));
  CHECK(coboundaries.count(z2_mask(split)) == 1);
  CHECK(coboundaries.count(z2_mask(twisted)) == 0);
  CHECK_FALSE(cocycle_violation(twisted));
}

TEST_CASE("iota vanishes in cohomology for free H_1 and divisible coefficients") {
  const auto T = fixtures::torus();
  const auto H1 = homology(T, 1);
  const CoeffGroup Z3 = CoeffGroup::cyclic(3);
  const ExtGroup E = ext_group(H1.group, Z3);
  REQUIRE(E.order() == 1);
  CHECK(coboundary_witness(iota(T, extension_from_class(H1.group, Z3, E.zero()))));

  const auto W = fixtures::wedge();
  const auto W1 = homology(W, 1);
  const CoeffGroup QZ = CoeffGroup::rational_circle();
  const ExtGroup EQ = ext_group(W1.group, QZ);
  CHECK(EQ.order() == 1);
  const Extension e(W1.group, QZ, [QZ](const IntVector& x, const IntVector& y) {
    return x(0) + y(0) >= 2 ? QZ.parse_element("1/6") : QZ.zero();
  });
  CHECK(coboundary_witness(iota(W, e)));
}

TEST_CASE("iota is additive up to coboundaries") {
  const auto W = fixtures::wedge();
  const auto H1 = homology(W, 1);
  const CoeffGroup A = CoeffGroup::cyclic(4);
  const ExtGroup E = ext_group(H1.group, A);
  for (const auto& a : E.classes())
    for (const auto& b : E.classes()) {
      const Cochain sum = iota(W, extension_from_class(H1.group, A, E.add(a, b)));
      const Cochain parts = iota(W, extension_from_class(H1.group, A, a)) + iota(W, extension_from_class(H1.group, A, b));
      CHECK(coboundary_witness(sum - parts));
    }
}

TEST_CASE("diagram report on RP2") {
  const Report r = verify_cohomology_diagram(fixtures::projective_plane(), CoeffGroup::cyclic(2));
  CHECK(r.passed());
  bool counted = false;
  for (const auto& item : r.items)
    if (item.check == "|H^2| = |Hom| * |Ext|") {
      counted = true;
      CHECK(item.actual == "2");
    }
  CHECK(counted);
}
