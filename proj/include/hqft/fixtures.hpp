#pragma once

#include "hqft/complex.hpp"

#include <string>
#include <vector>

namespace hqft::fixtures {

ComplexPtr point();
/// Boundary of a triangle.
ComplexPtr circle();
/// Boundary of a tetrahedron.
ComplexPtr sphere();
/// Seven-vertex torus.
ComplexPtr torus();
/// Six-vertex projective plane.
ComplexPtr projective_plane();
/// Projective plane, a circle and a sphere sharing vertex 0.
/// H_1 = Z/2 + Z and H_2 = Z.
ComplexPtr wedge();
/// Two solid tetrahedra sharing a face.
ComplexPtr ball();

/// Looks a fixture up by name: point, circle, sphere, torus, rp2, wedge, ball.
ComplexPtr by_name(const std::string& name);
std::vector<std::string> names();

}  // namespace hqft::fixtures
