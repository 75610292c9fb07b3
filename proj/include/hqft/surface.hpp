#pragma once

#include "hqft/complex.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace hqft {

/// Ordered list of circles mapped into X. Circle i has images[i].size()
/// vertices, joined cyclically; consecutive images must be equal or adjacent.
struct MappedCircles {
  ComplexPtr space;
  std::vector<std::vector<int>> images;

  size_t size() const { return images.size(); }
  /// Push-forward of the sum of the standard fundamental cycles of the circles.
  Chain canonical_cycle() const;
  bool operator==(const MappedCircles& o) const { return images == o.images; }
  std::string to_string() const;
};

/// Throws InvariantViolation if a circle is shorter than 3 or steps along a non-edge.
void validate(const MappedCircles& object);

MappedCircles disjoint_union(const MappedCircles& a, const MappedCircles& b);

/// Triangulated oriented surface mapped into X. `cycle` covers each triangle
/// once with sign +1 or -1 and satisfies
///   boundary(cycle) = sum(input circles) - sum(output circles).
struct XSurface {
  ComplexPtr surface;
  Chain cycle{2};
  std::vector<std::vector<int>> inputs, outputs;
  SimplicialMap map;

  const ComplexPtr& space() const { return map.codomain; }
  bool closed() const { return inputs.empty() && outputs.empty(); }
  MappedCircles input_object() const;
  MappedCircles output_object() const;
  /// Push-forward of the fundamental or relative cycle into X.
  Chain pushed_cycle() const { return push_forward(map, cycle); }
};

/// Accumulates oriented triangles over a vertex list, then builds an XSurface.
class SurfaceBuilder {
 public:
  explicit SurfaceBuilder(ComplexPtr space) : space_(std::move(space)) {}

  int add_vertex(int image);
  void add_triangle(int a, int b, int c);
  /// Triangles of the strip between two circles, stepping 'B' along the
  /// bottom or 'T' along the top. Its boundary is bottom - top.
  void add_zipper(const std::vector<int>& bottom, const std::vector<int>& top, const std::string& steps);
  void add_input(std::vector<int> circle) { inputs_.push_back(std::move(circle)); }
  void add_output(std::vector<int> circle) { outputs_.push_back(std::move(circle)); }
  int image(int v) const { return images_.at(static_cast<size_t>(v)); }

  /// Builds and verifies the surface.
  XSurface build() const;

 private:
  ComplexPtr space_;
  std::vector<int> images_;
  std::vector<std::array<int, 3>> triangles_;
  std::vector<std::vector<int>> inputs_, outputs_;
};

/// Interleaved zipper schedule with p bottom steps and q top steps.
std::string balanced_schedule(size_t p, size_t q);

/// First violated surface invariant, as a readable message.
std::optional<std::string> diagnose(const XSurface& g);
/// Throws InvariantViolation with the diagnose message.
void verify(const XSurface& g);

int euler_characteristic(const XSurface& g);
int component_count(const XSurface& g);
/// Genus of a closed connected surface.
int genus(const XSurface& g);

XSurface empty_surface(const ComplexPtr& space);
XSurface disjoint_union(const XSurface& a, const XSurface& b);
XSurface reverse(const XSurface& g);
/// Glues the outputs of a to the inputs of b. A thin collar is inserted when
/// direct identification would not give a simplicial surface.
XSurface glue(const XSurface& a, const XSurface& b);
/// Closes an endomorphism by gluing its outputs back onto its inputs.
XSurface close(const XSurface& g);
/// Reorders input and output circles: new position i holds old position perm[i].
XSurface permute_boundary(const XSurface& g, const std::vector<size_t>& input_perm,
                          const std::vector<size_t>& output_perm);

/// Circle x [0,1] with `layers` zipper strips, mapped through the circle projection.
XSurface identity_cylinder(const MappedCircles& object, int layers = 1);
/// Cylinder from a + b to b + a.
XSurface swap_cylinder(const MappedCircles& a, const MappedCircles& b);
/// Cylinder from a single circle to the same circle with image p repeated.
XSurface insertion_cylinder(const MappedCircles& object, size_t circle, size_t position);
/// Boundary of a tetrahedron mapped to one vertex.
XSurface constant_sphere(const ComplexPtr& space, int vertex);
/// Constant circle of length 3 at a vertex.
MappedCircles constant_circle(const ComplexPtr& space, int vertex);
/// Cone over a single circle with apex mapped to `apex`; the circle is an input.
XSurface cone_cap(const MappedCircles& circle, int apex);
/// Reverse of cone_cap: the circle is an output.
XSurface cone_cup(const MappedCircles& circle, int apex);
/// Cobordism from `object` (one circle) to object + constant circle at its first image.
XSurface pants(const MappedCircles& object);

/// Replaces an interior triangle by a subdivided patch whose inner (side n)
/// grid is mapped to the image of the triangle's first vertex. The pushed
/// forward cycle does not change.
XSurface insert_constant_patch(const XSurface& g, const Simplex& triangle, int side);
/// Triangles of the constant inner grid created by the last insert_constant_patch, if it is traced.
struct PatchOutcome {
  XSurface surface;
  std::vector<Simplex> grid;
};
PatchOutcome insert_constant_patch_traced(const XSurface& g, const Simplex& triangle, int side);

/// Disk triangulation used to cap a circle during annulus removal.
/// Non-negative ids refer to surface vertices on the circle, negative ids to fresh interior vertices.
struct DiskPatch {
  std::vector<std::array<int, 3>> triangles;
};

struct SurgerySite {
  enum class Kind { TwoDisks, Annulus };
  Kind kind = Kind::TwoDisks;
  /// TwoDisks: two triangle sets; Annulus: one triangle set.
  std::vector<std::vector<Simplex>> regions;
  /// Optional caps for an annulus, one per boundary circle in ascending order of the smallest vertex.
  std::vector<DiskPatch> caps;
};

struct SurgeryOutcome {
  XSurface surface;
  SurgerySite inverse;
  /// Old vertex id to new id, or -1 for removed vertices.
  std::vector<int> old_to_new;
};

/// Validates the site, returning the point it maps to; throws InvalidSite otherwise.
int validate_site(const XSurface& g, const SurgerySite& site);
XSurface local_surgery(const XSurface& g, const SurgerySite& site);
SurgeryOutcome local_surgery_traced(const XSurface& g, const SurgerySite& site);

/// Vertex bijection a -> b preserving triangles, cycle, boundary circles and map.
std::optional<std::vector<int>> find_isomorphism(const XSurface& a, const XSurface& b);

/// Closed surface whose pushed-forward fundamental cycle equals y exactly.
XSurface surface_from_cycle(const ComplexPtr& X, const Chain& y);
/// Object whose canonical cycle equals the 1-cycle z exactly.
MappedCircles object_from_cycle(const ComplexPtr& X, const Chain& z);

/// Renumbers vertices to 0..n-1 in order of first use, dropping unused ones.
XSurface compact(const XSurface& g, std::vector<int>* old_to_new = nullptr);

}  // namespace hqft
