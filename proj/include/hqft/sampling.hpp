#pragma once

#include "hqft/homology.hpp"
#include "hqft/surface.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <utility>

namespace hqft {

/// Random objects, cocycles and surfaces for property checks. Deterministic for a given seed.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}
  /// HQFT_SEED when set, otherwise `fallback`.
  static std::uint64_t seed_from_env(std::uint64_t fallback = 1);

  std::mt19937_64& engine() { return engine_; }
  int uniform(int lo, int hi);
  bool coin(double p = 0.5);
  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<size_t>(uniform(0, static_cast<int>(v.size()) - 1))];
  }

  CoeffElement element(const CoeffGroup& A);
  Cochain cochain(const ComplexPtr& X, int degree, const CoeffGroup& A);
  /// Random degree-2 cocycle: a random class plus a random coboundary.
  Cochain cocycle(const ComplexPtr& X, const CoeffGroup& A);

  /// Closed edge walk, padded with repeated vertices to length at least 3.
  std::vector<int> loop(const ComplexPtr& X);
  MappedCircles object(const ComplexPtr& X, int max_circles = 2);
  /// Circle in the link of a vertex together with that vertex, so the cone fits in X.
  std::optional<std::pair<std::vector<int>, int>> fan(const ComplexPtr& X);

  XSurface closed_surface(const ComplexPtr& X);
  /// Cobordism starting at `from` built from cylinders, caps, pants, swaps and surgeries.
  XSurface cobordism(const MappedCircles& from, int steps = 3);
  /// Endomorphism of `object`.
  XSurface endomorphism(const MappedCircles& object);
  /// One random local surgery through freshly inserted constant patches.
  XSurface surgery(const XSurface& g);

 private:
  const CohomologyGroup& cohomology_of(const ComplexPtr& X, const CoeffGroup& A);
  const IntMatrix& integer_cocycles(const ComplexPtr& X);
  const HomologyGroup& h2_of(const ComplexPtr& X);
  XSurface closed_piece(const ComplexPtr& X);

  std::mt19937_64 engine_;
  std::map<std::pair<ComplexPtr, std::string>, std::shared_ptr<CohomologyGroup>> cohomology_;
  std::map<ComplexPtr, IntMatrix> integer_cocycles_;
  std::map<ComplexPtr, std::shared_ptr<HomologyGroup>> h2_;
};

}  // namespace hqft
