#pragma once

#include "hqft/report.hpp"
#include "hqft/turaev.hpp"

#include <cstdint>

namespace hqft {

struct SuiteOptions {
  std::uint64_t seed = 1;
  int samples = 20;
  bool selfcheck = false;
};

/// Gluing, disjoint union, swap, trace and reflection identities, surgery and
/// homology invariance of holonomy, on random cobordisms and cocycles.
Report verify_hqft_properties(const ComplexPtr& X, const CoeffGroup& A, const SuiteOptions& options = {});

/// Q/Z against Z/2: with divisible coefficients every class is detected by
/// holonomy; with Z/2 a theory with zero holonomy may still be non-trivial.
Report verify_divisibility(const ComplexPtr& X, const SuiteOptions& options = {});

/// Smith normal form and integer solving on random small matrices.
Report verify_linalg(const SuiteOptions& options = {});

}  // namespace hqft
