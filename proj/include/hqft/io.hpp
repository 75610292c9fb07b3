#pragma once

#include "hqft/homology.hpp"
#include "hqft/surface.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace hqft::io {

using nlohmann::json;

/// Parses a JSON file; throws MalformedInput naming the path on failure.
json read_json_file(const std::string& path);

/// {"vertices": n, "maximal_simplices": [[v, ...], ...]}
ComplexPtr complex_from_json(const json& j);
json to_json(const SimplicialComplex& X);
ComplexPtr load_complex(const std::string& path);

/// {"dim": k, "terms": [{"simplex": [v, ...], "coeff": c}, ...]}
Chain chain_from_json(const json& j, const SimplicialComplex& X);
json to_json(const Chain& c);

/// {"degree": k, "group": "q/z", "values": [{"simplex": [...], "value": "1/3"}, ...]}
Cochain cochain_from_json(const json& j, const ComplexPtr& X);
json to_json(const Cochain& f);

/// {"vertex_map": [w0, w1, ...]}
SimplicialMap map_from_json(const json& j, const ComplexPtr& domain, const ComplexPtr& codomain);

/// Surface bundle: {"complex": ..., "map": ..., "cycle": ..., "inputs": [[...]], "outputs": [[...]]}.
/// Each of complex, map and cycle is either inline JSON or a path relative to `base_dir`.
/// The surface is verified after loading.
XSurface surface_from_json(const json& j, const ComplexPtr& X, const std::string& base_dir = ".");
json to_json(const XSurface& g);
XSurface load_surface(const std::string& path, const ComplexPtr& X);

/// {"circles": [[x0, x1, ...], ...]}
MappedCircles object_from_json(const json& j, const ComplexPtr& X);
json to_json(const MappedCircles& m);

}  // namespace hqft::io
