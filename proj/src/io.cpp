#include "hqft/io.hpp"

#include "hqft/errors.hpp"

#include <filesystem>
#include <fstream>
#include <set>

namespace hqft::io {

namespace {

template <typename F>
auto guarded(const std::string& what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw MalformedInput(what + ": " + e.what());
  }
}

const json& field(const json& j, const char* key, const std::string& what) {
  if (!j.is_object() || !j.contains(key)) throw MalformedInput(what + ": missing field '" + key + "'");
  return j.at(key);
}

std::vector<int> int_list(const json& j, const std::string& what) {
  if (!j.is_array()) throw MalformedInput(what + ": expected an array of integers");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw MalformedInput(what + ": expected an array of integers");
    out.push_back(v.get<int>());
  }
  return out;
}

std::string tuple_string(const std::vector<int>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

OrientedSimplex simplex_in(const json& j, const SimplicialComplex& X, int dim, const std::string& what) {
  const auto v = int_list(j, what);
  auto o = OrientedSimplex::from_tuple(v);
  if (!o) throw MalformedInput(what + ": simplex " + tuple_string(v) + " repeats a vertex");
  if (o->simplex.dim() != dim)
    throw MalformedInput(what + ": simplex " + tuple_string(v) + " does not have dimension " + std::to_string(dim));
  if (!X.contains(o->simplex)) throw MalformedInput(what + ": simplex " + to_string(o->simplex) + " is not in the complex");
  return *o;
}

Integer integer_value(const json& j, const std::string& what) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw MalformedInput(what + ": coefficient " + j.dump() + " is not an integer");
}

json simplex_json(const Simplex& s) { return s.vertices; }

json part(const json& j, const std::string& base_dir) {
  if (j.is_string()) return read_json_file((std::filesystem::path(base_dir) / j.get<std::string>()).string());
  return j;
}

std::vector<std::vector<int>> circles_from(const json& j, const std::string& what) {
  std::vector<std::vector<int>> out;
  if (j.is_null()) return out;
  if (!j.is_array()) throw MalformedInput(what + ": expected a list of circles");
  for (const auto& c : j) out.push_back(int_list(c, what));
  return out;
}

}  // namespace

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw MalformedInput(path + ": " + e.what());
  }
}

ComplexPtr complex_from_json(const json& j) {
  return guarded("complex", [&] {
    std::optional<int> n;
    if (j.contains("vertices")) {
      if (!j.at("vertices").is_number_integer() || j.at("vertices").get<int>() < 0)
        throw MalformedInput("complex: 'vertices' must be a non-negative integer");
      n = j.at("vertices").get<int>();
    }
    const json& m = field(j, "maximal_simplices", "complex");
    if (!m.is_array()) throw MalformedInput("complex: 'maximal_simplices' must be an array");
    std::vector<std::vector<int>> simplices;
    for (const auto& s : m) simplices.push_back(int_list(s, "complex"));
    for (const auto& s : simplices)
      for (int v : s)
        if (n && v >= *n)
          throw MalformedInput("complex: simplex " + tuple_string(s) + " uses vertex " + std::to_string(v) +
                               " but only " + std::to_string(*n) + " vertices are declared");
    return build_complex(simplices, n);
  });
}

json to_json(const SimplicialComplex& X) {
  json m = json::array();
  for (const auto& s : X.maximal_simplices()) m.push_back(simplex_json(s));
  return {{"vertices", X.vertex_count()}, {"maximal_simplices", m}};
}

ComplexPtr load_complex(const std::string& path) { return complex_from_json(read_json_file(path)); }

Chain chain_from_json(const json& j, const SimplicialComplex& X) {
  return guarded("chain", [&] {
    const json& d = field(j, "dim", "chain");
    if (!d.is_number_integer()) throw MalformedInput("chain: 'dim' must be an integer");
    const int dim = d.get<int>();
    if (dim < 0) throw MalformedInput("chain: 'dim' must be non-negative");
    Chain c(dim);
    const json& terms = field(j, "terms", "chain");
    if (!terms.is_array()) throw MalformedInput("chain: 'terms' must be an array");
    for (const auto& t : terms) {
      OrientedSimplex s = simplex_in(field(t, "simplex", "chain term"), X, dim, "chain");
      c.add(s, integer_value(field(t, "coeff", "chain term"), "chain"));
    }
    return c;
  });
}

json to_json(const Chain& c) {
  json terms = json::array();
  for (const auto& [s, k] : c.terms()) {
    json coeff = k.str().size() < 16 ? json(static_cast<long long>(k)) : json(k.str());
    terms.push_back({{"simplex", simplex_json(s)}, {"coeff", coeff}});
  }
  return {{"dim", c.dim()}, {"terms", terms}};
}

Cochain cochain_from_json(const json& j, const ComplexPtr& X) {
  return guarded("cochain", [&] {
    const json& d = field(j, "degree", "cochain");
    if (!d.is_number_integer() || d.get<int>() < 0) throw MalformedInput("cochain: 'degree' must be a non-negative integer");
    const json& g = field(j, "group", "cochain");
    if (!g.is_string()) throw MalformedInput("cochain: 'group' must be a string");
    const CoeffGroup A = CoeffGroup::parse(g.get<std::string>());
    const int degree = d.get<int>();
    Cochain f(X, degree, A);
    std::set<Simplex> seen;
    const json values = j.contains("values") ? j.at("values") : json::array();
    if (!values.is_array()) throw MalformedInput("cochain: 'values' must be an array");
    for (const auto& v : values) {
      OrientedSimplex s = simplex_in(field(v, "simplex", "cochain value"), *X, degree, "cochain");
      if (!seen.insert(s.simplex).second)
        throw MalformedInput("cochain: simplex " + to_string(s.simplex) + " is listed twice");
      const json& raw = field(v, "value", "cochain value");
      CoeffElement value = raw.is_string()  ? A.parse_element(raw.get<std::string>())
                           : raw.is_number_integer() ? A.parse_element(std::to_string(raw.get<long long>()))
                                                     : throw MalformedInput("cochain: value " + raw.dump() +
                                                                            " must be a string or an integer");
      f.set(s.simplex, s.sign > 0 ? value : -value);
    }
    return f;
  });
}

json to_json(const Cochain& f) {
  json values = json::array();
  const auto& cells = f.complex()->simplices(f.degree());
  for (size_t i = 0; i < cells.size(); ++i)
    if (!f.values()[i].is_zero())
      values.push_back({{"simplex", simplex_json(cells[i])}, {"value", f.values()[i].to_string()}});
  return {{"degree", f.degree()}, {"group", f.group().to_string()}, {"values", values}};
}

SimplicialMap map_from_json(const json& j, const ComplexPtr& domain, const ComplexPtr& codomain) {
  return guarded("map", [&] {
    auto v = int_list(field(j, "vertex_map", "map"), "map");
    if (static_cast<int>(v.size()) != domain->vertex_count())
      throw MalformedInput("map: vertex_map has " + std::to_string(v.size()) + " entries, the surface has " +
                           std::to_string(domain->vertex_count()) + " vertices");
    for (int w : v)
      if (w < 0 || w >= codomain->vertex_count())
        throw MalformedInput("map: vertex " + std::to_string(w) + " is not a vertex of the target complex");
    return SimplicialMap(domain, codomain, v);
  });
}

XSurface surface_from_json(const json& j, const ComplexPtr& X, const std::string& base_dir) {
  return guarded("surface", [&] {
    XSurface g;
    g.surface = complex_from_json(part(field(j, "complex", "surface"), base_dir));
    g.map = map_from_json(part(field(j, "map", "surface"), base_dir), g.surface, X);
    g.cycle = chain_from_json(part(field(j, "cycle", "surface"), base_dir), *g.surface);
    if (!g.cycle.is_zero() && g.cycle.dim() != 2) throw MalformedInput("surface: the cycle must be a 2-chain");
    g.inputs = circles_from(j.value("inputs", json()), "surface inputs");
    g.outputs = circles_from(j.value("outputs", json()), "surface outputs");
    for (const auto* list : {&g.inputs, &g.outputs})
      for (const auto& c : *list)
        for (int v : c)
          if (v < 0 || v >= g.surface->vertex_count())
            throw MalformedInput("surface: circle vertex " + std::to_string(v) + " is not a surface vertex");
    verify(g);
    return g;
  });
}

json to_json(const XSurface& g) {
  return {{"complex", to_json(*g.surface)},
          {"map", {{"vertex_map", g.map.vertex_map}}},
          {"cycle", to_json(g.cycle)},
          {"inputs", g.inputs},
          {"outputs", g.outputs}};
}

XSurface load_surface(const std::string& path, const ComplexPtr& X) {
  const auto dir = std::filesystem::path(path).parent_path().string();
  return surface_from_json(read_json_file(path), X, dir.empty() ? "." : dir);
}

MappedCircles object_from_json(const json& j, const ComplexPtr& X) {
  return guarded("object", [&] {
    MappedCircles m{X, circles_from(field(j, "circles", "object"), "object")};
    for (const auto& c : m.images)
      for (int v : c)
        if (v < 0 || v >= X->vertex_count())
          throw MalformedInput("object: vertex " + std::to_string(v) + " is not a vertex of the complex");
    validate(m);
    return m;
  });
}

json to_json(const MappedCircles& m) { return {{"circles", m.images}}; }

}  // namespace hqft::io
