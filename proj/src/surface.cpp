#include "hqft/surface.hpp"

#include "hqft/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace hqft {

namespace {

using Tri = std::array<int, 3>;
using Edge = std::pair<int, int>;

Edge undirected(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

std::string edge_name(const Edge& e) {
  return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent[static_cast<size_t>(b)] = a;
  }
};

// Plain description of a surface: vertex images, oriented triangles, circles.
struct Raw {
  ComplexPtr space;
  std::vector<int> images;
  std::vector<Tri> tris;
  std::vector<std::vector<int>> in, out;

  int add_vertex(int image) {
    images.push_back(image);
    return static_cast<int>(images.size()) - 1;
  }
};

Raw to_raw(const XSurface& g) {
  Raw r;
  r.space = g.space();
  r.images = g.map.vertex_map;
  for (const auto& [s, c] : g.cycle.terms()) {
    const auto& v = s.vertices;
    if (c > 0) r.tris.push_back({v[0], v[1], v[2]});
    else r.tris.push_back({v[0], v[2], v[1]});
  }
  r.in = g.inputs;
  r.out = g.outputs;
  return r;
}

XSurface from_raw(const Raw& r, bool check = true) {
  std::vector<std::vector<int>> simplices;
  for (const auto& t : r.tris) simplices.push_back({t[0], t[1], t[2]});
  XSurface g;
  g.surface = build_complex(simplices, static_cast<int>(r.images.size()));
  g.cycle = Chain(2);
  for (const auto& t : r.tris) {
    auto o = OrientedSimplex::from_tuple({t[0], t[1], t[2]});
    if (!o) throw InvariantViolation("degenerate triangle in surface construction");
    g.cycle.add(*o);
  }
  g.inputs = r.in;
  g.outputs = r.out;
  g.map = SimplicialMap(g.surface, r.space, r.images);
  if (check) verify(g);
  return g;
}

void zip(Raw& r, const std::vector<int>& bottom, const std::vector<int>& top, const std::string& steps) {
  const size_t p = bottom.size(), q = top.size();
  const auto nb = static_cast<size_t>(std::count(steps.begin(), steps.end(), 'B'));
  const auto nt = static_cast<size_t>(std::count(steps.begin(), steps.end(), 'T'));
  if (nb != p || nt != q || nb + nt != steps.size())
    throw PreconditionError("zipper schedule '" + steps + "' does not match circle lengths " + std::to_string(p) +
                            " and " + std::to_string(q));
  size_t i = 0, j = 0;
  for (char s : steps) {
    if (s == 'B') {
      r.tris.push_back({bottom[i % p], bottom[(i + 1) % p], top[j % q]});
      ++i;
    } else {
      r.tris.push_back({bottom[i % p], top[(j + 1) % q], top[j % q]});
      ++j;
    }
  }
}

Chain circle_chain(const std::vector<int>& circle) {
  Chain c(1);
  for (size_t i = 0; i < circle.size(); ++i) {
    auto o = OrientedSimplex::from_tuple({circle[i], circle[(i + 1) % circle.size()]});
    if (o) c.add(*o);
  }
  return c;
}

bool same_space(const ComplexPtr& a, const ComplexPtr& b) {
  if (a == b) return true;
  return a->vertex_count() == b->vertex_count() && a->maximal_simplices() == b->maximal_simplices();
}

void require_same_space(const XSurface& a, const XSurface& b, const std::string& what) {
  if (!same_space(a.space(), b.space())) throw DomainMismatch(what + ": surfaces map into different spaces");
}

MappedCircles object_of(const XSurface& g, const std::vector<std::vector<int>>& circles) {
  MappedCircles m;
  m.space = g.space();
  for (const auto& c : circles) {
    std::vector<int> img;
    for (int v : c) img.push_back(g.map(v));
    m.images.push_back(std::move(img));
  }
  return m;
}

// Appends b to a, identifying vertices of b through `identify` (b id -> a id).
Raw merge(const Raw& a, const Raw& b, const std::map<int, int>& identify) {
  Raw r = a;
  std::vector<int> relabel(b.images.size());
  for (size_t v = 0; v < b.images.size(); ++v) {
    auto it = identify.find(static_cast<int>(v));
    relabel[v] = it != identify.end() ? it->second : r.add_vertex(b.images[v]);
  }
  for (const auto& t : b.tris)
    r.tris.push_back({relabel[static_cast<size_t>(t[0])], relabel[static_cast<size_t>(t[1])],
                      relabel[static_cast<size_t>(t[2])]});
  auto map_circles = [&](const std::vector<std::vector<int>>& cs) {
    std::vector<std::vector<int>> out;
    for (const auto& c : cs) {
      std::vector<int> m;
      for (int v : c) m.push_back(relabel[static_cast<size_t>(v)]);
      out.push_back(std::move(m));
    }
    return out;
  };
  r.in.clear();
  r.out.clear();
  for (auto& c : a.in) r.in.push_back(c);
  for (auto& c : map_circles(b.in)) r.in.push_back(c);
  for (auto& c : a.out) r.out.push_back(c);
  for (auto& c : map_circles(b.out)) r.out.push_back(c);
  return r;
}

// Identifies outputs of a with inputs of b without any collar.
Raw glue_direct(const Raw& a, const Raw& b) {
  std::map<int, int> identify;
  for (size_t i = 0; i < b.in.size(); ++i)
    for (size_t j = 0; j < b.in[i].size(); ++j) identify[b.in[i][j]] = a.out[i][j];
  Raw r = merge(a, b, identify);
  r.in = a.in;
  r.out.erase(r.out.begin(), r.out.begin() + static_cast<std::ptrdiff_t>(a.out.size()));
  return r;
}

std::vector<int> reversed(std::vector<int> v) {
  std::reverse(v.begin(), v.end());
  return v;
}

// Oriented boundary of a set of oriented triangles as simple cyclic sequences,
// each starting at its smallest vertex, ordered by that vertex.
std::optional<std::vector<std::vector<int>>> boundary_circles(const std::vector<Tri>& tris) {
  Chain c(1);
  for (const auto& t : tris)
    for (int e = 0; e < 3; ++e) {
      auto o = OrientedSimplex::from_tuple({t[static_cast<size_t>(e)], t[static_cast<size_t>((e + 1) % 3)]});
      c.add(*o);
    }
  std::map<int, int> next, prev_count;
  for (const auto& [s, k] : c.terms()) {
    if (k != 1 && k != -1) return std::nullopt;
    int a = s.vertices[0], b = s.vertices[1];
    if (k < 0) std::swap(a, b);
    if (next.count(a)) return std::nullopt;
    next[a] = b;
    if (++prev_count[b] > 1) return std::nullopt;
  }
  std::vector<std::vector<int>> out;
  std::set<int> seen;
  for (const auto& [start, unused] : next) {
    (void)unused;
    if (seen.count(start)) continue;
    std::vector<int> circle;
    int v = start;
    do {
      if (seen.count(v)) return std::nullopt;
      seen.insert(v);
      circle.push_back(v);
      auto it = next.find(v);
      if (it == next.end()) return std::nullopt;
      v = it->second;
    } while (v != start);
    out.push_back(std::move(circle));
  }
  return out;
}

}  // namespace

Chain MappedCircles::canonical_cycle() const {
  Chain c(1);
  for (const auto& circle : images) c += circle_chain(circle);
  return c;
}

std::string MappedCircles::to_string() const {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < images.size(); ++i) {
    os << (i ? " " : "") << '(';
    for (size_t j = 0; j < images[i].size(); ++j) os << (j ? "," : "") << images[i][j];
    os << ')';
  }
  os << ']';
  return os.str();
}

void validate(const MappedCircles& object) {
  for (size_t i = 0; i < object.images.size(); ++i) {
    const auto& c = object.images[i];
    if (c.size() < 3)
      throw InvariantViolation("circle " + std::to_string(i) + " has " + std::to_string(c.size()) +
                               " vertices, at least 3 are required");
    for (size_t j = 0; j < c.size(); ++j) {
      int a = c[j], b = c[(j + 1) % c.size()];
      if (a < 0 || a >= object.space->vertex_count())
        throw InvariantViolation("circle " + std::to_string(i) + " visits " + std::to_string(a) +
                                 ", which is not a vertex of the space");
      if (a != b && !object.space->contains(Simplex{std::min(a, b), std::max(a, b)}))
        throw InvariantViolation("circle " + std::to_string(i) + " steps from " + std::to_string(a) + " to " +
                                 std::to_string(b) + " along a non-edge");
    }
  }
}

MappedCircles disjoint_union(const MappedCircles& a, const MappedCircles& b) {
  MappedCircles m = a;
  if (!m.space) m.space = b.space;
  m.images.insert(m.images.end(), b.images.begin(), b.images.end());
  return m;
}

MappedCircles XSurface::input_object() const { return object_of(*this, inputs); }
MappedCircles XSurface::output_object() const { return object_of(*this, outputs); }

int SurfaceBuilder::add_vertex(int image) {
  images_.push_back(image);
  return static_cast<int>(images_.size()) - 1;
}

void SurfaceBuilder::add_triangle(int a, int b, int c) { triangles_.push_back({a, b, c}); }

void SurfaceBuilder::add_zipper(const std::vector<int>& bottom, const std::vector<int>& top,
                                const std::string& steps) {
  Raw r;
  zip(r, bottom, top, steps);
  triangles_.insert(triangles_.end(), r.tris.begin(), r.tris.end());
}

XSurface SurfaceBuilder::build() const {
  Raw r;
  r.space = space_;
  r.images = images_;
  r.tris = triangles_;
  r.in = inputs_;
  r.out = outputs_;
  return from_raw(r);
}

std::string balanced_schedule(size_t p, size_t q) {
  std::string s;
  size_t i = 0, j = 0;
  while (i < p || j < q) {
    if (i < p && (j == q || (2 * i + 1) * q <= (2 * j + 1) * p)) {
      s += 'B';
      ++i;
    } else {
      s += 'T';
      ++j;
    }
  }
  return s;
}

std::optional<std::string> diagnose(const XSurface& g) {
  if (!g.surface) return "surface complex is missing";
  const auto& S = *g.surface;
  if (g.map.domain != g.surface) return std::string("map domain is not the surface complex");
  if (S.dim() > 2) return "surface complex has a simplex of dimension " + std::to_string(S.dim());
  // Triangle incidences.
  std::map<Edge, int> edge_tris;
  std::map<int, std::vector<Tri>> vertex_tris;
  for (const auto& t : S.simplices(2)) {
    const auto& v = t.vertices;
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b) ++edge_tris[undirected(v[static_cast<size_t>(a)], v[static_cast<size_t>(b)])];
    for (int a = 0; a < 3; ++a) vertex_tris[v[static_cast<size_t>(a)]].push_back({v[0], v[1], v[2]});
  }
  for (const auto& s : S.simplices(0))
    if (!vertex_tris.count(s.vertices[0])) return "vertex " + std::to_string(s.vertices[0]) + " lies in no triangle";
  for (const auto& e : S.simplices(1))
    if (!edge_tris.count({e.vertices[0], e.vertices[1]}))
      return "edge " + to_string(e) + " lies in no triangle";
  // Fundamental cycle.
  if (!g.cycle.is_zero() && g.cycle.dim() != 2) return std::string("surface cycle is not a 2-chain");
  for (const auto& [s, c] : g.cycle.terms())
    if (!S.contains(s)) return "cycle references " + to_string(s) + ", which is not a triangle of the surface";
  for (const auto& t : S.simplices(2)) {
    Integer c = g.cycle.coefficient(t);
    if (c != 1 && c != -1) return "cycle has coefficient " + c.str() + " on triangle " + to_string(t);
  }
  // Circles.
  std::map<int, size_t> circle_of;
  std::set<Edge> circle_edges;
  size_t circle_index = 0;
  for (const auto* list : {&g.inputs, &g.outputs})
    for (const auto& c : *list) {
      if (c.size() < 3) return "boundary circle " + std::to_string(circle_index) + " has fewer than 3 vertices";
      for (size_t i = 0; i < c.size(); ++i) {
        int v = c[i], w = c[(i + 1) % c.size()];
        if (v < 0 || v >= S.vertex_count()) return "boundary circle uses unknown vertex " + std::to_string(v);
        if (circle_of.count(v)) return "vertex " + std::to_string(v) + " appears twice on boundary circles";
        circle_of[v] = circle_index;
        if (!S.contains(Simplex{std::min(v, w), std::max(v, w)}))
          return "boundary circle step " + edge_name(undirected(v, w)) + " is not an edge of the surface";
        circle_edges.insert(undirected(v, w));
      }
      ++circle_index;
    }
  for (const auto& [e, n] : edge_tris) {
    if (n > 2) return "edge " + edge_name(e) + " lies in " + std::to_string(n) + " triangles";
    bool on_circle = circle_edges.count(e) > 0;
    if (on_circle && n != 1) return "boundary circle edge " + edge_name(e) + " lies in " + std::to_string(n) + " triangles";
    if (!on_circle && n != 2) return "edge " + edge_name(e) + " lies in 1 triangle but is not on a boundary circle";
  }
  // Vertex links.
  for (const auto& [v, tris] : vertex_tris) {
    std::map<int, std::vector<int>> adj;
    for (const auto& t : tris) {
      std::vector<int> opp;
      for (int w : t)
        if (w != v) opp.push_back(w);
      adj[opp[0]].push_back(opp[1]);
      adj[opp[1]].push_back(opp[0]);
    }
    int ends = 0;
    for (const auto& [w, nb] : adj) {
      if (nb.size() > 2) return "link of vertex " + std::to_string(v) + " branches at " + std::to_string(w);
      if (nb.size() == 1) ++ends;
    }
    // connectivity of the link graph
    std::set<int> seen;
    std::vector<int> stack{adj.begin()->first};
    while (!stack.empty()) {
      int w = stack.back();
      stack.pop_back();
      if (!seen.insert(w).second) continue;
      for (int u : adj[w]) stack.push_back(u);
    }
    if (seen.size() != adj.size()) return "link of vertex " + std::to_string(v) + " is disconnected";
    bool on_circle = circle_of.count(v) > 0;
    if (on_circle && ends != 2) return "link of boundary vertex " + std::to_string(v) + " is not an arc";
    if (!on_circle && ends != 0) return "link of vertex " + std::to_string(v) + " is not a circle";
  }
  // Boundary identity.
  Chain expected(1);
  for (const auto& c : g.inputs) expected += circle_chain(c);
  for (const auto& c : g.outputs) expected -= circle_chain(c);
  Chain actual = g.cycle.is_zero() ? Chain(1) : boundary(g.cycle);
  if (!(actual == expected))
    return "boundary of the surface cycle is " + to_string(actual) + ", expected inputs minus outputs " +
           to_string(expected);
  return std::nullopt;
}

void verify(const XSurface& g) {
  if (auto msg = diagnose(g)) throw InvariantViolation("invalid surface: " + *msg);
}

int euler_characteristic(const XSurface& g) {
  return static_cast<int>(g.surface->count(0) - g.surface->count(1) + g.surface->count(2));
}

int component_count(const XSurface& g) {
  UnionFind uf(static_cast<size_t>(g.surface->vertex_count()));
  for (const auto& e : g.surface->simplices(1)) uf.unite(e.vertices[0], e.vertices[1]);
  int n = 0;
  for (int v = 0; v < g.surface->vertex_count(); ++v) n += uf.find(v) == v;
  return n;
}

int genus(const XSurface& g) {
  if (!g.closed() || component_count(g) != 1)
    throw PreconditionError("genus is defined here only for closed connected surfaces");
  return (2 - euler_characteristic(g)) / 2;
}

XSurface empty_surface(const ComplexPtr& space) {
  Raw r;
  r.space = space;
  return from_raw(r);
}

XSurface disjoint_union(const XSurface& a, const XSurface& b) {
  require_same_space(a, b, "disjoint_union");
  return from_raw(merge(to_raw(a), to_raw(b), {}));
}

XSurface reverse(const XSurface& g) {
  Raw r = to_raw(g);
  for (auto& t : r.tris) std::swap(t[1], t[2]);
  std::swap(r.in, r.out);
  return from_raw(r);
}

XSurface glue(const XSurface& a, const XSurface& b) {
  require_same_space(a, b, "glue");
  const MappedCircles out = a.output_object(), in = b.input_object();
  if (out.size() != in.size())
    throw GluingError("first surface has " + std::to_string(out.size()) + " output circles, second has " +
                      std::to_string(in.size()) + " input circles");
  for (size_t i = 0; i < out.size(); ++i)
    if (out.images[i] != in.images[i])
      throw GluingError("output circle " + std::to_string(i) + " maps to " +
                        MappedCircles{out.space, {out.images[i]}}.to_string() + " but input circle " +
                        std::to_string(i) + " maps to " + MappedCircles{in.space, {in.images[i]}}.to_string());
  const Raw ra = to_raw(a), rb = to_raw(b);
  XSurface direct = from_raw(glue_direct(ra, rb), false);
  if (!diagnose(direct)) return direct;
  const Raw collar = to_raw(identity_cylinder(out, 1));
  return from_raw(glue_direct(glue_direct(ra, collar), rb));
}

XSurface close(const XSurface& g) {
  const MappedCircles in = g.input_object(), out = g.output_object();
  if (!(in == out))
    throw GluingError("cannot close: inputs map to " + in.to_string() + " but outputs map to " + out.to_string());
  Raw r = glue_direct(to_raw(g), to_raw(identity_cylinder(out, 2)));
  std::map<int, int> identify;
  for (size_t i = 0; i < r.out.size(); ++i)
    for (size_t j = 0; j < r.out[i].size(); ++j) identify[r.out[i][j]] = r.in[i][j];
  for (auto& t : r.tris)
    for (auto& v : t)
      if (auto it = identify.find(v); it != identify.end()) v = it->second;
  r.in.clear();
  r.out.clear();
  XSurface closed = compact(from_raw(r, false));
  verify(closed);
  return closed;
}

XSurface permute_boundary(const XSurface& g, const std::vector<size_t>& input_perm,
                          const std::vector<size_t>& output_perm) {
  auto apply = [](const std::vector<std::vector<int>>& cs, const std::vector<size_t>& perm) {
    std::vector<size_t> sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i < sorted.size(); ++i)
      if (sorted[i] != i || sorted.size() != cs.size()) throw PreconditionError("boundary permutation is not a permutation");
    std::vector<std::vector<int>> out;
    for (size_t i : perm) out.push_back(cs[i]);
    return out;
  };
  Raw r = to_raw(g);
  r.in = apply(r.in, input_perm);
  r.out = apply(r.out, output_perm);
  return from_raw(r);
}

XSurface identity_cylinder(const MappedCircles& object, int layers) {
  validate(object);
  if (layers < 1) throw PreconditionError("identity cylinder needs at least one layer");
  Raw r;
  r.space = object.space;
  for (const auto& circle : object.images) {
    std::vector<std::vector<int>> rings;
    for (int l = 0; l <= layers; ++l) {
      std::vector<int> ring;
      for (int x : circle) ring.push_back(r.add_vertex(x));
      rings.push_back(std::move(ring));
    }
    std::string steps;
    for (size_t i = 0; i < circle.size(); ++i) steps += "BT";
    for (int l = 0; l < layers; ++l) zip(r, rings[static_cast<size_t>(l)], rings[static_cast<size_t>(l + 1)], steps);
    r.in.push_back(rings.front());
    r.out.push_back(rings.back());
  }
  return from_raw(r);
}

XSurface swap_cylinder(const MappedCircles& a, const MappedCircles& b) {
  XSurface c = identity_cylinder(disjoint_union(a, b), 1);
  std::vector<size_t> in(c.inputs.size()), out;
  std::iota(in.begin(), in.end(), 0);
  for (size_t i = 0; i < b.size(); ++i) out.push_back(a.size() + i);
  for (size_t i = 0; i < a.size(); ++i) out.push_back(i);
  return permute_boundary(c, in, out);
}

XSurface insertion_cylinder(const MappedCircles& object, size_t circle, size_t position) {
  validate(object);
  if (circle >= object.size()) throw PreconditionError("insertion_cylinder: no circle " + std::to_string(circle));
  const auto& img = object.images[circle];
  const size_t L = img.size();
  if (position >= L) throw PreconditionError("insertion_cylinder: position out of range");
  Raw r;
  r.space = object.space;
  for (size_t c = 0; c < object.size(); ++c) {
    const auto& circ = object.images[c];
    std::vector<int> bottom, top;
    for (int x : circ) bottom.push_back(r.add_vertex(x));
    std::string steps;
    if (c != circle) {
      for (int x : circ) top.push_back(r.add_vertex(x));
      for (size_t i = 0; i < circ.size(); ++i) steps += "BT";
    } else {
      for (size_t j = 0; j <= L; ++j) {
        size_t src = j <= position ? j : j - 1;
        top.push_back(r.add_vertex(img[src]));
      }
      for (size_t i = 0; i < position; ++i) steps += "BT";
      steps += "TBT";
      for (size_t i = position + 1; i < L; ++i) steps += "BT";
    }
    zip(r, bottom, top, steps);
    r.in.push_back(bottom);
    r.out.push_back(top);
  }
  return from_raw(r);
}

XSurface constant_sphere(const ComplexPtr& space, int vertex) {
  Raw r;
  r.space = space;
  for (int i = 0; i < 4; ++i) r.add_vertex(vertex);
  r.tris = {{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}};
  return from_raw(r);
}

MappedCircles constant_circle(const ComplexPtr& space, int vertex) {
  return MappedCircles{space, {{vertex, vertex, vertex}}};
}

XSurface cone_cap(const MappedCircles& circle, int apex) {
  validate(circle);
  if (circle.size() != 1) throw PreconditionError("cone_cap needs exactly one circle");
  Raw r;
  r.space = circle.space;
  std::vector<int> ring;
  for (int x : circle.images[0]) ring.push_back(r.add_vertex(x));
  int c = r.add_vertex(apex);
  for (size_t i = 0; i < ring.size(); ++i) r.tris.push_back({c, ring[i], ring[(i + 1) % ring.size()]});
  r.in.push_back(ring);
  return from_raw(r);
}

XSurface cone_cup(const MappedCircles& circle, int apex) { return reverse(cone_cap(circle, apex)); }

PatchOutcome insert_constant_patch_traced(const XSurface& g, const Simplex& triangle, int side) {
  if (side < 1) throw PreconditionError("patch side must be at least 1");
  Integer sign = g.cycle.coefficient(triangle);
  if (triangle.dim() != 2 || sign == 0)
    throw PreconditionError("insert_constant_patch: " + to_string(triangle) + " is not a triangle of the surface");
  Raw r = to_raw(g);
  const auto& v = triangle.vertices;
  const Tri outer = sign > 0 ? Tri{v[0], v[1], v[2]} : Tri{v[0], v[2], v[1]};
  r.tris.erase(std::find(r.tris.begin(), r.tris.end(), outer));
  const int x = g.map(v[0]);
  const int n = side;
  std::map<std::pair<int, int>, int> grid;
  for (int a = 0; a <= n; ++a)
    for (int b = 0; a + b <= n; ++b) grid[{a, b}] = r.add_vertex(x);
  const size_t first_grid_tri = r.tris.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; a + b < n; ++b) {
      r.tris.push_back({grid[{a, b}], grid[{a + 1, b}], grid[{a, b + 1}]});
      if (a + b <= n - 2) r.tris.push_back({grid[{a + 1, b}], grid[{a + 1, b + 1}], grid[{a, b + 1}]});
    }
  const size_t end_grid_tri = r.tris.size();
  std::vector<int> inner;
  for (int a = 0; a < n; ++a) inner.push_back(grid[{a, 0}]);
  for (int a = n; a > 0; --a) inner.push_back(grid[{a, n - a}]);
  for (int b = n; b > 0; --b) inner.push_back(grid[{0, b}]);
  const std::string third = std::string(static_cast<size_t>(n), 'T') + "B";
  zip(r, {outer[0], outer[1], outer[2]}, inner, third + third + third);
  PatchOutcome out{from_raw(r), {}};
  for (size_t i = first_grid_tri; i < end_grid_tri; ++i) {
    std::vector<int> s(r.tris[i].begin(), r.tris[i].end());
    std::sort(s.begin(), s.end());
    out.grid.push_back(Simplex(s));
  }
  if (!(out.surface.pushed_cycle() == g.pushed_cycle()))
    throw InvariantViolation("insert_constant_patch changed the pushed-forward cycle");
  return out;
}

XSurface insert_constant_patch(const XSurface& g, const Simplex& triangle, int side) {
  return insert_constant_patch_traced(g, triangle, side).surface;
}

XSurface pants(const MappedCircles& object) {
  validate(object);
  if (object.size() != 1) throw PreconditionError("pants needs exactly one circle");
  const int x = object.images[0][0];
  const XSurface cyl = identity_cylinder(object, 1);
  const XSurface cup = cone_cup(constant_circle(object.space, x), x);
  XSurface both = disjoint_union(cyl, cup);
  // Vertex 0 is the first bottom vertex of the cylinder and maps to x.
  Simplex first;
  for (const auto& [s, c] : both.cycle.terms())
    if (s.vertices[0] == 0) {
      first = s;
      break;
    }
  const int offset = cyl.surface->vertex_count();
  Simplex second;
  for (const auto& [s, c] : both.cycle.terms())
    if (s.vertices[0] >= offset) {
      second = s;
      break;
    }
  auto p1 = insert_constant_patch_traced(both, first, 1);
  auto p2 = insert_constant_patch_traced(p1.surface, second, 1);
  SurgerySite site{SurgerySite::Kind::TwoDisks, {p1.grid, p2.grid}, {}};
  return local_surgery(p2.surface, site);
}

namespace {

struct RegionInfo {
  std::vector<Tri> tris;
  std::vector<std::vector<int>> circles;
  std::set<int> vertices;
  std::set<int> interior;
};

RegionInfo analyse_region(const XSurface& g, const std::vector<Simplex>& region, size_t index) {
  const std::string name = "site region " + std::to_string(index);
  if (region.empty()) throw InvalidSite(name + " is empty");
  RegionInfo info;
  std::set<Simplex> unique(region.begin(), region.end());
  if (unique.size() != region.size()) throw InvalidSite(name + " lists a triangle twice");
  for (const auto& s : unique) {
    Integer c = g.cycle.coefficient(s);
    if (s.dim() != 2 || c == 0) throw InvalidSite(name + ": " + to_string(s) + " is not a triangle of the surface");
    const auto& v = s.vertices;
    info.tris.push_back(c > 0 ? Tri{v[0], v[1], v[2]} : Tri{v[0], v[2], v[1]});
    info.vertices.insert(v.begin(), v.end());
  }
  // connectivity through shared edges
  std::map<Edge, std::vector<size_t>> by_edge;
  std::set<Edge> edges;
  for (size_t i = 0; i < info.tris.size(); ++i)
    for (int a = 0; a < 3; ++a) {
      Edge e = undirected(info.tris[i][static_cast<size_t>(a)], info.tris[i][static_cast<size_t>((a + 1) % 3)]);
      by_edge[e].push_back(i);
      edges.insert(e);
    }
  UnionFind uf(info.tris.size());
  for (const auto& [e, ts] : by_edge)
    for (size_t i = 1; i < ts.size(); ++i) uf.unite(static_cast<int>(ts[0]), static_cast<int>(ts[i]));
  for (size_t i = 0; i < info.tris.size(); ++i)
    if (uf.find(static_cast<int>(i)) != 0) throw InvalidSite(name + " is not connected");
  auto circles = boundary_circles(info.tris);
  if (!circles) throw InvalidSite(name + " does not have simple boundary circles");
  info.circles = *circles;
  std::set<int> on_boundary;
  for (const auto& c : info.circles) on_boundary.insert(c.begin(), c.end());
  // stars: interior vertices must be fully covered, boundary vertices must see one arc
  std::map<int, int> region_star, full_star;
  for (const auto& t : info.tris)
    for (int v : t) ++region_star[v];
  for (const auto& [s, c] : g.cycle.terms())
    for (int v : s.vertices)
      if (info.vertices.count(v)) ++full_star[v];
  for (int v : info.vertices) {
    if (on_boundary.count(v)) continue;
    if (region_star[v] != full_star[v]) throw InvalidSite(name + " is pinched at vertex " + std::to_string(v));
    info.interior.insert(v);
  }
  int boundary_edges = 0;
  for (const auto& [e, ts] : by_edge) boundary_edges += ts.size() == 1;
  int circle_edges = 0;
  for (const auto& c : info.circles) circle_edges += static_cast<int>(c.size());
  if (boundary_edges != circle_edges) throw InvalidSite(name + " touches itself along its boundary");
  for (const auto* list : {&g.inputs, &g.outputs})
    for (const auto& c : *list)
      for (int v : c)
        if (info.vertices.count(v))
          throw InvalidSite(name + " meets the boundary circle vertex " + std::to_string(v));
  return info;
}

int region_euler(const RegionInfo& info) {
  std::set<Edge> edges;
  for (const auto& t : info.tris)
    for (int a = 0; a < 3; ++a) edges.insert(undirected(t[static_cast<size_t>(a)], t[static_cast<size_t>((a + 1) % 3)]));
  return static_cast<int>(info.vertices.size()) - static_cast<int>(edges.size()) + static_cast<int>(info.tris.size());
}

}  // namespace

int validate_site(const XSurface& g, const SurgerySite& site) {
  const size_t expected = site.kind == SurgerySite::Kind::TwoDisks ? 2 : 1;
  if (site.regions.size() != expected)
    throw InvalidSite(std::string(site.kind == SurgerySite::Kind::TwoDisks ? "two disks" : "one annulus") +
                      " expected, got " + std::to_string(site.regions.size()) + " regions");
  std::optional<int> point;
  std::vector<RegionInfo> infos;
  for (size_t i = 0; i < site.regions.size(); ++i) {
    infos.push_back(analyse_region(g, site.regions[i], i));
    for (int v : infos.back().vertices) {
      if (!point) point = g.map(v);
      if (g.map(v) != *point)
        throw InvalidSite("site is not mapped to a single point: vertex " + std::to_string(v) + " maps to " +
                          std::to_string(g.map(v)) + ", another site vertex maps to " + std::to_string(*point));
    }
  }
  for (size_t i = 0; i < infos.size(); ++i) {
    int chi = region_euler(infos[i]);
    if (site.kind == SurgerySite::Kind::TwoDisks && (chi != 1 || infos[i].circles.size() != 1))
      throw InvalidSite("site region " + std::to_string(i) + " is not a disk");
    if (site.kind == SurgerySite::Kind::Annulus && (chi != 0 || infos[i].circles.size() != 2))
      throw InvalidSite("site region " + std::to_string(i) + " is not an annulus");
  }
  if (site.kind == SurgerySite::Kind::TwoDisks)
    for (int v : infos[0].vertices)
      if (infos[1].vertices.count(v)) throw InvalidSite("site disks share vertex " + std::to_string(v));
  if (site.kind == SurgerySite::Kind::Annulus && !site.caps.empty() && site.caps.size() != 2)
    throw InvalidSite("an annulus site needs either no caps or two caps");
  return *point;
}

SurgeryOutcome local_surgery_traced(const XSurface& g, const SurgerySite& site) {
  const int x = validate_site(g, site);
  std::vector<RegionInfo> infos;
  for (size_t i = 0; i < site.regions.size(); ++i) infos.push_back(analyse_region(g, site.regions[i], i));
  Raw r = to_raw(g);
  std::set<Tri> removed;
  for (const auto& info : infos) removed.insert(info.tris.begin(), info.tris.end());
  std::vector<Tri> kept;
  for (const auto& t : r.tris)
    if (!removed.count(t)) kept.push_back(t);
  r.tris = std::move(kept);
  const size_t first_new_tri = r.tris.size();

  // Removed disks, expressed as caps for the inverse move.
  auto as_patch = [](const RegionInfo& info) {
    DiskPatch patch;
    std::map<int, int> fresh;
    for (int v : info.interior) fresh[v] = -1 - static_cast<int>(fresh.size());
    for (const auto& t : info.tris) {
      Tri p = t;
      for (auto& v : p)
        if (auto it = fresh.find(v); it != fresh.end()) v = it->second;
      patch.triangles.push_back(p);
    }
    return patch;
  };

  SurgeryOutcome out;
  std::vector<DiskPatch> caps_for_inverse;
  std::vector<std::vector<int>> cap_circles;
  if (site.kind == SurgerySite::Kind::TwoDisks) {
    const auto& c1 = infos[0].circles[0];
    const auto& c2 = infos[1].circles[0];
    std::vector<int> ring;
    for (size_t i = 0; i < c1.size(); ++i) ring.push_back(r.add_vertex(x));
    std::string steps;
    for (size_t i = 0; i < c1.size(); ++i) steps += "BT";
    zip(r, c1, ring, steps);
    zip(r, ring, reversed(c2), balanced_schedule(c1.size(), c2.size()));
    // caps ordered by the smallest circle vertex
    std::vector<std::pair<int, DiskPatch>> caps{{*std::min_element(c1.begin(), c1.end()), as_patch(infos[0])},
                                                {*std::min_element(c2.begin(), c2.end()), as_patch(infos[1])}};
    std::sort(caps.begin(), caps.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [k, p] : caps) caps_for_inverse.push_back(std::move(p));
  } else {
    auto circles = infos[0].circles;
    for (size_t i = 0; i < 2; ++i) {
      const auto& a = circles[i];
      if (!site.caps.empty()) {
        const DiskPatch& patch = site.caps[i];
        std::map<int, int> fresh;
        std::vector<Tri> tris;
        for (const auto& t : patch.triangles) {
          Tri p = t;
          for (auto& v : p) {
            if (v < 0) {
              auto it = fresh.find(v);
              if (it == fresh.end()) it = fresh.emplace(v, r.add_vertex(x)).first;
              v = it->second;
            } else if (std::find(a.begin(), a.end(), v) == a.end()) {
              throw InvalidSite("cap " + std::to_string(i) + " uses vertex " + std::to_string(v) +
                                ", which is not on the annulus boundary circle");
            }
          }
          tris.push_back(p);
        }
        auto cap_boundary = boundary_circles(tris);
        if (!cap_boundary || cap_boundary->size() != 1 || !(circle_chain((*cap_boundary)[0]) == circle_chain(a)))
          throw InvalidSite("cap " + std::to_string(i) + " does not bound the annulus boundary circle");
        r.tris.insert(r.tris.end(), tris.begin(), tris.end());
      } else {
        std::vector<int> sorted = a;
        std::sort(sorted.begin(), sorted.end());
        bool present = false;
        for (const auto& t : r.tris) {
          std::vector<int> s(t.begin(), t.end());
          std::sort(s.begin(), s.end());
          present = present || s == sorted;
        }
        if (a.size() == 3 && !present) {
          r.tris.push_back({a[0], a[1], a[2]});
        } else {
          int c = r.add_vertex(x);
          for (size_t j = 0; j < a.size(); ++j) r.tris.push_back({c, a[j], a[(j + 1) % a.size()]});
        }
      }
      cap_circles.push_back(a);
    }
  }
  std::vector<Tri> new_tris(r.tris.begin() + static_cast<std::ptrdiff_t>(first_new_tri), r.tris.end());

  XSurface raw_surface = from_raw(r, false);
  out.surface = compact(raw_surface, &out.old_to_new);
  verify(out.surface);
  // old_to_new was computed on the enlarged vertex set; restrict to the original ids.
  std::vector<int> relabel = out.old_to_new;
  out.old_to_new.resize(static_cast<size_t>(g.surface->vertex_count()));
  auto to_simplex = [&](const Tri& t) {
    std::vector<int> s{relabel[static_cast<size_t>(t[0])], relabel[static_cast<size_t>(t[1])],
                       relabel[static_cast<size_t>(t[2])]};
    std::sort(s.begin(), s.end());
    return Simplex(s);
  };
  if (site.kind == SurgerySite::Kind::TwoDisks) {
    out.inverse.kind = SurgerySite::Kind::Annulus;
    std::vector<Simplex> annulus;
    for (const auto& t : new_tris) annulus.push_back(to_simplex(t));
    out.inverse.regions = {annulus};
    for (auto& cap : caps_for_inverse) {
      for (auto& t : cap.triangles)
        for (auto& v : t)
          if (v >= 0) v = relabel[static_cast<size_t>(v)];
      out.inverse.caps.push_back(cap);
    }
    // caps must follow the ordering of the annulus circles in the new numbering
    std::sort(out.inverse.caps.begin(), out.inverse.caps.end(), [](const DiskPatch& a, const DiskPatch& b) {
      auto min_boundary = [](const DiskPatch& p) {
        int m = std::numeric_limits<int>::max();
        for (const auto& t : p.triangles)
          for (int v : t)
            if (v >= 0) m = std::min(m, v);
        return m;
      };
      return min_boundary(a) < min_boundary(b);
    });
  } else {
    out.inverse.kind = SurgerySite::Kind::TwoDisks;
    // split the cap triangles by the circle they bound
    std::vector<std::vector<Simplex>> regions(2);
    std::vector<std::set<int>> circle_sets;
    for (const auto& c : cap_circles) circle_sets.emplace_back(c.begin(), c.end());
    UnionFind uf(r.images.size());
    for (const auto& t : new_tris) {
      uf.unite(t[0], t[1]);
      uf.unite(t[1], t[2]);
    }
    int root0 = uf.find(cap_circles[0][0]);
    for (const auto& t : new_tris) regions[uf.find(t[0]) == root0 ? 0 : 1].push_back(to_simplex(t));
    out.inverse.regions = regions;
  }
  return out;
}

XSurface local_surgery(const XSurface& g, const SurgerySite& site) { return local_surgery_traced(g, site).surface; }

XSurface compact(const XSurface& g, std::vector<int>* old_to_new) {
  Raw r = to_raw(g);
  std::vector<int> relabel(r.images.size(), -1);
  std::vector<bool> used(r.images.size(), false);
  for (const auto& t : r.tris)
    for (int v : t) used[static_cast<size_t>(v)] = true;
  Raw c;
  c.space = r.space;
  for (size_t v = 0; v < r.images.size(); ++v)
    if (used[v]) relabel[v] = c.add_vertex(r.images[v]);
  for (const auto& t : r.tris)
    c.tris.push_back({relabel[static_cast<size_t>(t[0])], relabel[static_cast<size_t>(t[1])],
                      relabel[static_cast<size_t>(t[2])]});
  auto map_circles = [&](const std::vector<std::vector<int>>& cs) {
    std::vector<std::vector<int>> out;
    for (const auto& circle : cs) {
      std::vector<int> m;
      for (int v : circle) {
        if (relabel[static_cast<size_t>(v)] < 0)
          throw InvariantViolation("compact: boundary vertex " + std::to_string(v) + " lies in no triangle");
        m.push_back(relabel[static_cast<size_t>(v)]);
      }
      out.push_back(std::move(m));
    }
    return out;
  };
  c.in = map_circles(r.in);
  c.out = map_circles(r.out);
  if (old_to_new) *old_to_new = relabel;
  return from_raw(c, false);
}

std::optional<std::vector<int>> find_isomorphism(const XSurface& a, const XSurface& b) {
  if (!same_space(a.space(), b.space())) return std::nullopt;
  const Raw ra = to_raw(a), rb = to_raw(b);
  if (ra.images.size() != rb.images.size() || ra.tris.size() != rb.tris.size() || ra.in.size() != rb.in.size() ||
      ra.out.size() != rb.out.size())
    return std::nullopt;
  std::map<Edge, Tri> b_by_edge;
  for (const auto& t : rb.tris)
    for (int e = 0; e < 3; ++e)
      b_by_edge[{t[static_cast<size_t>(e)], t[static_cast<size_t>((e + 1) % 3)]}] =
          Tri{t[static_cast<size_t>(e)], t[static_cast<size_t>((e + 1) % 3)], t[static_cast<size_t>((e + 2) % 3)]};
  const size_t n = ra.images.size();

  struct State {
    std::vector<int> phi, inv;
  };
  auto assign = [&](State& s, int v, int w) {
    if (ra.images[static_cast<size_t>(v)] != rb.images[static_cast<size_t>(w)]) return false;
    int& pv = s.phi[static_cast<size_t>(v)];
    int& iw = s.inv[static_cast<size_t>(w)];
    if (pv == w && iw == v) return true;
    if (pv != -1 || iw != -1) return false;
    pv = w;
    iw = v;
    return true;
  };
  auto propagate = [&](State& s) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& t : ra.tris)
        for (int e = 0; e < 3; ++e) {
          int p = t[static_cast<size_t>(e)], q = t[static_cast<size_t>((e + 1) % 3)],
              rr = t[static_cast<size_t>((e + 2) % 3)];
          int pp = s.phi[static_cast<size_t>(p)], qq = s.phi[static_cast<size_t>(q)];
          if (pp < 0 || qq < 0) continue;
          auto it = b_by_edge.find({pp, qq});
          if (it == b_by_edge.end()) return false;
          int target = it->second[2];
          if (s.phi[static_cast<size_t>(rr)] == target) continue;
          if (!assign(s, rr, target)) return false;
          changed = true;
        }
    }
    return true;
  };
  State init{std::vector<int>(n, -1), std::vector<int>(n, -1)};
  for (size_t i = 0; i < ra.in.size(); ++i) {
    if (ra.in[i].size() != rb.in[i].size()) return std::nullopt;
    for (size_t j = 0; j < ra.in[i].size(); ++j)
      if (!assign(init, ra.in[i][j], rb.in[i][j])) return std::nullopt;
  }
  for (size_t i = 0; i < ra.out.size(); ++i) {
    if (ra.out[i].size() != rb.out[i].size()) return std::nullopt;
    for (size_t j = 0; j < ra.out[i].size(); ++j)
      if (!assign(init, ra.out[i][j], rb.out[i][j])) return std::nullopt;
  }
  std::function<std::optional<State>(State)> search = [&](State s) -> std::optional<State> {
    if (!propagate(s)) return std::nullopt;
    const Tri* seed = nullptr;
    for (const auto& t : ra.tris)
      if (s.phi[static_cast<size_t>(t[0])] < 0 && s.phi[static_cast<size_t>(t[1])] < 0 &&
          s.phi[static_cast<size_t>(t[2])] < 0) {
        seed = &t;
        break;
      }
    if (!seed) {
      for (const auto& t : ra.tris)
        for (int v : t)
          if (s.phi[static_cast<size_t>(v)] < 0) return std::nullopt;
      return s;
    }
    for (const auto& u : rb.tris)
      for (int rot = 0; rot < 3; ++rot) {
        State next = s;
        bool ok = true;
        for (int k = 0; k < 3 && ok; ++k)
          ok = assign(next, (*seed)[static_cast<size_t>(k)], u[static_cast<size_t>((k + rot) % 3)]);
        if (!ok) continue;
        if (auto found = search(next)) return found;
      }
    return std::nullopt;
  };
  auto found = search(init);
  if (!found) return std::nullopt;
  // every triangle of a must land on an equally oriented triangle of b
  std::set<Tri> b_tris;
  for (const auto& t : rb.tris) b_tris.insert(t);
  for (const auto& t : ra.tris) {
    Tri m{found->phi[static_cast<size_t>(t[0])], found->phi[static_cast<size_t>(t[1])],
          found->phi[static_cast<size_t>(t[2])]};
    bool hit = false;
    for (int rot = 0; rot < 3 && !hit; ++rot)
      hit = b_tris.count(Tri{m[static_cast<size_t>(rot)], m[static_cast<size_t>((rot + 1) % 3)],
                             m[static_cast<size_t>((rot + 2) % 3)]}) > 0;
    if (!hit) return std::nullopt;
  }
  return found->phi;
}

XSurface surface_from_cycle(const ComplexPtr& X, const Chain& y) {
  require_in(*X, y, "surface_from_cycle");
  if (y.is_zero()) return empty_surface(X);
  if (y.dim() != 2) throw DimensionError("surface_from_cycle needs a 2-chain");
  if (!boundary(y).is_zero()) throw PreconditionError("surface_from_cycle: chain " + to_string(y) + " is not a cycle");

  std::vector<Tri> occ;
  for (const auto& [s, c] : y.terms()) {
    const auto& v = s.vertices;
    Tri t = c > 0 ? Tri{v[0], v[1], v[2]} : Tri{v[0], v[2], v[1]};
    for (Integer k = 0; k < (c > 0 ? c : Integer(-c)); ++k) occ.push_back(t);
  }
  const size_t m = occ.size();
  // Pair each oriented edge with an oppositely oriented one, greedily in order.
  std::map<Edge, std::vector<std::pair<size_t, int>>> forward, backward;
  for (size_t k = 0; k < m; ++k)
    for (int e = 0; e < 3; ++e) {
      int a = occ[k][static_cast<size_t>(e)], b = occ[k][static_cast<size_t>((e + 1) % 3)];
      (a < b ? forward : backward)[undirected(a, b)].push_back({k, e});
    }
  UnionFind corners(3 * m);
  std::vector<std::array<int, 3>> side_pairing(m);
  int pairing_count = 0;
  for (auto& [edge, fw] : forward) {
    auto& bw = backward[edge];
    if (fw.size() != bw.size()) throw InvariantViolation("surface_from_cycle: unbalanced edge " + edge_name(edge));
    for (size_t i = 0; i < fw.size(); ++i) {
      auto [k, e] = fw[i];
      auto [l, f] = bw[i];
      corners.unite(static_cast<int>(3 * k + static_cast<size_t>(e)), static_cast<int>(3 * l + static_cast<size_t>((f + 1) % 3)));
      corners.unite(static_cast<int>(3 * k + static_cast<size_t>((e + 1) % 3)), static_cast<int>(3 * l + static_cast<size_t>(f)));
      side_pairing[k][static_cast<size_t>(e)] = pairing_count;
      side_pairing[l][static_cast<size_t>(f)] = pairing_count;
      ++pairing_count;
    }
  }
  std::map<int, int> class_id;
  std::vector<int> class_image;
  auto vertex_of = [&](size_t k, int pos) {
    int root = corners.find(static_cast<int>(3 * k + static_cast<size_t>(pos)));
    auto [it, inserted] = class_id.emplace(root, static_cast<int>(class_image.size()));
    if (inserted) class_image.push_back(occ[k][static_cast<size_t>(pos)]);
    return it->second;
  };
  std::vector<Tri> tris(m);
  for (size_t k = 0; k < m; ++k)
    for (int p = 0; p < 3; ++p) tris[k][static_cast<size_t>(p)] = vertex_of(k, p);

  // A simplicial surface needs distinct triangles and each edge used by exactly one pairing.
  bool simplicial = true;
  std::set<std::array<int, 3>> seen_tris;
  std::map<Edge, std::set<int>> edge_pairings;
  for (size_t k = 0; k < m; ++k) {
    std::array<int, 3> s = tris[k];
    std::sort(s.begin(), s.end());
    if (!seen_tris.insert(s).second) simplicial = false;
    for (int e = 0; e < 3; ++e)
      edge_pairings[undirected(tris[k][static_cast<size_t>(e)], tris[k][static_cast<size_t>((e + 1) % 3)])].insert(
          side_pairing[k][static_cast<size_t>(e)]);
  }
  for (const auto& [e, ps] : edge_pairings)
    if (ps.size() != 1) simplicial = false;

  Raw r;
  r.space = X;
  if (simplicial) {
    r.images = class_image;
    r.tris = tris;
  } else {
    // Barycentric subdivision; new vertices map to the smallest image below them.
    r.images = class_image;
    std::vector<int> midpoint(static_cast<size_t>(pairing_count), -1);
    for (size_t k = 0; k < m; ++k) {
      const Tri& t = tris[k];
      int center = r.add_vertex(std::min({occ[k][0], occ[k][1], occ[k][2]}));
      for (int e = 0; e < 3; ++e) {
        int& mid = midpoint[static_cast<size_t>(side_pairing[k][static_cast<size_t>(e)])];
        if (mid < 0)
          mid = r.add_vertex(std::min(occ[k][static_cast<size_t>(e)], occ[k][static_cast<size_t>((e + 1) % 3)]));
      }
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          if (i == j) continue;
          int side = (j == (i + 1) % 3) ? i : j;  // side between positions i and j
          int mid = midpoint[static_cast<size_t>(side_pairing[k][static_cast<size_t>(side)])];
          bool even = j == (i + 1) % 3;
          int a = t[static_cast<size_t>(i)];
          if (even) r.tris.push_back({a, mid, center});
          else r.tris.push_back({a, center, mid});
        }
    }
  }
  XSurface g = from_raw(r);
  if (!(g.pushed_cycle() == y)) throw InvariantViolation("surface_from_cycle: push-forward differs from the input cycle");
  return g;
}

MappedCircles object_from_cycle(const ComplexPtr& X, const Chain& z) {
  require_in(*X, z, "object_from_cycle");
  MappedCircles object{X, {}};
  if (z.is_zero()) return object;
  if (z.dim() != 1) throw DimensionError("object_from_cycle needs a 1-chain");
  if (!boundary(z).is_zero()) throw PreconditionError("object_from_cycle: chain " + to_string(z) + " is not a cycle");
  std::map<int, std::multiset<int>> out_edges;
  for (const auto& [s, c] : z.terms()) {
    int a = s.vertices[0], b = s.vertices[1];
    if (c < 0) std::swap(a, b);
    for (Integer k = 0; k < (c > 0 ? c : Integer(-c)); ++k) out_edges[a].insert(b);
  }
  for (;;) {
    auto start_it = std::find_if(out_edges.begin(), out_edges.end(), [](const auto& kv) { return !kv.second.empty(); });
    if (start_it == out_edges.end()) break;
    const int start = start_it->first;
    std::vector<int> circuit{start};
    int v = start;
    for (;;) {
      auto& outs = out_edges[v];
      if (outs.empty()) throw InvariantViolation("object_from_cycle: walk got stuck at vertex " + std::to_string(v));
      int w = *outs.begin();
      outs.erase(outs.begin());
      if (w == start) break;
      circuit.push_back(w);
      v = w;
    }
    while (circuit.size() < 3) circuit.push_back(circuit.back());
    object.images.push_back(std::move(circuit));
  }
  validate(object);
  if (!(object.canonical_cycle() == z)) throw InvariantViolation("object_from_cycle: canonical cycle differs");
  return object;
}

}  // namespace hqft
