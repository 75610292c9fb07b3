#include "hqft/sampling.hpp"

#include "hqft/errors.hpp"
#include "hqft/smith.hpp"

#include <cstdlib>
#include <deque>
#include <set>

namespace hqft {

namespace {

std::vector<std::vector<int>> adjacency(const SimplicialComplex& X) {
  std::vector<std::vector<int>> adj(static_cast<size_t>(X.vertex_count()));
  for (const auto& e : X.simplices(1)) {
    adj[static_cast<size_t>(e.vertices[0])].push_back(e.vertices[1]);
    adj[static_cast<size_t>(e.vertices[1])].push_back(e.vertices[0]);
  }
  return adj;
}

std::vector<int> shortest_path(const std::vector<std::vector<int>>& adj, int from, int to) {
  std::vector<int> prev(adj.size(), -2);
  std::deque<int> queue{from};
  prev[static_cast<size_t>(from)] = -1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    if (v == to) break;
    for (int w : adj[static_cast<size_t>(v)])
      if (prev[static_cast<size_t>(w)] == -2) {
        prev[static_cast<size_t>(w)] = v;
        queue.push_back(w);
      }
  }
  std::vector<int> path;
  for (int v = to; v != -1; v = prev[static_cast<size_t>(v)]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

std::uint64_t Sampler::seed_from_env(std::uint64_t fallback) {
  const char* s = std::getenv("HQFT_SEED");
  if (!s || !*s) return fallback;
  try {
    size_t used = 0;
    auto v = std::stoull(s, &used);
    if (used != std::string(s).size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw MalformedInput(std::string("HQFT_SEED is not an unsigned integer: ") + s);
  }
}

int Sampler::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

bool Sampler::coin(double p) { return std::bernoulli_distribution(p)(engine_); }

CoeffElement Sampler::element(const CoeffGroup& A) {
  std::vector<Rational> c;
  for (size_t i = 0; i < A.arity(); ++i) {
    const auto& atom = A.atom(i);
    switch (atom.kind) {
      case CoeffGroup::Kind::Cyclic: {
        Integer bound = atom.order > 1000000 ? Integer(1000000) : atom.order;
        c.emplace_back(Integer(uniform(0, static_cast<int>(bound) - 1)));
        break;
      }
      case CoeffGroup::Kind::RationalCircle: {
        int b = uniform(1, 12);
        c.emplace_back(Rational(Integer(uniform(0, b - 1)), Integer(b)));
        break;
      }
      case CoeffGroup::Kind::FreeInt:
        c.emplace_back(Integer(uniform(-5, 5)));
        break;
    }
  }
  return A.element(c);
}

Cochain Sampler::cochain(const ComplexPtr& X, int degree, const CoeffGroup& A) {
  Cochain f(X, degree, A);
  for (Eigen::Index i = 0; i < X->count(degree); ++i) f.set(i, element(A));
  return f;
}

const CohomologyGroup& Sampler::cohomology_of(const ComplexPtr& X, const CoeffGroup& A) {
  auto key = std::make_pair(X, A.to_string());
  auto it = cohomology_.find(key);
  if (it == cohomology_.end())
    it = cohomology_.emplace(key, std::make_shared<CohomologyGroup>(cohomology(X, A, 2))).first;
  return *it->second;
}

const IntMatrix& Sampler::integer_cocycles(const ComplexPtr& X) {
  auto it = integer_cocycles_.find(X);
  if (it == integer_cocycles_.end()) {
    const IntMatrix D3 = boundary_operator(*X, 3);
    it = integer_cocycles_.emplace(X, kernel_basis(IntMatrix(D3.transpose()))).first;
  }
  return it->second;
}

const HomologyGroup& Sampler::h2_of(const ComplexPtr& X) {
  auto it = h2_.find(X);
  if (it == h2_.end()) it = h2_.emplace(X, std::make_shared<HomologyGroup>(homology(X, 2))).first;
  return *it->second;
}

Cochain Sampler::cocycle(const ComplexPtr& X, const CoeffGroup& A) {
  Cochain theta(X, 2, A);
  if (A.is_finite()) {
    const auto& C = cohomology_of(X, A);
    std::vector<Integer> coords;
    for (const auto& n : C.coordinate_orders)
      coords.push_back(Integer(uniform(0, static_cast<int>(n > 1000000 ? Integer(1000000) : n) - 1)));
    theta = C.representative(coords);
  } else {
    const IntMatrix& Z = integer_cocycles(X);
    IntVector lift = IntVector::Zero(Z.rows());
    for (Eigen::Index j = 0; j < Z.cols(); ++j) lift += Integer(uniform(-2, 2)) * Z.col(j);
    std::vector<Integer> denominators;
    for (size_t a = 0; a < A.arity(); ++a) denominators.push_back(Integer(uniform(1, 12)));
    for (Eigen::Index i = 0; i < lift.size(); ++i) {
      std::vector<Rational> c;
      for (size_t a = 0; a < A.arity(); ++a) {
        if (A.atom(a).kind == CoeffGroup::Kind::RationalCircle) c.emplace_back(Rational(lift(i), denominators[a]));
        else c.emplace_back(lift(i));
      }
      theta.set(i, A.element(c));
    }
  }
  return theta + coboundary(cochain(X, 1, A));
}

std::vector<int> Sampler::loop(const ComplexPtr& X) {
  const auto adj = adjacency(*X);
  std::vector<int> with_edges;
  for (size_t v = 0; v < adj.size(); ++v)
    if (!adj[v].empty()) with_edges.push_back(static_cast<int>(v));
  if (with_edges.empty()) {
    int v = uniform(0, X->vertex_count() - 1);
    return {v, v, v};
  }
  const int start = pick(with_edges);
  std::vector<int> walk{start};
  int v = start;
  const int steps = uniform(2, 6);
  for (int i = 0; i < steps; ++i) {
    if (coin(0.15)) {
      walk.push_back(v);
      continue;
    }
    v = pick(adj[static_cast<size_t>(v)]);
    walk.push_back(v);
  }
  auto back = shortest_path(adj, v, start);
  walk.insert(walk.end(), back.begin() + 1, back.end());
  walk.pop_back();  // the walk closes up on start
  while (walk.size() < 3) walk.push_back(walk.back());
  return walk;
}

MappedCircles Sampler::object(const ComplexPtr& X, int max_circles) {
  MappedCircles m{X, {}};
  const int n = uniform(1, max_circles);
  for (int i = 0; i < n; ++i) m.images.push_back(loop(X));
  return m;
}

std::optional<std::pair<std::vector<int>, int>> Sampler::fan(const ComplexPtr& X) {
  if (X->dim() < 2) return std::nullopt;
  std::vector<int> order(static_cast<size_t>(X->vertex_count()));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), engine_);
  for (int a : order) {
    std::map<int, std::vector<int>> link;
    for (const auto& t : X->simplices(2)) {
      const auto& v = t.vertices;
      if (std::find(v.begin(), v.end(), a) == v.end()) continue;
      std::vector<int> rest;
      for (int w : v)
        if (w != a) rest.push_back(w);
      link[rest[0]].push_back(rest[1]);
      link[rest[1]].push_back(rest[0]);
    }
    if (link.empty()) continue;
    // A cycle through one link edge: drop the edge and find another path between its ends.
    for (const auto& [u, nbrs] : link)
      for (int w : nbrs) {
        if (w < u) continue;
        std::map<int, int> prev{{u, u}};
        std::deque<int> queue{u};
        while (!queue.empty() && !prev.count(w)) {
          int x = queue.front();
          queue.pop_front();
          for (int y : link[x]) {
            if ((x == u && y == w) || prev.count(y)) continue;
            prev[y] = x;
            queue.push_back(y);
          }
        }
        if (!prev.count(w)) continue;
        std::vector<int> cycle;
        for (int x = w; x != u; x = prev[x]) cycle.push_back(x);
        cycle.push_back(u);
        if (coin()) std::reverse(cycle.begin(), cycle.end());
        return std::make_pair(cycle, a);
      }
  }
  return std::nullopt;
}

XSurface Sampler::closed_piece(const ComplexPtr& X) {
  const int kind = uniform(0, 2);
  if (kind == 1) {
    const auto& H = h2_of(X);
    Chain y(2);
    for (const auto& g : H.generators) y += Integer(uniform(-1, 2)) * g;
    if (X->dim() >= 3 && coin()) {
      const auto& s = pick(X->simplices(3));
      Chain w(3);
      w.add(s, 1);
      y += boundary(w);
    }
    if (!y.is_zero()) return surface_from_cycle(X, y);
  }
  if (kind == 2) {
    if (auto f = fan(X)) {
      const MappedCircles circle{X, {f->first}};
      return glue(cone_cup(circle, f->second), cone_cap(circle, f->second));
    }
  }
  return constant_sphere(X, uniform(0, X->vertex_count() - 1));
}

XSurface Sampler::surgery(const XSurface& g) {
  std::vector<Simplex> tris;
  for (const auto& [s, c] : g.cycle.terms()) tris.push_back(s);
  if (tris.empty()) return g;
  const Simplex t1 = pick(tris);
  const int x = g.map(t1.vertices[0]);
  auto partners = [&](const XSurface& h) {
    std::vector<Simplex> out;
    for (const auto& [s, c] : h.cycle.terms())
      if (s != t1 && h.map(s.vertices[0]) == x) out.push_back(s);
    return out;
  };
  XSurface base = g;
  std::vector<Simplex> candidates = partners(base);
  if (candidates.empty()) {
    base = disjoint_union(g, constant_sphere(g.space(), x));
    candidates = partners(base);
  }
  const Simplex t2 = pick(candidates);
  auto p1 = insert_constant_patch_traced(base, t1, uniform(1, 2));
  auto p2 = insert_constant_patch_traced(p1.surface, t2, uniform(1, 2));
  SurgerySite site{SurgerySite::Kind::TwoDisks, {p1.grid, p2.grid}, {}};
  auto out = local_surgery_traced(p2.surface, site);
  switch (uniform(0, 2)) {
    case 0:
      return out.surface;
    case 1:
      return local_surgery(out.surface, out.inverse);
    default: {
      SurgerySite annulus = out.inverse;
      annulus.caps.clear();
      return local_surgery(out.surface, annulus);
    }
  }
}

XSurface Sampler::cobordism(const MappedCircles& from, int steps) {
  const ComplexPtr& X = from.space;
  XSurface g = identity_cylinder(from, 1);
  MappedCircles cur = from;
  for (int s = 0; s < steps; ++s) {
    XSurface h;
    switch (uniform(0, 5)) {
      case 0:
        h = identity_cylinder(cur, uniform(1, 2));
        break;
      case 1:
        h = cur.size() == 0
                ? identity_cylinder(cur, 1)
                : [&] {
                    size_t c = static_cast<size_t>(uniform(0, static_cast<int>(cur.size()) - 1));
                    size_t p = static_cast<size_t>(uniform(0, static_cast<int>(cur.images[c].size()) - 1));
                    return insertion_cylinder(cur, c, p);
                  }();
        break;
      case 2:
        h = disjoint_union(identity_cylinder(cur, 1), closed_piece(X));
        break;
      case 3: {
        auto f = fan(X);
        h = f ? disjoint_union(identity_cylinder(cur, 1), cone_cup(MappedCircles{X, {f->first}}, f->second))
              : identity_cylinder(cur, 1);
        break;
      }
      case 4: {
        if (cur.size() < 2) {
          h = identity_cylinder(cur, 1);
          break;
        }
        const int k = uniform(1, static_cast<int>(cur.size()) - 1);
        MappedCircles a{X, {cur.images.begin(), cur.images.begin() + k}};
        MappedCircles b{X, {cur.images.begin() + k, cur.images.end()}};
        h = swap_cylinder(a, b);
        break;
      }
      default: {
        if (cur.size() == 0) {
          h = identity_cylinder(cur, 1);
          break;
        }
        MappedCircles first{X, {cur.images[0]}};
        MappedCircles rest{X, {cur.images.begin() + 1, cur.images.end()}};
        h = disjoint_union(pants(first), identity_cylinder(rest, 1));
        // pants outputs [first, constant]; move the constant circle to the end
        std::vector<size_t> in(h.inputs.size()), out;
        std::iota(in.begin(), in.end(), 0);
        out.push_back(0);
        for (size_t i = 2; i < h.outputs.size(); ++i) out.push_back(i);
        out.push_back(1);
        h = permute_boundary(h, in, out);
        break;
      }
    }
    g = glue(g, h);
    cur = h.output_object();
    if (coin(0.3)) g = surgery(g);
  }
  return g;
}

XSurface Sampler::endomorphism(const MappedCircles& object) {
  XSurface h = cobordism(object, uniform(1, 2));
  XSurface g = glue(h, reverse(h));
  if (coin()) g = glue(g, disjoint_union(identity_cylinder(object, 1), closed_piece(object.space)));
  if (coin(0.4)) g = surgery(g);
  return g;
}

XSurface Sampler::closed_surface(const ComplexPtr& X) {
  XSurface g = closed_piece(X);
  if (coin(0.4)) g = disjoint_union(g, closed_piece(X));
  if (coin(0.3)) g = disjoint_union(g, close(endomorphism(object(X, 1))));
  const int surgeries = uniform(0, 1);
  for (int i = 0; i < surgeries; ++i) g = surgery(g);
  return g;
}

}  // namespace hqft
