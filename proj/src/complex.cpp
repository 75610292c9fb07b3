#include "hqft/complex.hpp"

#include "hqft/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace hqft {

Simplex::Simplex(std::vector<int> v) : vertices(std::move(v)) {
  for (size_t i = 1; i < vertices.size(); ++i)
    if (vertices[i - 1] >= vertices[i])
      throw MalformedInput("simplex vertices must be strictly increasing: " + to_string(*this));
}

Simplex Simplex::face(size_t omit) const {
  Simplex f;
  f.vertices.reserve(vertices.size() - 1);
  for (size_t i = 0; i < vertices.size(); ++i)
    if (i != omit) f.vertices.push_back(vertices[i]);
  return f;
}

std::string to_string(const Simplex& s) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < s.vertices.size(); ++i) os << (i ? "," : "") << s.vertices[i];
  os << ')';
  return os.str();
}

std::optional<OrientedSimplex> OrientedSimplex::from_tuple(const std::vector<int>& vertices) {
  std::vector<int> v = vertices;
  int sign = 1;
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = 0; j + 1 < v.size() - i; ++j)
      if (v[j] > v[j + 1]) {
        std::swap(v[j], v[j + 1]);
        sign = -sign;
      }
  for (size_t i = 1; i < v.size(); ++i)
    if (v[i - 1] == v[i]) return std::nullopt;
  OrientedSimplex out;
  out.simplex.vertices = std::move(v);
  out.sign = sign;
  return out;
}

Eigen::Index SimplicialComplex::count(int k) const {
  if (k < 0 || k > dim()) return 0;
  return static_cast<Eigen::Index>(by_dim_[static_cast<size_t>(k)].size());
}

const std::vector<Simplex>& SimplicialComplex::simplices(int k) const {
  static const std::vector<Simplex> empty;
  if (k < 0 || k > dim()) return empty;
  return by_dim_[static_cast<size_t>(k)];
}

std::optional<Eigen::Index> SimplicialComplex::index_of(const Simplex& s) const {
  int k = s.dim();
  if (k < 0 || k > dim()) return std::nullopt;
  const auto& idx = index_[static_cast<size_t>(k)];
  auto it = idx.find(s);
  if (it == idx.end()) return std::nullopt;
  return it->second;
}

std::vector<Simplex> SimplicialComplex::maximal_simplices() const {
  std::set<Simplex> covered;
  for (int k = 1; k <= dim(); ++k)
    for (const auto& s : simplices(k))
      for (size_t i = 0; i < s.vertices.size(); ++i) covered.insert(s.face(i));
  std::vector<Simplex> out;
  for (int k = 0; k <= dim(); ++k)
    for (const auto& s : simplices(k))
      if (!covered.count(s)) out.push_back(s);
  return out;
}

ComplexPtr build_complex(const std::vector<std::vector<int>>& maximal,
                         std::optional<int> vertex_count) {
  std::vector<std::set<Simplex>> sets;
  int max_vertex = -1;
  for (const auto& tuple : maximal) {
    if (tuple.empty()) throw MalformedInput("empty simplex in complex description");
    std::vector<int> v = tuple;
    std::sort(v.begin(), v.end());
    for (size_t i = 0; i < v.size(); ++i) {
      if (v[i] < 0) throw MalformedInput("negative vertex id " + std::to_string(v[i]));
      if (i && v[i] == v[i - 1])
        throw MalformedInput("duplicate vertex " + std::to_string(v[i]) + " in one simplex");
    }
    max_vertex = std::max(max_vertex, v.back());
    size_t n = v.size();
    if (sets.size() < n) sets.resize(n);
    // enumerate all non-empty subsets
    if (n > 20) throw MalformedInput("simplex of dimension above 19 is not supported");
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      Simplex s;
      for (size_t i = 0; i < n; ++i)
        if (mask & (1u << i)) s.vertices.push_back(v[i]);
      sets[s.vertices.size() - 1].insert(std::move(s));
    }
  }
  int n = vertex_count.value_or(max_vertex + 1);
  if (n <= max_vertex)
    throw MalformedInput("vertex id " + std::to_string(max_vertex) + " is not below vertex count " +
                         std::to_string(n));
  if (n > 0 && sets.empty()) sets.resize(1);
  for (int v = 0; v < n; ++v) sets[0].insert(Simplex{v});

  auto X = std::make_shared<SimplicialComplex>();
  X->vertex_count_ = n;
  for (auto& set : sets) {
    X->by_dim_.emplace_back(set.begin(), set.end());
    std::map<Simplex, Eigen::Index> idx;
    Eigen::Index i = 0;
    for (const auto& s : X->by_dim_.back()) idx.emplace(s, i++);
    X->index_.push_back(std::move(idx));
  }
  return X;
}

IntMatrix boundary_operator(const SimplicialComplex& X, int k) {
  IntMatrix D = IntMatrix::Zero(X.count(k - 1), X.count(k));
  if (k < 1 || k > X.dim()) return D;
  const auto& cols = X.simplices(k);
  for (Eigen::Index j = 0; j < static_cast<Eigen::Index>(cols.size()); ++j) {
    const Simplex& s = cols[static_cast<size_t>(j)];
    for (size_t i = 0; i < s.vertices.size(); ++i)
      D(*X.index_of(s.face(i)), j) = (i % 2 == 0) ? 1 : -1;
  }
  return D;
}

IntMatrix boundary_matrix(const SimplicialComplex& X, int k) {
  if (k < 1 || k > X.dim())
    throw DimensionError("boundary_matrix: degree " + std::to_string(k) + " outside [1, " +
                         std::to_string(X.dim()) + "]");
  return boundary_operator(X, k);
}

Integer Chain::coefficient(const Simplex& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Integer(0) : it->second;
}

void Chain::add(const Simplex& s, const Integer& c) {
  if (s.dim() != dim_)
    throw DimensionError("cannot add " + std::to_string(s.dim()) + "-simplex " + to_string(s) +
                         " to a " + std::to_string(dim_) + "-chain");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Chain& Chain::operator+=(const Chain& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) dim_ = o.dim_;
  for (const auto& [s, c] : o.terms_) add(s, c);
  return *this;
}

Chain& Chain::operator-=(const Chain& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) dim_ = o.dim_;
  for (const auto& [s, c] : o.terms_) add(s, -c);
  return *this;
}

Chain Chain::operator-() const {
  Chain out(dim_);
  for (const auto& [s, c] : terms_) out.terms_.emplace(s, -c);
  return out;
}

Chain operator*(const Integer& k, const Chain& c) {
  Chain out(c.dim());
  if (k == 0) return out;
  for (const auto& [s, v] : c.terms()) out.add(s, k * v);
  return out;
}

std::string to_string(const Chain& c) {
  if (c.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, v] : c.terms()) {
    if (!first) os << (v < 0 ? " - " : " + ");
    else if (v < 0) os << '-';
    Integer a = v < 0 ? Integer(-v) : v;
    if (a != 1) os << a.str() << '*';
    os << to_string(s);
    first = false;
  }
  return os.str();
}

Chain boundary(const Chain& c) {
  if (c.dim() < 1) throw DimensionError("boundary of a 0-chain is undefined");
  Chain out(c.dim() - 1);
  for (const auto& [s, v] : c.terms())
    for (size_t i = 0; i < s.vertices.size(); ++i) out.add(s.face(i), (i % 2 == 0) ? v : Integer(-v));
  return out;
}

void require_in(const SimplicialComplex& X, const Chain& c, const std::string& what) {
  for (const auto& [s, v] : c.terms())
    if (!X.contains(s)) throw DomainMismatch(what + ": simplex " + to_string(s) + " is not in the complex");
}

IntVector to_vector(const SimplicialComplex& X, const Chain& c) {
  require_in(X, c, "to_vector");
  IntVector v = IntVector::Zero(X.count(c.dim()));
  for (const auto& [s, k] : c.terms()) v(*X.index_of(s)) = k;
  return v;
}

Chain from_vector(const SimplicialComplex& X, int k, const IntVector& v) {
  if (v.size() != X.count(k))
    throw DimensionError("from_vector: length " + std::to_string(v.size()) + " but complex has " +
                         std::to_string(X.count(k)) + " " + std::to_string(k) + "-simplices");
  Chain c(k);
  const auto& list = X.simplices(k);
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v(i) != 0) c.add(list[static_cast<size_t>(i)], v(i));
  return c;
}

SimplicialMap::SimplicialMap(ComplexPtr dom, ComplexPtr cod, std::vector<int> vmap)
    : domain(std::move(dom)), codomain(std::move(cod)), vertex_map(std::move(vmap)) {
  if (!domain || !codomain) throw PreconditionError("simplicial map needs both complexes");
  if (static_cast<int>(vertex_map.size()) != domain->vertex_count())
    throw MalformedInput("vertex map has " + std::to_string(vertex_map.size()) +
                         " entries, domain has " + std::to_string(domain->vertex_count()) + " vertices");
  for (size_t v = 0; v < vertex_map.size(); ++v)
    if (vertex_map[v] < 0 || vertex_map[v] >= codomain->vertex_count())
      throw MalformedInput("vertex " + std::to_string(v) + " maps to " + std::to_string(vertex_map[v]) +
                           ", which is not a vertex of the codomain");
  for (const auto& s : domain->maximal_simplices()) {
    std::vector<int> img;
    for (int v : s.vertices) img.push_back(vertex_map[static_cast<size_t>(v)]);
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    Simplex t;
    t.vertices = img;
    if (!codomain->contains(t))
      throw InvariantViolation("image of simplex " + to_string(s) + " is " + to_string(t) +
                               ", which is not a simplex of the codomain");
  }
}

SimplicialMap SimplicialMap::identity(const ComplexPtr& X) {
  std::vector<int> v(static_cast<size_t>(X->vertex_count()));
  for (size_t i = 0; i < v.size(); ++i) v[i] = static_cast<int>(i);
  return SimplicialMap(X, X, std::move(v));
}

SimplicialMap SimplicialMap::constant(const ComplexPtr& domain, const ComplexPtr& codomain, int vertex) {
  return SimplicialMap(domain, codomain,
                       std::vector<int>(static_cast<size_t>(domain->vertex_count()), vertex));
}

SimplicialMap compose(const SimplicialMap& m2, const SimplicialMap& m1) {
  if (m1.codomain != m2.domain &&
      (m1.codomain->vertex_count() != m2.domain->vertex_count() ||
       m1.codomain->maximal_simplices() != m2.domain->maximal_simplices()))
    throw DomainMismatch("compose: codomain of the first map is not the domain of the second");
  std::vector<int> v(m1.vertex_map.size());
  for (size_t i = 0; i < v.size(); ++i) v[i] = m2(m1.vertex_map[i]);
  return SimplicialMap(m1.domain, m2.codomain, std::move(v));
}

Chain push_forward(const SimplicialMap& m, const Chain& c) {
  require_in(*m.domain, c, "push_forward");
  Chain out(c.dim());
  std::vector<int> img;
  for (const auto& [s, k] : c.terms()) {
    img.clear();
    for (int v : s.vertices) img.push_back(m(v));
    auto o = OrientedSimplex::from_tuple(img);
    if (o) out.add(*o, k);
  }
  return out;
}

}  // namespace hqft
