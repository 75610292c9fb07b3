#pragma once

#include "hqft/numeric.hpp"

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hqft {

/// A simplex stored by its strictly increasing vertex ids.
struct Simplex {
  std::vector<int> vertices;

  Simplex() = default;
  explicit Simplex(std::vector<int> v);
  Simplex(std::initializer_list<int> v) : Simplex(std::vector<int>(v)) {}

  int dim() const { return static_cast<int>(vertices.size()) - 1; }
  Simplex face(size_t omit) const;

  auto operator<=>(const Simplex&) const = default;
  bool operator==(const Simplex&) const = default;
};

std::string to_string(const Simplex& s);

/// A simplex together with an orientation relative to increasing vertex order.
struct OrientedSimplex {
  Simplex simplex;
  int sign = 1;

  /// Sorts an arbitrary vertex tuple and records the parity of the sort.
  /// Returns nullopt when the tuple has a repeated vertex.
  static std::optional<OrientedSimplex> from_tuple(const std::vector<int>& vertices);

  OrientedSimplex operator-() const { return {simplex, -sign}; }
};

class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  int vertex_count() const { return vertex_count_; }
  int dim() const { return static_cast<int>(by_dim_.size()) - 1; }
  Eigen::Index count(int k) const;
  const std::vector<Simplex>& simplices(int k) const;
  std::optional<Eigen::Index> index_of(const Simplex& s) const;
  bool contains(const Simplex& s) const { return index_of(s).has_value(); }
  /// Simplices not contained in a larger simplex, in (dimension, lexicographic) order.
  std::vector<Simplex> maximal_simplices() const;

  friend std::shared_ptr<const SimplicialComplex> build_complex(
      const std::vector<std::vector<int>>& maximal, std::optional<int> vertex_count);

 private:
  int vertex_count_ = 0;
  std::vector<std::vector<Simplex>> by_dim_;
  std::vector<std::map<Simplex, Eigen::Index>> index_;
};

using ComplexPtr = std::shared_ptr<const SimplicialComplex>;

/// Downward closure of the given simplices. Every id below `vertex_count`
/// becomes a 0-simplex; by default vertex_count is one more than the largest id.
ComplexPtr build_complex(const std::vector<std::vector<int>>& maximal,
                         std::optional<int> vertex_count = std::nullopt);

/// Incidence matrix of the k-th boundary map, rows indexed by (k-1)-simplices.
IntMatrix boundary_matrix(const SimplicialComplex& X, int k);

/// Same as boundary_matrix but total in k: out-of-range degrees give the
/// correctly shaped zero map.
IntMatrix boundary_operator(const SimplicialComplex& X, int k);

/// Integer k-chain, stored sparsely with no zero coefficients.
class Chain {
 public:
  explicit Chain(int dim = 0) : dim_(dim) {}

  int dim() const { return dim_; }
  const std::map<Simplex, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(const Simplex& s) const;

  void add(const Simplex& s, const Integer& c);
  void add(const OrientedSimplex& s, const Integer& c = 1) { add(s.simplex, c * s.sign); }

  Chain& operator+=(const Chain& o);
  Chain& operator-=(const Chain& o);
  Chain operator-() const;
  friend Chain operator+(Chain a, const Chain& b) { return a += b; }
  friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
  friend Chain operator*(const Integer& k, const Chain& c);
  bool operator==(const Chain& o) const { return dim_ == o.dim_ && terms_ == o.terms_; }

 private:
  int dim_;
  std::map<Simplex, Integer> terms_;
};

std::string to_string(const Chain& c);

Chain boundary(const Chain& c);

/// Throws DomainMismatch if some simplex of c is not in X.
void require_in(const SimplicialComplex& X, const Chain& c, const std::string& what);

IntVector to_vector(const SimplicialComplex& X, const Chain& c);
Chain from_vector(const SimplicialComplex& X, int k, const IntVector& v);

/// Vertex map between complexes that sends every simplex onto a simplex.
struct SimplicialMap {
  ComplexPtr domain;
  ComplexPtr codomain;
  std::vector<int> vertex_map;

  SimplicialMap() = default;
  /// Validates that the image of each maximal simplex is a simplex of the codomain.
  SimplicialMap(ComplexPtr domain, ComplexPtr codomain, std::vector<int> vertex_map);

  static SimplicialMap identity(const ComplexPtr& X);
  static SimplicialMap constant(const ComplexPtr& domain, const ComplexPtr& codomain, int vertex);

  int operator()(int v) const { return vertex_map.at(static_cast<size_t>(v)); }
};

/// m2 after m1.
SimplicialMap compose(const SimplicialMap& m2, const SimplicialMap& m1);

Chain push_forward(const SimplicialMap& m, const Chain& c);

}  // namespace hqft
