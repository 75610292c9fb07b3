#pragma once

#include "hqft/numeric.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hqft {

class CoeffElement;

/// Abelian coefficient group, written additively. Direct sums are flattened
/// into a list of cyclic, Q/Z and Z summands.
class CoeffGroup {
 public:
  enum class Kind { Cyclic, RationalCircle, FreeInt };
  struct Atom {
    Kind kind;
    Integer order;  // only meaningful for Cyclic
    bool operator==(const Atom&) const = default;
  };

  CoeffGroup();
  static CoeffGroup cyclic(const Integer& n);
  static CoeffGroup rational_circle();
  static CoeffGroup integers();
  static CoeffGroup direct_sum(const std::vector<CoeffGroup>& parts);
  /// Accepts "z", "z/6", "q/z" and '+'-joined sums such as "z/2+q/z".
  static CoeffGroup parse(const std::string& spec);

  size_t arity() const { return atoms_->size(); }
  const Atom& atom(size_t i) const { return (*atoms_)[i]; }
  bool is_finite() const;
  Integer order() const;
  bool is_divisible() const;

  CoeffElement zero() const;
  /// Element from raw components, reduced to canonical form.
  CoeffElement element(const std::vector<Rational>& components) const;
  CoeffElement element(const Rational& value) const;
  /// Comma-joined literals, each an integer or "a/b".
  CoeffElement parse_element(const std::string& literal) const;
  /// Every element of a finite group, in lexicographic component order.
  std::vector<CoeffElement> elements() const;

  std::string to_string() const;
  bool operator==(const CoeffGroup& o) const { return *atoms_ == *o.atoms_; }

 private:
  explicit CoeffGroup(std::vector<Atom> atoms);
  std::shared_ptr<const std::vector<Atom>> atoms_;
};

/// Element of a CoeffGroup in canonical form: residues in [0,n), rationals in [0,1).
class CoeffElement {
 public:
  CoeffElement() = default;

  const CoeffGroup& group() const { return group_; }
  const std::vector<Rational>& components() const { return c_; }
  bool is_zero() const;

  CoeffElement& operator+=(const CoeffElement& o);
  CoeffElement& operator-=(const CoeffElement& o);
  CoeffElement operator-() const;
  friend CoeffElement operator+(CoeffElement a, const CoeffElement& b) { return a += b; }
  friend CoeffElement operator-(CoeffElement a, const CoeffElement& b) { return a -= b; }
  friend CoeffElement operator*(const Integer& k, const CoeffElement& a);
  bool operator==(const CoeffElement& o) const;
  bool operator<(const CoeffElement& o) const { return c_ < o.c_; }

  /// Additive order, or nullopt for elements of infinite order.
  std::optional<Integer> order() const;
  std::string to_string() const;

 private:
  friend class CoeffGroup;
  CoeffGroup group_;
  std::vector<Rational> c_;
};

/// Finitely generated abelian group Z/d_1 + ... + Z/d_t + Z^rank with d_i | d_{i+1}.
/// Elements are integer vectors, torsion coordinates first.
class FgAbGroup {
 public:
  FgAbGroup() = default;
  FgAbGroup(std::vector<Integer> invariant_factors, int rank, std::vector<std::string> labels = {});
  /// Invariant-factor form of the sum of Z/n_i, where n_i = 0 stands for Z.
  static FgAbGroup from_orders(const std::vector<Integer>& cyclic_orders);

  int rank() const { return rank_; }
  const std::vector<Integer>& invariant_factors() const { return factors_; }
  int torsion_count() const { return static_cast<int>(factors_.size()); }
  int generator_count() const { return torsion_count() + rank_; }
  /// Order of generator i, or 0 for a free generator.
  Integer generator_order(int i) const;
  const std::vector<std::string>& labels() const { return labels_; }

  bool is_finite() const { return rank_ == 0; }
  bool is_trivial() const { return generator_count() == 0; }
  Integer order() const;

  IntVector zero() const { return IntVector::Zero(generator_count()); }
  IntVector generator(int i) const;
  IntVector reduce(const IntVector& x) const;
  bool contains(const IntVector& x) const { return x.size() == generator_count(); }
  std::vector<IntVector> elements() const;

  /// "0", "Z", "Z^2", "Z/2", "Z/2 + Z".
  std::string to_string() const;
  bool operator==(const FgAbGroup& o) const {
    return rank_ == o.rank_ && factors_ == o.factors_;
  }

 private:
  std::vector<Integer> factors_;
  int rank_ = 0;
  std::vector<std::string> labels_;
};

/// Homomorphism from an FgAbGroup into a coefficient group, given on generators.
struct GroupHom {
  FgAbGroup source;
  CoeffGroup target;
  std::vector<CoeffElement> values;

  CoeffElement operator()(const IntVector& x) const;
  bool operator==(const GroupHom& o) const { return values == o.values; }
};

/// Validates that each torsion generator of order d goes to an element killed by d.
GroupHom hom_values(const FgAbGroup& G, const CoeffGroup& A, const std::vector<CoeffElement>& assignment);

/// Every homomorphism G -> A for finite A, in lexicographic order of values.
std::vector<GroupHom> all_homs(const FgAbGroup& G, const CoeffGroup& A);
/// |Hom(G, A)| for finite A.
Integer hom_order(const FgAbGroup& G, const CoeffGroup& A);

/// Canonical representative of a modulo d*A.
CoeffElement reduce_mod_multiples(const CoeffElement& a, const Integer& d);

/// Smallest canonical x with n*x = target, if any.
std::optional<CoeffElement> solve_division(const CoeffGroup& A, const Integer& n, const CoeffElement& target);

/// Solves M x = b for x in A^cols, where M is an integer matrix and b in A^rows.
std::optional<std::vector<CoeffElement>> solve_linear(const IntMatrix& M, const std::vector<CoeffElement>& b,
                                                      const CoeffGroup& A);

/// Class in Ext(G, A): one value per torsion factor d_i, taken modulo d_i A.
struct ExtClass {
  std::vector<CoeffElement> values;
  bool operator==(const ExtClass& o) const { return values == o.values; }
  bool is_zero() const;
  std::string to_string() const;
};

/// Ext(G, A) = sum over torsion factors d_i of A / d_i A.
struct ExtGroup {
  FgAbGroup base;
  CoeffGroup fiber;
  /// Order of each summand A / d_i A, one entry per torsion factor.
  std::vector<Integer> summand_orders;

  Integer order() const;
  /// The same group as an FgAbGroup in invariant-factor form.
  FgAbGroup as_group() const;
  ExtClass zero() const;
  ExtClass canonical(const ExtClass& c) const;
  ExtClass add(const ExtClass& a, const ExtClass& b) const;
  ExtClass negate(const ExtClass& a) const;
  /// All classes, in lexicographic order of canonical values.
  std::vector<ExtClass> classes() const;
};

ExtGroup ext_group(const FgAbGroup& G, const CoeffGroup& A);

/// Element (a, x) of an extension of the base by the fiber.
struct ExtElement {
  CoeffElement a;
  IntVector x;
  bool operator==(const ExtElement& o) const { return a == o.a && x.size() == o.x.size() && x == o.x; }
};

/// Abelian extension 0 -> A -> G^ -> G -> 0 described by a normalised
/// symmetric 2-cocycle, with (a,x)+(b,y) = (a+b+c(x,y), x+y).
class Extension {
 public:
  using Cocycle = std::function<CoeffElement(const IntVector&, const IntVector&)>;

  Extension(FgAbGroup base, CoeffGroup fiber, Cocycle cocycle);

  const FgAbGroup& base() const { return base_; }
  const CoeffGroup& fiber() const { return fiber_; }
  CoeffElement cocycle(const IntVector& x, const IntVector& y) const;

  ExtElement zero() const;
  ExtElement add(const ExtElement& u, const ExtElement& v) const;
  ExtElement negate(const ExtElement& u) const;
  ExtElement scale(const Integer& k, const ExtElement& u) const;
  ExtElement include(const CoeffElement& a) const;
  ExtElement section(const IntVector& x) const;
  IntVector project(const ExtElement& u) const { return u.x; }
  bool contains(const ExtElement& u) const;

  /// Every element when base and fiber are finite.
  std::vector<ExtElement> elements() const;
  /// Class in Ext(base, fiber): for a torsion generator e of order d, the
  /// fiber part of d*(0,e).
  ExtClass ext_class() const;

 private:
  FgAbGroup base_;
  CoeffGroup fiber_;
  Cocycle cocycle_;
};

/// Extension with the carry cocycle c(x,y) = sum_i [x_i + y_i >= d_i] alpha_i.
Extension extension_from_class(const FgAbGroup& G, const CoeffGroup& A, const ExtClass& cls);

}  // namespace hqft
