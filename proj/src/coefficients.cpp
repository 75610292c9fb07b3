#include "hqft/coefficients.hpp"

#include "hqft/errors.hpp"
#include "hqft/smith.hpp"

#include <algorithm>
#include <cctype>
#include <regex>
#include <sstream>

namespace hqft {

namespace {

using Kind = CoeffGroup::Kind;

Rational normalize_atom(const CoeffGroup::Atom& atom, const Rational& v) {
  switch (atom.kind) {
    case Kind::Cyclic: {
      if (boost::multiprecision::denominator(v) != 1)
        throw DomainMismatch("value " + to_string(v) + " is not an integer residue");
      return Rational(mod_positive(boost::multiprecision::numerator(v), atom.order));
    }
    case Kind::RationalCircle: {
      Integer num = boost::multiprecision::numerator(v);
      Integer den = boost::multiprecision::denominator(v);
      return v - Rational(floor_div(num, den));
    }
    case Kind::FreeInt:
      if (boost::multiprecision::denominator(v) != 1)
        throw DomainMismatch("value " + to_string(v) + " is not an integer");
      return v;
  }
  return v;
}

Integer to_integer(const Rational& v) { return boost::multiprecision::numerator(v); }

Integer lcm(const Integer& a, const Integer& b) { return a / gcd(a, b) * b; }

// Modular inverse of a modulo m, for gcd(a, m) = 1.
Integer inverse_mod(const Integer& a, const Integer& m) {
  if (m == 1) return 0;
  Integer old_r = mod_positive(a, m), r = m, old_s = 1, s = 0;
  while (r != 0) {
    Integer q = old_r / r;
    Integer t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  return mod_positive(old_s, m);
}

Rational parse_rational(const std::string& text) {
  static const std::regex pattern(R"(\s*(-?\d+)(?:\s*/\s*(\d+))?\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern))
    throw MalformedInput("cannot parse coefficient literal '" + text + "'");
  Integer num(m[1].str());
  Integer den = m[2].matched ? Integer(m[2].str()) : Integer(1);
  if (den == 0) throw MalformedInput("zero denominator in '" + text + "'");
  return Rational(num, den);
}

}  // namespace

CoeffGroup::CoeffGroup() : atoms_(std::make_shared<const std::vector<Atom>>()) {}

CoeffGroup::CoeffGroup(std::vector<Atom> atoms)
    : atoms_(std::make_shared<const std::vector<Atom>>(std::move(atoms))) {}

CoeffGroup CoeffGroup::cyclic(const Integer& n) {
  if (n < 1) throw MalformedInput("cyclic group order must be at least 1, got " + n.str());
  return CoeffGroup({Atom{Kind::Cyclic, n}});
}

CoeffGroup CoeffGroup::rational_circle() { return CoeffGroup({Atom{Kind::RationalCircle, 0}}); }

CoeffGroup CoeffGroup::integers() { return CoeffGroup({Atom{Kind::FreeInt, 0}}); }

CoeffGroup CoeffGroup::direct_sum(const std::vector<CoeffGroup>& parts) {
  if (parts.empty()) throw MalformedInput("direct sum needs at least one summand");
  std::vector<Atom> atoms;
  for (const auto& p : parts) atoms.insert(atoms.end(), p.atoms_->begin(), p.atoms_->end());
  return CoeffGroup(std::move(atoms));
}

CoeffGroup CoeffGroup::parse(const std::string& spec) {
  std::string s;
  for (char ch : spec)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(static_cast<char>(std::tolower(ch)));
  if (s.empty()) throw MalformedInput("empty coefficient group");
  std::vector<CoeffGroup> parts;
  std::stringstream ss(s);
  std::string item;
  static const std::regex cyclic_pattern(R"(z/(\d+))");
  while (std::getline(ss, item, '+')) {
    std::smatch m;
    if (item == "z") parts.push_back(integers());
    else if (item == "q/z") parts.push_back(rational_circle());
    else if (std::regex_match(item, m, cyclic_pattern)) parts.push_back(cyclic(Integer(m[1].str())));
    else throw MalformedInput("unknown coefficient group '" + item + "' in '" + spec + "'");
  }
  if (parts.size() == 1) return parts.front();
  return direct_sum(parts);
}

bool CoeffGroup::is_finite() const {
  return std::all_of(atoms_->begin(), atoms_->end(), [](const Atom& a) { return a.kind == Kind::Cyclic; });
}

Integer CoeffGroup::order() const {
  if (!is_finite()) throw PreconditionError("group " + to_string() + " is infinite");
  Integer n = 1;
  for (const auto& a : *atoms_) n *= a.order;
  return n;
}

bool CoeffGroup::is_divisible() const {
  return std::all_of(atoms_->begin(), atoms_->end(), [](const Atom& a) {
    return a.kind == Kind::RationalCircle || (a.kind == Kind::Cyclic && a.order == 1);
  });
}

CoeffElement CoeffGroup::zero() const {
  CoeffElement e;
  e.group_ = *this;
  e.c_.assign(arity(), Rational(0));
  return e;
}

CoeffElement CoeffGroup::element(const std::vector<Rational>& components) const {
  if (components.size() != arity())
    throw DomainMismatch("element of " + to_string() + " needs " + std::to_string(arity()) +
                         " components, got " + std::to_string(components.size()));
  CoeffElement e;
  e.group_ = *this;
  e.c_.reserve(arity());
  for (size_t i = 0; i < arity(); ++i) e.c_.push_back(normalize_atom(atom(i), components[i]));
  return e;
}

CoeffElement CoeffGroup::element(const Rational& value) const { return element(std::vector<Rational>{value}); }

CoeffElement CoeffGroup::parse_element(const std::string& literal) const {
  std::vector<Rational> parts;
  std::stringstream ss(literal);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(parse_rational(item));
  if (literal.empty() || literal.back() == ',') throw MalformedInput("cannot parse coefficient literal '" + literal + "'");
  try {
    return element(parts);
  } catch (const DomainMismatch& e) {
    throw MalformedInput("literal '" + literal + "' is not an element of " + to_string() + ": " + e.what());
  }
}

std::vector<CoeffElement> CoeffGroup::elements() const {
  if (!is_finite()) throw PreconditionError("cannot enumerate the infinite group " + to_string());
  std::vector<CoeffElement> out;
  std::vector<Rational> c(arity(), Rational(0));
  for (;;) {
    out.push_back(element(c));
    size_t i = arity();
    while (i > 0) {
      --i;
      c[i] += 1;
      if (c[i] < Rational(atom(i).order)) break;
      c[i] = 0;
      if (i == 0) return out;
    }
    if (arity() == 0) return out;
  }
}

std::string CoeffGroup::to_string() const {
  if (atoms_->empty()) return "0";
  std::string s;
  for (const auto& a : *atoms_) {
    if (!s.empty()) s += "+";
    switch (a.kind) {
      case Kind::Cyclic: s += "z/" + a.order.str(); break;
      case Kind::RationalCircle: s += "q/z"; break;
      case Kind::FreeInt: s += "z"; break;
    }
  }
  return s;
}

bool CoeffElement::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r == 0; });
}

CoeffElement& CoeffElement::operator+=(const CoeffElement& o) {
  if (!(group_ == o.group_))
    throw DomainMismatch("cannot add elements of " + group_.to_string() + " and " + o.group_.to_string());
  for (size_t i = 0; i < c_.size(); ++i) c_[i] = normalize_atom(group_.atom(i), c_[i] + o.c_[i]);
  return *this;
}

CoeffElement& CoeffElement::operator-=(const CoeffElement& o) { return *this += -o; }

CoeffElement CoeffElement::operator-() const {
  CoeffElement out = *this;
  for (size_t i = 0; i < c_.size(); ++i) out.c_[i] = normalize_atom(group_.atom(i), -c_[i]);
  return out;
}

CoeffElement operator*(const Integer& k, const CoeffElement& a) {
  CoeffElement out = a;
  for (size_t i = 0; i < a.c_.size(); ++i)
    out.c_[i] = normalize_atom(a.group_.atom(i), Rational(k) * a.c_[i]);
  return out;
}

bool CoeffElement::operator==(const CoeffElement& o) const { return group_ == o.group_ && c_ == o.c_; }

std::optional<Integer> CoeffElement::order() const {
  Integer n = 1;
  for (size_t i = 0; i < c_.size(); ++i) {
    const auto& atom = group_.atom(i);
    switch (atom.kind) {
      case Kind::Cyclic: {
        Integer r = to_integer(c_[i]);
        n = lcm(n, atom.order / gcd(r, atom.order));
        break;
      }
      case Kind::RationalCircle: n = lcm(n, boost::multiprecision::denominator(c_[i])); break;
      case Kind::FreeInt:
        if (c_[i] != 0) return std::nullopt;
        break;
    }
  }
  return n;
}

std::string CoeffElement::to_string() const {
  std::string s;
  for (size_t i = 0; i < c_.size(); ++i) s += (i ? "," : "") + hqft::to_string(c_[i]);
  return s.empty() ? "0" : s;
}

FgAbGroup::FgAbGroup(std::vector<Integer> invariant_factors, int rank, std::vector<std::string> labels)
    : factors_(std::move(invariant_factors)), rank_(rank), labels_(std::move(labels)) {
  if (rank_ < 0) throw PreconditionError("negative rank");
  for (size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 2) throw PreconditionError("invariant factors must be at least 2");
    if (i && factors_[i] % factors_[i - 1] != 0)
      throw PreconditionError("invariant factors must form a divisibility chain");
  }
  if (labels_.empty())
    for (int i = 0; i < generator_count(); ++i) labels_.push_back("g" + std::to_string(i));
  if (static_cast<int>(labels_.size()) != generator_count())
    throw PreconditionError("one label per generator required");
}

FgAbGroup FgAbGroup::from_orders(const std::vector<Integer>& cyclic_orders) {
  const auto n = static_cast<Eigen::Index>(cyclic_orders.size());
  IntMatrix D = IntMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) D(i, i) = cyclic_orders[static_cast<size_t>(i)];
  auto snf = smith_normal_form(D);
  std::vector<Integer> factors;
  for (const auto& d : snf.diagonal())
    if (d > 1) factors.push_back(d);
  return FgAbGroup(std::move(factors), static_cast<int>(n - snf.rank));
}

Integer FgAbGroup::generator_order(int i) const {
  return i < torsion_count() ? factors_[static_cast<size_t>(i)] : Integer(0);
}

Integer FgAbGroup::order() const {
  if (!is_finite()) throw PreconditionError("group " + to_string() + " is infinite");
  Integer n = 1;
  for (const auto& d : factors_) n *= d;
  return n;
}

IntVector FgAbGroup::generator(int i) const {
  IntVector e = zero();
  e(i) = 1;
  return e;
}

IntVector FgAbGroup::reduce(const IntVector& x) const {
  if (!contains(x))
    throw DimensionError("element has " + std::to_string(x.size()) + " coordinates, group " + to_string() +
                         " has " + std::to_string(generator_count()) + " generators");
  IntVector y = x;
  for (int i = 0; i < torsion_count(); ++i) y(i) = mod_positive(y(i), factors_[static_cast<size_t>(i)]);
  return y;
}

std::vector<IntVector> FgAbGroup::elements() const {
  if (!is_finite()) throw PreconditionError("cannot enumerate the infinite group " + to_string());
  std::vector<IntVector> out;
  IntVector x = zero();
  for (;;) {
    out.push_back(x);
    int i = torsion_count();
    for (;;) {
      if (i == 0) return out;
      --i;
      x(i) += 1;
      if (x(i) < factors_[static_cast<size_t>(i)]) break;
      x(i) = 0;
    }
  }
}

std::string FgAbGroup::to_string() const {
  std::vector<std::string> parts;
  for (const auto& d : factors_) parts.push_back("Z/" + d.str());
  if (rank_ == 1) parts.push_back("Z");
  else if (rank_ > 1) parts.push_back("Z^" + std::to_string(rank_));
  if (parts.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < parts.size(); ++i) s += (i ? " + " : "") + parts[i];
  return s;
}

CoeffElement GroupHom::operator()(const IntVector& x) const {
  if (!source.contains(x)) throw DimensionError("homomorphism applied to an element of the wrong group");
  CoeffElement out = target.zero();
  for (Eigen::Index i = 0; i < x.size(); ++i) out += x(i) * values[static_cast<size_t>(i)];
  return out;
}

GroupHom hom_values(const FgAbGroup& G, const CoeffGroup& A, const std::vector<CoeffElement>& assignment) {
  if (static_cast<int>(assignment.size()) != G.generator_count())
    throw DimensionError("homomorphism needs " + std::to_string(G.generator_count()) + " values, got " +
                         std::to_string(assignment.size()));
  for (int i = 0; i < G.generator_count(); ++i) {
    const auto& v = assignment[static_cast<size_t>(i)];
    if (!(v.group() == A))
      throw DomainMismatch("value for generator " + G.labels()[static_cast<size_t>(i)] + " lies in " +
                           v.group().to_string() + ", expected " + A.to_string());
    Integer d = G.generator_order(i);
    if (d != 0 && !(d * v).is_zero())
      throw NotAHomomorphism("generator " + G.labels()[static_cast<size_t>(i)] + " has order " + d.str() +
                             " but " + d.str() + " * " + v.to_string() + " is not zero");
  }
  return GroupHom{G, A, assignment};
}

std::vector<GroupHom> all_homs(const FgAbGroup& G, const CoeffGroup& A) {
  const auto elems = A.elements();
  std::vector<std::vector<CoeffElement>> choices;
  for (int i = 0; i < G.generator_count(); ++i) {
    Integer d = G.generator_order(i);
    std::vector<CoeffElement> ok;
    for (const auto& a : elems)
      if (d == 0 || (d * a).is_zero()) ok.push_back(a);
    choices.push_back(std::move(ok));
  }
  std::vector<GroupHom> out;
  std::vector<CoeffElement> current;
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == choices.size()) {
      out.push_back(GroupHom{G, A, current});
      return;
    }
    for (const auto& a : choices[i]) {
      current.push_back(a);
      rec(i + 1);
      current.pop_back();
    }
  };
  rec(0);
  return out;
}

Integer hom_order(const FgAbGroup& G, const CoeffGroup& A) {
  Integer n = 1;
  for (int i = 0; i < G.generator_count(); ++i) {
    Integer d = G.generator_order(i);
    for (size_t j = 0; j < A.arity(); ++j) {
      const auto& atom = A.atom(j);
      if (d == 0) {
        if (atom.kind != Kind::Cyclic) throw PreconditionError("Hom(Z, " + A.to_string() + ") is infinite");
        n *= atom.order;
      } else if (atom.kind == Kind::Cyclic) {
        n *= gcd(d, atom.order);
      } else if (atom.kind == Kind::RationalCircle) {
        n *= d;
      }
    }
  }
  return n;
}

CoeffElement reduce_mod_multiples(const CoeffElement& a, const Integer& d) {
  if (d < 1) throw PreconditionError("reduce_mod_multiples needs d >= 1");
  std::vector<Rational> c = a.components();
  for (size_t i = 0; i < c.size(); ++i) {
    const auto& atom = a.group().atom(i);
    switch (atom.kind) {
      case Kind::Cyclic: c[i] = Rational(mod_positive(to_integer(c[i]), gcd(d, atom.order))); break;
      case Kind::RationalCircle: c[i] = 0; break;
      case Kind::FreeInt: c[i] = Rational(mod_positive(to_integer(c[i]), d)); break;
    }
  }
  return a.group().element(c);
}

std::optional<CoeffElement> solve_division(const CoeffGroup& A, const Integer& n, const CoeffElement& target) {
  if (n < 1) throw PreconditionError("solve_division needs n >= 1");
  if (!(target.group() == A)) throw DomainMismatch("target is not an element of " + A.to_string());
  std::vector<Rational> x(A.arity());
  for (size_t i = 0; i < A.arity(); ++i) {
    const auto& atom = A.atom(i);
    const Rational& t = target.components()[i];
    switch (atom.kind) {
      case Kind::Cyclic: {
        Integer m = atom.order, g = gcd(n, m), ti = to_integer(t);
        if (ti % g != 0) return std::nullopt;
        Integer mg = m / g;
        x[i] = Rational(mod_positive((ti / g) * inverse_mod(n / g, mg), mg));
        break;
      }
      case Kind::RationalCircle: x[i] = t / Rational(n); break;
      case Kind::FreeInt: {
        Integer ti = to_integer(t);
        if (ti % n != 0) return std::nullopt;
        x[i] = Rational(ti / n);
        break;
      }
    }
  }
  CoeffElement out = A.element(x);
  if (!(n * out == target)) throw InvariantViolation("solve_division: verification failed");
  return out;
}

std::optional<std::vector<CoeffElement>> solve_linear(const IntMatrix& M, const std::vector<CoeffElement>& b,
                                                      const CoeffGroup& A) {
  if (static_cast<Eigen::Index>(b.size()) != M.rows())
    throw DimensionError("solve_linear: right-hand side has length " + std::to_string(b.size()) +
                         ", matrix has " + std::to_string(M.rows()) + " rows");
  const auto snf = smith_normal_form(M);
  std::vector<CoeffElement> y(static_cast<size_t>(M.cols()), A.zero());
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    CoeffElement c = A.zero();
    for (Eigen::Index j = 0; j < M.rows(); ++j)
      if (snf.U(i, j) != 0) c += snf.U(i, j) * b[static_cast<size_t>(j)];
    if (i < snf.rank) {
      auto q = solve_division(A, snf.S(i, i), c);
      if (!q) return std::nullopt;
      y[static_cast<size_t>(i)] = *q;
    } else if (!c.is_zero()) {
      return std::nullopt;
    }
  }
  std::vector<CoeffElement> x(static_cast<size_t>(M.cols()), A.zero());
  for (Eigen::Index i = 0; i < M.cols(); ++i)
    for (Eigen::Index j = 0; j < snf.rank; ++j)
      if (snf.V(i, j) != 0) x[static_cast<size_t>(i)] += snf.V(i, j) * y[static_cast<size_t>(j)];
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    CoeffElement r = A.zero();
    for (Eigen::Index j = 0; j < M.cols(); ++j)
      if (M(i, j) != 0) r += M(i, j) * x[static_cast<size_t>(j)];
    if (!(r == b[static_cast<size_t>(i)])) throw InvariantViolation("solve_linear: verification failed");
  }
  return x;
}

bool ExtClass::is_zero() const {
  return std::all_of(values.begin(), values.end(), [](const CoeffElement& v) { return v.is_zero(); });
}

std::string ExtClass::to_string() const {
  if (values.empty()) return "()";
  std::string s = "(";
  for (size_t i = 0; i < values.size(); ++i) s += (i ? "; " : "") + values[i].to_string();
  return s + ")";
}

Integer ExtGroup::order() const {
  Integer n = 1;
  for (const auto& d : summand_orders) n *= d;
  return n;
}

FgAbGroup ExtGroup::as_group() const {
  std::vector<Integer> orders;
  for (const auto& d : base.invariant_factors())
    for (size_t j = 0; j < fiber.arity(); ++j) {
      const auto& atom = fiber.atom(j);
      if (atom.kind == Kind::Cyclic) orders.push_back(gcd(d, atom.order));
      else if (atom.kind == Kind::FreeInt) orders.push_back(d);
    }
  return FgAbGroup::from_orders(orders);
}

ExtClass ExtGroup::zero() const {
  return ExtClass{std::vector<CoeffElement>(static_cast<size_t>(base.torsion_count()), fiber.zero())};
}

ExtClass ExtGroup::canonical(const ExtClass& c) const {
  if (static_cast<int>(c.values.size()) != base.torsion_count())
    throw InvalidClass("Ext class needs " + std::to_string(base.torsion_count()) + " values, got " +
                       std::to_string(c.values.size()));
  ExtClass out;
  for (size_t i = 0; i < c.values.size(); ++i) {
    if (!(c.values[i].group() == fiber))
      throw InvalidClass("Ext class value " + c.values[i].to_string() + " is not an element of " + fiber.to_string());
    out.values.push_back(reduce_mod_multiples(c.values[i], base.invariant_factors()[i]));
  }
  return out;
}

ExtClass ExtGroup::add(const ExtClass& a, const ExtClass& b) const {
  ExtClass s = canonical(a);
  const ExtClass t = canonical(b);
  for (size_t i = 0; i < s.values.size(); ++i) s.values[i] += t.values[i];
  return canonical(s);
}

ExtClass ExtGroup::negate(const ExtClass& a) const {
  ExtClass s = canonical(a);
  for (auto& v : s.values) v = -v;
  return canonical(s);
}

std::vector<ExtClass> ExtGroup::classes() const {
  // Representatives of A / dA per summand, then the product over summands.
  std::vector<std::vector<CoeffElement>> reps;
  for (const auto& d : base.invariant_factors()) {
    std::vector<std::vector<Rational>> partial{{}};
    for (size_t j = 0; j < fiber.arity(); ++j) {
      const auto& atom = fiber.atom(j);
      Integer bound = atom.kind == Kind::Cyclic ? gcd(d, atom.order) : atom.kind == Kind::FreeInt ? d : Integer(1);
      std::vector<std::vector<Rational>> next;
      for (const auto& p : partial)
        for (Integer r = 0; r < bound; ++r) {
          auto q = p;
          q.push_back(Rational(r));
          next.push_back(std::move(q));
        }
      partial = std::move(next);
    }
    std::vector<CoeffElement> elems;
    for (const auto& p : partial) elems.push_back(fiber.element(p));
    reps.push_back(std::move(elems));
  }
  std::vector<ExtClass> out;
  ExtClass current;
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == reps.size()) {
      out.push_back(current);
      return;
    }
    for (const auto& a : reps[i]) {
      current.values.push_back(a);
      rec(i + 1);
      current.values.pop_back();
    }
  };
  rec(0);
  return out;
}

ExtGroup ext_group(const FgAbGroup& G, const CoeffGroup& A) {
  ExtGroup E{G, A, {}};
  for (const auto& d : G.invariant_factors()) {
    Integer n = 1;
    for (size_t j = 0; j < A.arity(); ++j) {
      const auto& atom = A.atom(j);
      if (atom.kind == Kind::Cyclic) n *= gcd(d, atom.order);
      else if (atom.kind == Kind::FreeInt) n *= d;
    }
    E.summand_orders.push_back(n);
  }
  return E;
}

Extension::Extension(FgAbGroup base, CoeffGroup fiber, Cocycle cocycle)
    : base_(std::move(base)), fiber_(std::move(fiber)), cocycle_(std::move(cocycle)) {}

CoeffElement Extension::cocycle(const IntVector& x, const IntVector& y) const {
  CoeffElement c = cocycle_(base_.reduce(x), base_.reduce(y));
  if (!(c.group() == fiber_)) throw DomainMismatch("cocycle value lies outside the fiber group");
  return c;
}

ExtElement Extension::zero() const { return ExtElement{fiber_.zero(), base_.zero()}; }

ExtElement Extension::add(const ExtElement& u, const ExtElement& v) const {
  return ExtElement{u.a + v.a + cocycle(u.x, v.x), base_.reduce(u.x + v.x)};
}

ExtElement Extension::negate(const ExtElement& u) const {
  IntVector nx = base_.reduce(-u.x);
  return ExtElement{-u.a - cocycle(u.x, nx), nx};
}

ExtElement Extension::scale(const Integer& k, const ExtElement& u) const {
  ExtElement base = k < 0 ? negate(u) : u;
  Integer n = k < 0 ? Integer(-k) : k;
  ExtElement acc = zero();
  while (n > 0) {
    if (n % 2 == 1) acc = add(acc, base);
    n /= 2;
    if (n > 0) base = add(base, base);
  }
  return acc;
}

ExtElement Extension::include(const CoeffElement& a) const {
  if (!(a.group() == fiber_)) throw DomainMismatch("element is not in the fiber " + fiber_.to_string());
  return ExtElement{a, base_.zero()};
}

ExtElement Extension::section(const IntVector& x) const { return ExtElement{fiber_.zero(), base_.reduce(x)}; }

bool Extension::contains(const ExtElement& u) const {
  return u.a.group() == fiber_ && base_.contains(u.x) && base_.reduce(u.x) == u.x;
}

std::vector<ExtElement> Extension::elements() const {
  std::vector<ExtElement> out;
  for (const auto& x : base_.elements())
    for (const auto& a : fiber_.elements()) out.push_back(ExtElement{a, x});
  return out;
}

ExtClass Extension::ext_class() const {
  ExtClass out;
  for (int i = 0; i < base_.torsion_count(); ++i) {
    const Integer d = base_.generator_order(i);
    const IntVector e = base_.generator(i);
    CoeffElement sum = fiber_.zero();
    for (Integer k = 1; k < d; ++k) sum += cocycle(k * e, e);
    out.values.push_back(reduce_mod_multiples(sum, d));
  }
  return out;
}

Extension extension_from_class(const FgAbGroup& G, const CoeffGroup& A, const ExtClass& cls) {
  const ExtClass canon = ext_group(G, A).canonical(cls);
  const auto alpha = canon.values;
  const auto factors = G.invariant_factors();
  return Extension(G, A, [alpha, factors, A](const IntVector& x, const IntVector& y) {
    CoeffElement c = A.zero();
    for (size_t i = 0; i < alpha.size(); ++i) {
      const auto idx = static_cast<Eigen::Index>(i);
      if (x(idx) + y(idx) >= factors[i]) c += alpha[i];
    }
    return c;
  });
}

}  // namespace hqft
