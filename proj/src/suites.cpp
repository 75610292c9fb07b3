#include "hqft/suites.hpp"

#include "hqft/sampling.hpp"
#include "hqft/smith.hpp"

#include <functional>

namespace hqft {

namespace {

class Tally {
 public:
  explicit Tally(std::string check) : check_(std::move(check)) {}
  void expect(bool ok, const std::function<std::string()>& witness) {
    ++count_;
    if (!ok && witness_.empty()) witness_ = witness();
  }
  void report_to(Report& r, const std::string& expected) const {
    r.add(check_, expected, std::to_string(count_) + (witness_.empty() ? " instances hold" : " instances, failure"),
          witness_.empty(), witness_);
  }

 private:
  std::string check_;
  int count_ = 0;
  std::string witness_;
};

std::string support_string(const Cochain& f) {
  std::string out;
  const auto& cells = f.complex()->simplices(f.degree());
  for (size_t i = 0; i < cells.size(); ++i)
    if (!f.values()[i].is_zero()) out += (out.empty() ? "" : " ") + to_string(cells[i]) + "=" + f.values()[i].to_string();
  return out.empty() ? "0" : out;
}

bool all_zero(const std::vector<CoeffElement>& v) {
  return std::all_of(v.begin(), v.end(), [](const CoeffElement& x) { return x.is_zero(); });
}

}  // namespace

Report verify_hqft_properties(const ComplexPtr& X, const CoeffGroup& A, const SuiteOptions& options) {
  Report report;
  report.title = "theory properties over " + A.to_string();
  Sampler s(options.seed);
  Tally gluing("evaluation respects gluing"), monoidal("evaluation respects disjoint union"),
      swap("swap cylinder exchanges factors"), trace("closing adds the closed holonomy"),
      reflection("g with its reverse cancels"), surgery("holonomy survives surgery"),
      spheres("holonomy survives constant spheres"), cycles("holonomy depends on the homology class"),
      normal("constant surfaces have zero holonomy");

  for (int i = 0; i < options.samples; ++i) {
    const Hqft h(s.cocycle(X, A));
    const MappedCircles obj = s.object(X, 2);
    const XSurface g1 = s.cobordism(obj, 2);
    const XSurface g2 = s.cobordism(g1.output_object(), 2);
    const FiberElement e = h.element(obj, s.element(A));

    const FiberElement glued = evaluate(h, glue(g1, g2), e, options.selfcheck);
    const FiberElement stepwise = evaluate(h, g2, evaluate(h, g1, e, options.selfcheck), options.selfcheck);
    gluing.expect(glued == stepwise, [&] { return glued.to_string() + " vs " + stepwise.to_string(); });

    const MappedCircles obj2 = s.object(X, 1);
    const XSurface g3 = s.cobordism(obj2, 1);
    const FiberElement f = h.element(obj2, s.element(A));
    const FiberElement together = evaluate(h, disjoint_union(g1, g3), tensor(e, f));
    const FiberElement apart = tensor(evaluate(h, g1, e), evaluate(h, g3, f));
    monoidal.expect(together == apart, [&] { return together.to_string() + " vs " + apart.to_string(); });

    const FiberElement swapped = evaluate(h, swap_cylinder(obj, obj2), tensor(e, f));
    const FiberElement expected = tensor(f, e);
    swap.expect(swapped == expected, [&] { return swapped.to_string() + " vs " + expected.to_string(); });

    const XSurface endo = s.endomorphism(obj);
    const FiberElement once = evaluate(h, endo, e);
    const CoeffElement closed = holonomy(h, close(endo));
    trace.expect(once.object == obj && once.phase == e.phase + closed,
                 [&] { return once.to_string() + " vs phase " + (e.phase + closed).to_string(); });

    const XSurface c = s.closed_surface(X);
    const CoeffElement hc = holonomy(h, c);
    const CoeffElement cancel = holonomy(h, disjoint_union(c, reverse(c)));
    reflection.expect(cancel.is_zero() && evaluate(h, glue(g1, reverse(g1)), e) == e,
                      [&] { return "holonomy of g with its reverse is " + cancel.to_string(); });

    XSurface cut = c;
    const int rounds = s.uniform(1, 5);
    for (int r = 0; r < rounds; ++r) cut = s.surgery(cut);
    const CoeffElement after = holonomy(h, cut);
    surgery.expect(after == hc, [&] { return hc.to_string() + " before, " + after.to_string() + " after"; });

    const CoeffElement with_sphere =
        holonomy(h, disjoint_union(c, constant_sphere(X, s.uniform(0, X->vertex_count() - 1))));
    spheres.expect(with_sphere == hc, [&] { return with_sphere.to_string() + " vs " + hc.to_string(); });

    Chain y = c.pushed_cycle();
    if (X->dim() >= 3) {
      Chain w(3);
      w.add(s.pick(X->simplices(3)), Integer(s.uniform(-2, 2)));
      y += boundary(w);
    }
    const CoeffElement rebuilt = holonomy(h, surface_from_cycle(X, y));
    cycles.expect(rebuilt == hc, [&] { return rebuilt.to_string() + " vs " + hc.to_string(); });

    const CoeffElement constant = holonomy(h, constant_sphere(X, s.uniform(0, X->vertex_count() - 1)));
    normal.expect(constant.is_zero(), [&] { return constant.to_string(); });
  }
  for (const Tally* t : {&gluing, &monoidal, &swap, &trace, &reflection, &surgery, &spheres, &cycles, &normal})
    t->report_to(report, "exact equality");
  return report;
}

Report verify_divisibility(const ComplexPtr& X, const SuiteOptions& options) {
  Report report;
  report.title = "divisible against finite coefficients";
  const LowHomology H(X);
  Sampler s(options.seed);

  const CoeffGroup QZ = CoeffGroup::rational_circle();
  report.add("Ext(H_1, Q/Z)", "1 class", ext_group(H.h1.group, QZ).order().str() + " class(es)",
             ext_group(H.h1.group, QZ).order() == 1);
  Tally injective("Q/Z: zero holonomy implies coboundary");
  for (int i = 0; i < options.samples; ++i) {
    const Cochain theta = s.cocycle(X, QZ);
    const auto character = holonomy_character(Hqft(theta), H.h2).values;
    const bool coboundary = coboundary_witness(theta).has_value();
    injective.expect(all_zero(character) == coboundary,
                     [&] { return "cocycle " + support_string(theta); });
  }
  injective.report_to(report, "holonomy detects every class");

  const CoeffGroup Z2 = CoeffGroup::cyclic(2);
  const CohomologyGroup C = cohomology(X, Z2, 2);
  std::optional<Cochain> hidden;
  for (const auto& theta : C.representatives())
    if (all_zero(holonomy_character(Hqft(theta), H.h2).values) && !coboundary_witness(theta)) {
      hidden = theta;
      break;
    }
  const bool expected = ext_group(H.h1.group, Z2).order() > 1;
  report.add("Z/2: zero holonomy without trivialisation", expected ? "exists" : "absent",
             hidden ? "exists" : "absent", hidden.has_value() == expected,
             hidden ? support_string(*hidden) : "no zero-holonomy class outside the coboundaries");
  return report;
}

Report verify_linalg(const SuiteOptions& options) {
  Report report;
  report.title = "integer linear algebra";
  Sampler s(options.seed);
  Tally factor("Smith form is a unimodular diagonalisation"), solve("integer solutions verify");
  for (int i = 0; i < options.samples; ++i) {
    const int rows = s.uniform(1, 8), cols = s.uniform(1, 8);
    IntMatrix M(rows, cols);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) M(r, c) = s.uniform(-9, 9);
    const auto snf = smith_normal_form(M);
    bool ok = snf.U * M * snf.V == snf.S && snf.U * snf.U_inv == IntMatrix::Identity(rows, rows) &&
              snf.V * snf.V_inv == IntMatrix::Identity(cols, cols);
    for (Eigen::Index r = 0; r < rows && ok; ++r)
      for (Eigen::Index c = 0; c < cols && ok; ++c)
        if (r != c || r >= snf.rank) ok = snf.S(r, c) == 0;
    for (Eigen::Index k = 0; k < snf.rank && ok; ++k)
      ok = snf.S(k, k) > 0 && (k == 0 || snf.S(k, k) % snf.S(k - 1, k - 1) == 0);
    factor.expect(ok, [&] { return "matrix of size " + std::to_string(rows) + "x" + std::to_string(cols); });

    IntVector x(cols);
    for (int c = 0; c < cols; ++c) x(c) = s.uniform(-3, 3);
    const IntVector b = M * x;
    const auto found = solve_integer(snf, M, b);
    solve.expect(found && M * *found == b, [&] { return "solvable system reported insoluble"; });
  }
  factor.report_to(report, "U M V = S");
  solve.report_to(report, "M x = b");
  return report;
}

}  // namespace hqft
