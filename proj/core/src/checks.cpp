#include "supertrop/checks.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <set>
#include <sstream>

#include "supertrop/error.hpp"
#include "supertrop/io.hpp"
#include "supertrop/spectral.hpp"

namespace supertrop {

namespace {

// Collects the violated clauses of one check.
class Collector {
 public:
  void expect(bool ok, const std::string& clause) {
    if (!ok) {
      if (!failed_.empty()) failed_ += "; ";
      failed_ += clause;
    }
  }

  Verdict verdict() const {
    Verdict v;
    v.pass = failed_.empty();
    v.details = failed_;
    return v;
  }

 private:
  std::string failed_;
};

std::string str(const Element& e) { return to_string(e); }
std::string str(const Polynomial& f) { return "[" + to_string(f) + "]"; }
std::string str(const Matrix& m) { return to_json(m); }

}  // namespace

Verdict chk_det_product(const Matrix& a, const Matrix& b) {
  Collector c;
  const Element lhs = determinant(a * b);
  const Element rhs = determinant(a) * determinant(b);
  c.expect(ghost_surpasses(lhs, rhs), "det(AB)=" + str(lhs) + " does not surpass det(A)det(B)=" + str(rhs));
  return c.verdict();
}

Verdict chk_det_invertible(const Matrix& p, const Matrix& a) {
  Collector c;
  if (!is_invertible(p)) {
    c.expect(false, "P is not a generalized permutation matrix");
    return c.verdict();
  }
  const Element dp = determinant(p);
  const Element da = determinant(a);
  c.expect(determinant(p * a) == dp * da, "det(PA) != det(P)det(A)");
  c.expect(determinant(a * p) == dp * da, "det(AP) != det(P)det(A)");
  const Matrix p_nabla = nabla(p);
  c.expect(p_nabla * p == Matrix::identity(p.rows()) && p * p_nabla == Matrix::identity(p.rows()),
           "nabla(P) is not the inverse of P");
  if (da.is_tangible()) {
    c.expect(nabla(p * a) == nabla(a) * p_nabla, "nabla(PA) != nabla(A) nabla(P)");
    const DefiniteForm left = definite_form(a, Side::Left);
    c.expect(nabla(a) == nabla(left.definite) * nabla(left.conductor),
             "nabla(A) != nabla(definite form) * conductor^-1");
  }
  return c.verdict();
}

Verdict chk_adj_rules(const Matrix& a) {
  Collector c;
  const std::int64_t n = static_cast<std::int64_t>(a.rows());
  const Element d = determinant(a);
  const Matrix adj = adjugate(a);
  const Element lhs_i = determinant(a * adj);
  const Element lhs_ii = determinant(adj);
  c.expect(lhs_i == power(d, n), "det(A adj A)=" + str(lhs_i) + " != det(A)^n=" + str(power(d, n)));
  c.expect(lhs_ii == power(d, n - 1),
           "det(adj A)=" + str(lhs_ii) + " != det(A)^(n-1)=" + str(power(d, n - 1)));
  return c.verdict();
}

Verdict chk_adj_product(const Matrix& a, const Matrix& b) {
  Collector c;
  const Matrix lhs = adjugate(a * b);
  const Matrix rhs = adjugate(b) * adjugate(a);
  c.expect(mat_ghost_surpasses(lhs, rhs), "adj(AB)=" + str(lhs) + " does not surpass adj(B)adj(A)=" + str(rhs));
  return c.verdict();
}

Verdict chk_pseudo_identity(const Matrix& a) {
  Collector c;
  const SingularityClass sc = classify(a);
  if (sc == SingularityClass::StrictlySingular) {
    c.expect(false, "input is strictly singular");
    return c.verdict();
  }
  const PseudoIdentityClass want = sc == SingularityClass::NonSingular
                                       ? PseudoIdentityClass::PseudoIdentity
                                       : PseudoIdentityClass::GhostPseudoIdentity;
  const Matrix an = nabla(a);
  const Matrix right = a * an;
  const Matrix left = an * a;
  c.expect(pseudo_identity_class(right) == want,
           "A nabla(A)=" + str(right) + " is " + std::string(to_string(pseudo_identity_class(right))));
  c.expect(pseudo_identity_class(left) == want,
           "nabla(A) A=" + str(left) + " is " + std::string(to_string(pseudo_identity_class(left))));
  return c.verdict();
}

Verdict chk_definite_form(const Matrix& a) {
  Collector c;
  const Element d = determinant(a);
  for (Side side : {Side::Left, Side::Right}) {
    const char* name = side == Side::Left ? "left" : "right";
    const DefiniteForm f = definite_form(a, side);
    const Matrix back = side == Side::Left ? f.conductor * f.definite : f.definite * f.conductor;
    c.expect(back == a, std::string(name) + " definite form does not reassemble A");
    c.expect(is_definite(f.definite), std::string(name) + " definite form is not definite");
    c.expect(is_invertible(f.conductor), std::string(name) + " conductor is not invertible");
    c.expect(determinant(f.conductor) == d, std::string(name) + " conductor determinant differs");
  }
  return c.verdict();
}

Verdict chk_nabla_period(const Matrix& a, std::size_t kmax) {
  Collector c;
  std::vector<Matrix> iter{a};
  for (std::size_t k = 1; k <= kmax; ++k) iter.push_back(nabla(iter.back()));
  for (std::size_t k = 1; k + 2 <= kmax; ++k) {
    c.expect(mat_nu_equiv(iter[k], iter[k + 2]),
             "nabla^" + std::to_string(k) + " not nu-equivalent to nabla^" + std::to_string(k + 2));
  }
  const DefiniteForm left = definite_form(a, Side::Left);
  const DefiniteForm right = definite_form(a, Side::Right);
  const Matrix& p = left.conductor;
  c.expect(mat_nu_equiv(iter[2], p * iter[1] * p), "nabla(nabla(A)) not nu-equivalent to P nabla(A) P");

  const Matrix bar_n = nabla(left.definite);
  const Matrix tilde_n = nabla(right.definite);
  c.expect(mat_nu_equiv(nabla(bar_n), bar_n) && mat_nu_equiv(bar_n, iter[1] * a),
           "left definite form: nabla-nabla, nabla and nabla(A)A disagree");
  c.expect(mat_nu_equiv(nabla(tilde_n), tilde_n) && mat_nu_equiv(tilde_n, a * iter[1]),
           "right definite form: nabla-nabla, nabla and A nabla(A) disagree");
  if (a.rows() == 2) c.expect(iter[2] == a, "2x2: nabla(nabla(A)) != A");
  return c.verdict();
}

Verdict chk_definite_stabilization(const Matrix& a) {
  if (!is_definite(a)) throw error(errc::not_definite, "chk_definite_stabilization");
  Collector c;
  const std::size_t n = a.rows();
  const Matrix an = nabla(a);
  c.expect(an == adjugate(a), "nabla(A) != adj(A) for definite A");
  c.expect(is_definite(an), "nabla(A) is not definite");
  const Matrix ia = a * an;
  c.expect(mat_nu_equiv(an * a, an) && mat_nu_equiv(an, ia), "nabla(A)A, nabla(A), A nabla(A) not nu-equivalent");
  for (std::size_t k = n - 1; k <= n + 1; ++k) {
    c.expect(mat_nu_equiv(mat_pow(a, k), mat_pow(a, k + 1)),
             "A^" + std::to_string(k) + " not nu-equivalent to A^" + std::to_string(k + 1));
  }
  const Matrix star = kleene_star(a);
  const Matrix top = mat_pow(a, n - 1);
  c.expect(mat_nu_equiv(an, star), "nabla(A) not nu-equivalent to A*");
  c.expect(mat_nu_equiv(star, top), "A* not nu-equivalent to A^(n-1)");
  c.expect(mat_nu_equiv(top, nabla(an)), "A^(n-1) not nu-equivalent to nabla(nabla(A))");
  c.expect(mat_nu_equiv(nabla(an), ia), "nabla(nabla(A)) not nu-equivalent to A nabla(A)");
  return c.verdict();
}

Verdict chk_cycle_dominance(const Matrix& a) {
  Collector c;
  // The diagonal of A^k is the best closed walk of length k through each index.
  Matrix p = Matrix::identity(a.rows());
  for (std::size_t k = 1; k <= 2 * a.rows(); ++k) {
    p = p * a;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      c.expect(nu_compare(p(i, i), Element::one()) <= 0,
               "closed walk of length " + std::to_string(k) + " at " + std::to_string(i) +
                   " has weight " + str(p(i, i)));
    }
  }
  return c.verdict();
}

Verdict chk_hamilton_cayley(const Matrix& a) {
  Collector c;
  const Matrix value = eval_at_matrix(char_poly(a), a);
  c.expect(is_ghost_matrix(value), "f_A(A)=" + str(value) + " has a tangible entry");
  return c.verdict();
}

Verdict chk_charpoly_power(const Matrix& a, std::size_t m) {
  Collector c;
  const Polynomial fa = char_poly(a);
  const Polynomial fam = char_poly(mat_pow(a, m));
  // Compared as functions: coefficientwise the left side can lack a monomial
  // that the right side has but that never strictly dominates.
  const Polynomial lhs = inflate(fam, m);
  const Polynomial rhs = poly_pow(fa, m);
  const std::string ms = std::to_string(m);
  c.expect(poly_fn_ghost_surpasses(lhs, rhs),
           "m=" + ms + ": f_{A^m}(x^m)=" + str(lhs) + " does not surpass f_A(x)^m=" + str(rhs));
  if (fam.is_tangible()) {
    c.expect(poly_fn_equal(lhs, rhs), "m=" + ms + ": f_{A^m} tangible but f_{A^m}(x^m) != f_A(x)^m");
  }
  if (!fam.is_neg_inf() && !fa.is_neg_inf()) {
    const RootSet ra = roots(fa);
    for (const CornerRoot& r : roots(fam).corner) {
      const bool found = std::any_of(ra.corner.begin(), ra.corner.end(), [&](const CornerRoot& s) {
        return power(s.value, static_cast<std::int64_t>(m)) == r.value;
      });
      c.expect(found, "m=" + ms + ": corner root " + str(r.value) + " of f_{A^m} is not an m-th power of a corner root of f_A");
    }
  }
  return c.verdict();
}

Verdict chk_eigen_power(const Matrix& a, std::size_t m) {
  Collector c;
  const Polynomial fa = char_poly(a);
  const Polynomial fam = char_poly(mat_pow(a, m));
  const RootSet ra = roots(fa);
  std::vector<Element> eigen;
  for (const CornerRoot& r : ra.corner) eigen.push_back(r.value);
  if (ra.contains(Element::neg_inf())) eigen.push_back(Element::neg_inf());
  for (const Element& alpha : eigen) {
    const Element alpha_m = power(alpha, static_cast<std::int64_t>(m));
    const Element value = eval(fam, alpha_m);
    c.expect(!value.is_tangible(), "eigenvalue " + str(alpha) + ": f_{A^m}(" + str(alpha_m) + ")=" + str(value));
  }
  return c.verdict();
}

Verdict chk_charpoly_function(const Matrix& a, std::size_t samples) {
  Collector c;
  const Polynomial f = char_poly(a);
  const auto coeffs = f.coeffs();
  // Sample every pairwise crossing of the coefficient lines, then fill a
  // half-integer grid around them.
  std::set<Rational> points;
  Rational lo(-1), hi(1);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    for (std::size_t j = i + 1; j < coeffs.size(); ++j) {
      if (coeffs[i].is_neg_inf() || coeffs[j].is_neg_inf()) continue;
      const Rational x = (coeffs[i].value() - coeffs[j].value()) /
                         Rational(static_cast<std::int64_t>(j - i));
      points.insert(x);
      lo = std::min(lo, x - 2);
      hi = std::max(hi, x + 2);
    }
  }
  const std::size_t fill = samples > points.size() ? samples - points.size() : 0;
  for (std::size_t k = 0; k < fill; ++k) {
    Rational x = lo + (hi - lo) * Rational(static_cast<std::int64_t>(k), static_cast<std::int64_t>(fill));
    x = Rational(static_cast<std::int64_t>(boost::rational_cast<double>(x * 2)), 2);
    points.insert(x);
  }
  const std::size_t n = a.rows();
  for (const Rational& x : points) {
    const Element xe = Element::tangible(x);
    const Element poly_value = eval(f, xe);
    const Element det_value = determinant(scalar_mul(xe, Matrix::identity(n)) + a);
    c.expect(poly_value == det_value,
             "x=" + str(xe) + ": f_A(x)=" + str(poly_value) + " but det(xI+A)=" + str(det_value));
  }
  return c.verdict();
}

Verdict chk_similarity(const Matrix& a, const Matrix& b) {
  Collector c;
  const Matrix bp = conjugate(a, b);
  const Polynomial fbp = char_poly(bp);
  const Polynomial fb = char_poly(b);
  c.expect(poly_ghost_surpasses(fbp, fb), "f_{B'}=" + str(fbp) + " does not surpass f_B=" + str(fb));
  const Element dbp = determinant(bp);
  const Element db = determinant(b);
  c.expect(ghost_surpasses(dbp, db), "det(B')=" + str(dbp) + " does not surpass det(B)=" + str(db));
  if (dbp.is_tangible()) c.expect(dbp == db, "B' non-singular but det(B') != det(B)");
  c.expect(ghost_surpasses(trace(bp), trace(b)), "tr(B') does not surpass tr(B)");
  if (fbp.is_tangible()) c.expect(fbp == fb, "f_{B'} tangible but differs from f_B");
  c.expect(is_ghost_matrix(eval_at_matrix(fbp, b)), "f_{B'}(B) is not ghost");
  if (!fb.is_neg_inf()) {
    for (const CornerRoot& r : roots(fb).corner) {
      c.expect(!eval(fbp, r.value).is_tangible(),
               "eigenvalue " + str(r.value) + " of B is not a root of f_{B'}");
    }
  }
  return c.verdict();
}

bool is_triangular(const Matrix& a) {
  if (!a.is_square()) return false;
  bool upper = true, lower = true;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_neg_inf()) continue;
      if (i > j) upper = false;
      if (i < j) lower = false;
    }
  }
  return upper || lower;
}

ConjectureVerdict conjecture_coefficients(const Matrix& a) {
  const Element d = determinant(a);
  if (!d.is_tangible()) throw error(errc::not_nonsingular, "conjecture check needs a tangible determinant");
  const std::size_t n = a.rows();
  const Polynomial fa = char_poly(a);
  const Polynomial fb = char_poly(nabla(a));
  const bool assert_all = n <= 4 || is_triangular(a);

  ConjectureVerdict out;
  for (std::size_t k = 0; k <= n; ++k) {
    CoefficientVerdict cv;
    cv.k = k;
    cv.lhs = d * fb.coeff(k);
    cv.rhs = fa.coeff(n - k);
    cv.surpasses = ghost_surpasses(cv.lhs, cv.rhs);
    cv.asserted = assert_all || k == 0 || k + 2 >= n;
    if (!cv.surpasses) {
      if (cv.asserted) {
        out.asserted_pass = false;
      } else {
        out.counterexample = true;
      }
    }
    out.coefficients.push_back(cv);
  }
  return out;
}

Verdict chk_conjecture_62(const Matrix& a) {
  const ConjectureVerdict cv = conjecture_coefficients(a);
  Verdict v;
  v.pass = cv.asserted_pass;
  v.counterexample = cv.counterexample;
  for (const CoefficientVerdict& k : cv.coefficients) {
    if (k.surpasses) continue;
    if (!v.details.empty()) v.details += "; ";
    v.details += "k=" + std::to_string(k.k) + ": det(A)b_k=" + str(k.lhs) +
                 " does not surpass a_{n-k}=" + str(k.rhs) + (k.asserted ? " (proven range)" : " (open range)");
  }
  return v;
}

// ---------------------------------------------------------------------------

namespace {

struct CheckDef {
  std::string_view id;
  std::vector<Constraint> inputs;
  std::function<Verdict(std::span<const Matrix>)> run;
  bool tangible_only = false;
  // Extra acceptance applied to the drawn inputs (redrawn on rejection).
  std::function<bool(std::span<const Matrix>)> accept;
};

Verdict merge(Verdict a, const Verdict& b) {
  a.pass = a.pass && b.pass;
  a.counterexample = a.counterexample || b.counterexample;
  if (!b.details.empty()) a.details += (a.details.empty() ? "" : "; ") + b.details;
  return a;
}

CheckDef make(std::string_view id, std::vector<Constraint> inputs,
              std::function<Verdict(std::span<const Matrix>)> run, bool tangible_only = false,
              std::function<bool(std::span<const Matrix>)> accept = {}) {
  return CheckDef{id, std::move(inputs), std::move(run), tangible_only, std::move(accept)};
}

const std::vector<CheckDef>& registry() {
  static const std::vector<CheckDef> defs = [] {
    using C = Constraint;
    using In = std::span<const Matrix>;
    std::vector<CheckDef> d;
    d.push_back(make("det_product", {C::None, C::None}, [](In m) { return chk_det_product(m[0], m[1]); }));
    d.push_back(make("det_invertible", {C::Invertible, C::None},
                 [](In m) { return chk_det_invertible(m[0], m[1]); }));
    d.push_back(make("adj_rules", {C::None}, [](In m) { return chk_adj_rules(m[0]); }));
    d.push_back(make("adj_product", {C::None, C::None}, [](In m) { return chk_adj_product(m[0], m[1]); }));
    d.push_back(make("pseudo_identity", {C::None}, [](In m) { return chk_pseudo_identity(m[0]); }, false,
                 [](In m) { return !determinant(m[0]).is_neg_inf(); }));
    d.push_back(make("definite_form", {C::NonSingular}, [](In m) { return chk_definite_form(m[0]); }));
    d.push_back(make("nabla_period", {C::NonSingular}, [](In m) { return chk_nabla_period(m[0], 5); }));
    d.push_back(make("definite_stabilization", {C::Definite},
                 [](In m) { return chk_definite_stabilization(m[0]); }));
    d.push_back(make("cycle_dominance", {C::Definite}, [](In m) { return chk_cycle_dominance(m[0]); }));
    d.push_back(make("hamilton_cayley", {C::None}, [](In m) { return chk_hamilton_cayley(m[0]); }));
    d.push_back(make("charpoly_power", {C::None}, [](In m) { return merge(chk_charpoly_power(m[0], 2), chk_charpoly_power(m[0], 3)); }));
    d.push_back(make("eigen_power", {C::None}, [](In m) { return merge(chk_eigen_power(m[0], 2), chk_eigen_power(m[0], 3)); }, true));
    d.push_back(make("charpoly_function", {C::None}, [](In m) { return chk_charpoly_function(m[0]); }));
    d.push_back(make("similarity", {C::NonSingular, C::None}, [](In m) { return chk_similarity(m[0], m[1]); }));
    d.push_back(make("conjecture_62", {C::NonSingular}, [](In m) { return chk_conjecture_62(m[0]); }));
    return d;
  }();
  return defs;
}

const CheckDef& find_check(std::string_view id) {
  for (const CheckDef& d : registry()) {
    if (d.id == id) return d;
  }
  throw error(errc::invalid_argument, "unknown check '" + std::string(id) + "'");
}

CheckReport run_def(const CheckDef& def, const GenConfig& cfg, std::size_t trials) {
  validate(cfg);
  CheckReport report;
  report.check_id = std::string(def.id);
  report.config = cfg;
  report.trials = trials;
  for (std::size_t t = 0; t < trials; ++t) {
    std::mt19937_64 rng(trial_seed(cfg.seed, t));
    std::vector<Matrix> inputs;
    for (std::size_t attempt = 0;; ++attempt) {
      inputs.clear();
      for (Constraint c : def.inputs) {
        GenConfig sub = cfg;
        sub.constraint = c;
        if (def.tangible_only) sub.ghost_prob = 0.0;
        inputs.push_back(gen_matrix(sub, rng));
      }
      if (!def.accept || def.accept(inputs)) break;
      if (attempt + 1 >= cfg.max_attempts) {
        throw error(errc::constraint_unsatisfiable, "no admissible input for " + std::string(def.id));
      }
    }
    Verdict v;
    try {
      v = def.run(inputs);
    } catch (const error& e) {
      v.pass = false;
      v.details = std::string("exception: ") + e.what();
    }
    if (v.pass) ++report.passes;
    Failure entry{t, inputs, v.details};
    if (!v.pass) {
      report.failures.push_back(entry);
    } else if (v.counterexample) {
      report.counterexamples.push_back(std::move(entry));
    }
  }
  return report;
}

}  // namespace

std::span<const std::string_view> check_ids() {
  static const std::vector<std::string_view> ids = [] {
    std::vector<std::string_view> out;
    for (const CheckDef& d : registry()) out.push_back(d.id);
    return out;
  }();
  return ids;
}

bool is_check_id(std::string_view id) {
  const auto ids = check_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

CheckReport run_check(std::string_view id, const GenConfig& cfg, std::size_t trials) {
  return run_def(find_check(id), cfg, trials);
}

Verdict replay_check(std::string_view id, std::span<const Matrix> inputs) {
  const CheckDef& def = find_check(id);
  if (inputs.size() != def.inputs.size()) {
    throw error(errc::invalid_argument, "wrong number of inputs for " + std::string(id));
  }
  return def.run(inputs);
}

CheckReport explore_conjecture(const GenConfig& cfg, std::size_t trials) {
  if (cfg.constraint != Constraint::NonSingular && cfg.constraint != Constraint::Triangular) {
    throw error(errc::invalid_argument, "the explorer samples non-singular or triangular matrices");
  }
  CheckDef def = find_check("conjecture_62");
  def.inputs = {cfg.constraint};
  return run_def(def, cfg, trials);
}

}  // namespace supertrop
