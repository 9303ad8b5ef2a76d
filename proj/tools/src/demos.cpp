#include <functional>
#include <map>
#include <sstream>

#include "cli.hpp"
#include "supertrop/error.hpp"
#include "supertrop/spectral.hpp"

namespace supertrop::cli {

namespace {

using Rows = std::vector<std::vector<const char*>>;

Matrix mat(const Rows& rows) {
  std::vector<std::vector<Element>> out;
  for (const auto& row : rows) {
    out.emplace_back();
    for (const char* cell : row) out.back().push_back(parse_element(cell));
  }
  return Matrix::from_rows(out);
}

std::string one_line(std::string s) {
  std::string::size_type pos;
  while ((pos = s.find('\n')) != std::string::npos) s.replace(pos, 1, "; ");
  return s;
}

class Transcript {
 public:
  void matrix(const std::string& label, const Matrix& got, const Rows& expected) {
    const Matrix want = mat(expected);
    lines_.push_back({label, format_rows(got), format_rows(want), got == want});
  }
  void poly(const std::string& label, const Polynomial& got, const char* expected) {
    const Polynomial want = parse_polynomial(expected);
    lines_.push_back({label, to_string(got), to_string(want), got == want});
  }
  void element(const std::string& label, const Element& got, const char* expected) {
    const Element want = parse_element(expected);
    lines_.push_back({label, to_string(got), to_string(want), got == want});
  }
  void roots(const std::string& label, const RootSet& got, const std::string& expected) {
    const std::string g = one_line(to_string(got));
    lines_.push_back({label, g, expected, g == expected});
  }
  void truth(const std::string& label, bool got, bool expected) {
    auto s = [](bool b) { return std::string(b ? "true" : "false"); };
    lines_.push_back({label, s(got), s(expected), got == expected});
  }
  std::vector<DemoLine> take() { return std::move(lines_); }

 private:
  std::vector<DemoLine> lines_;
};

// f_A(x) = x^2 + 2x + 2 and f_{A^2}(x) = x^2 + 4x + 5g.
std::vector<DemoLine> demo_2_30() {
  Transcript t;
  const Matrix a = mat({{"0", "0"}, {"1", "2"}});
  const Matrix a2 = a * a;
  t.matrix("A^2", a2, {{"1", "2"}, {"3", "4"}});
  const Polynomial fa = char_poly(a);
  const Polynomial fa2 = char_poly(a2);
  t.poly("f_A", fa, "2, 2, 0");
  t.poly("f_{A^2}", fa2, "5g, 4, 0");
  t.roots("roots f_A", roots(fa), "corner: 0 (x1) 2 (x1); noncorner:");
  t.roots("roots f_{A^2}", roots(fa2), "corner: 4 (x1); noncorner: [-inf, 1]");
  return t.take();
}

// nabla alternates between two matrices from the first application on.
std::vector<DemoLine> demo_3_6() {
  Transcript t;
  const Matrix a = mat({{"0", "0", "-inf"}, {"-inf", "0", "0"}, {"1", "-inf", "0"}});
  const Rows odd = {{"-1", "-1", "-1"}, {"0", "-1", "-1"}, {"0", "0", "-1"}};
  const Rows even = {{"0", "0", "-1g"}, {"0g", "0", "0"}, {"1", "0g", "0"}};
  Matrix it = a;
  for (int k = 1; k <= 4; ++k) {
    it = nabla(it);
    t.matrix("nabla^" + std::to_string(k) + "(A)", it, k % 2 ? odd : even);
  }
  return t.take();
}

// Tropical conjugates B' = nabla(A) B A.
std::vector<DemoLine> demo_5_3() {
  Transcript t;
  {
    const Matrix a = mat({{"2", "0"}, {"1", "0"}});
    const Matrix b = mat({{"1", "2"}, {"3", "1"}});
    const Matrix bp = conjugate(a, b);
    t.matrix("(1) nabla(A) B A", bp, {{"3", "1g"}, {"5", "3"}});
    const Polynomial fbp = char_poly(bp);
    const Polynomial fb = char_poly(b);
    t.poly("(1) f_{B'}", fbp, "6g, 3g, 0");
    t.poly("(1) f_B", fb, "5, 1g, 0");
    t.truth("(1) f_{B'} |= f_B", poly_ghost_surpasses(fbp, fb), true);
  }
  {
    const Matrix a = mat({{"0", "1g"}, {"-inf", "0"}});
    const Matrix b = mat({{"0", "0"}, {"1", "2"}});
    const Matrix bp = mat({{"1", "3"}, {"1", "2"}});
    const Matrix conj = conjugate(a, b);
    t.matrix("(2) nabla(A) B A", conj, {{"2g", "3g"}, {"1", "2g"}});
    t.truth("(2) nabla(A) B A |= B'", mat_ghost_surpasses(conj, bp), true);
    t.element("(2) det(B)", determinant(b), "2");
    t.element("(2) det(B')", determinant(bp), "4");
    const bool related = ghost_surpasses(determinant(b), determinant(bp)) ||
                         ghost_surpasses(determinant(bp), determinant(b));
    t.truth("(2) det(B), det(B') related by |=", related, false);
  }
  return t.take();
}

// det(A) f_{nabla(A)} has the coefficients of f_A in reverse order.
std::vector<DemoLine> demo_6_1() {
  Transcript t;
  const Matrix a = mat({{"1", "0", "-inf"}, {"3", "4", "-inf"}, {"-inf", "-inf", "1"}});
  const Polynomial fa = char_poly(a);
  t.poly("f_A", fa, "6, 5g, 4, 0");
  t.element("det(A)", determinant(a), "6");
  t.matrix("adj(A)", adjugate(a), {{"5", "1", "-inf"}, {"4", "2", "-inf"}, {"-inf", "-inf", "5"}});
  const Matrix an = nabla(a);
  t.matrix("nabla(A)", an, {{"-1", "-5", "-inf"}, {"-2", "-4", "-inf"}, {"-inf", "-inf", "-1"}});
  const Polynomial fb = char_poly(an);
  t.poly("f_{nabla(A)}", fb, "-6, -2, -1g, 0");
  std::vector<Element> scaled;
  for (const Element& c : fb.coeffs()) scaled.push_back(determinant(a) * c);
  const Polynomial det_fb(scaled);
  t.poly("det(A) f_{nabla(A)}", det_fb, "0, 4, 5g, 6");
  std::vector<Element> reversed(fa.coeffs().rbegin(), fa.coeffs().rend());
  t.truth("reversed coefficients equal", det_fb == Polynomial(reversed), true);
  return t.take();
}

const std::map<std::string, std::function<std::vector<DemoLine>()>>& registry() {
  static const std::map<std::string, std::function<std::vector<DemoLine>()>> demos{
      {"2.30", demo_2_30}, {"3.6", demo_3_6}, {"5.3", demo_5_3}, {"6.1", demo_6_1}};
  return demos;
}

}  // namespace

std::string format_rows(const Matrix& a) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < a.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < a.cols(); ++j) os << (j ? ", " : "") << a(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

const std::vector<std::string>& demo_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [id, fn] : registry()) out.push_back(id);
    return out;
  }();
  return ids;
}

std::vector<DemoLine> run_demo(const std::string& id) {
  const auto it = registry().find(id);
  if (it == registry().end()) throw error(errc::invalid_argument, "unknown demo '" + id + "'");
  return it->second();
}

}  // namespace supertrop::cli
