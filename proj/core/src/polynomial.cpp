#include "supertrop/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "supertrop/error.hpp"

namespace supertrop {

Polynomial::Polynomial() : coeffs_{Element::neg_inf()} {}

Polynomial::Polynomial(std::vector<Element> coeffs) : coeffs_(std::move(coeffs)) {
  while (coeffs_.size() > 1 && coeffs_.back().is_neg_inf()) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.push_back(Element::neg_inf());
}

Polynomial Polynomial::constant(const Element& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Element& c, std::size_t exponent) {
  std::vector<Element> coeffs(exponent + 1);
  coeffs[exponent] = c;
  return Polynomial(std::move(coeffs));
}

bool Polynomial::is_neg_inf() const noexcept {
  return coeffs_.size() == 1 && coeffs_[0].is_neg_inf();
}

bool Polynomial::is_tangible() const noexcept {
  return std::none_of(coeffs_.begin(), coeffs_.end(),
                      [](const Element& c) { return c.is_ghost(); });
}

Element Polynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Element::neg_inf();
}

Element eval(const Polynomial& f, const Element& x) {
  Element sum = Element::neg_inf();
  const auto coeffs = f.coeffs();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    sum += coeffs[i] * power(x, static_cast<std::int64_t>(i));
  }
  return sum;
}

Polynomial poly_add(const Polynomial& f, const Polynomial& g) {
  const std::size_t n = std::max(f.degree(), g.degree()) + 1;
  std::vector<Element> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = f.coeff(i) + g.coeff(i);
  return Polynomial(std::move(out));
}

Polynomial poly_mul(const Polynomial& f, const Polynomial& g) {
  const auto a = f.coeffs();
  const auto b = g.coeffs();
  std::vector<Element> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return Polynomial(std::move(out));
}

Polynomial poly_pow(const Polynomial& f, std::size_t m) {
  Polynomial out = Polynomial::constant(Element::one());
  for (std::size_t k = 0; k < m; ++k) out = poly_mul(out, f);
  return out;
}

Polynomial inflate(const Polynomial& f, std::size_t m) {
  if (m == 0) throw error(errc::invalid_argument, "inflate factor must be positive");
  const auto a = f.coeffs();
  std::vector<Element> out((a.size() - 1) * m + 1);
  for (std::size_t i = 0; i < a.size(); ++i) out[i * m] = a[i];
  return Polynomial(std::move(out));
}

std::vector<std::size_t> essential_exponents(const Polynomial& f) {
  const auto a = f.coeffs();
  // Upper concave hull of (i, value(a_i)) by monotone chain; a middle point on
  // or under the chord is dropped, so only strict vertices survive.
  std::vector<std::size_t> hull;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k].is_neg_inf()) continue;
    while (hull.size() >= 2) {
      const std::size_t i = hull[hull.size() - 2];
      const std::size_t j = hull.back();
      const Rational lhs = (a[j].value() - a[i].value()) * Rational(static_cast<std::int64_t>(k - i));
      const Rational rhs = (a[k].value() - a[i].value()) * Rational(static_cast<std::int64_t>(j - i));
      if (lhs > rhs) break;
      hull.pop_back();
    }
    hull.push_back(k);
  }
  return hull;
}

Polynomial essential(const Polynomial& f) {
  std::vector<Element> out(f.degree() + 1);
  for (std::size_t i : essential_exponents(f)) out[i] = f.coeff(i);
  return Polynomial(std::move(out));
}

bool poly_ghost_surpasses(const Polynomial& f, const Polynomial& g) {
  const std::size_t n = std::max(f.degree(), g.degree()) + 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (!ghost_surpasses(f.coeff(i), g.coeff(i))) return false;
  }
  return true;
}

std::vector<Element> witness_points(const Polynomial& f, const Polynomial& g) {
  std::vector<std::pair<std::size_t, Rational>> lines;
  for (const Polynomial* p : {&f, &g}) {
    const auto c = p->coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (!c[i].is_neg_inf()) lines.emplace_back(i, c[i].value());
    }
  }
  std::vector<Rational> cuts;
  for (std::size_t a = 0; a < lines.size(); ++a) {
    for (std::size_t b = a + 1; b < lines.size(); ++b) {
      const auto& [i, u] = lines[a];
      const auto& [j, v] = lines[b];
      if (i == j) continue;
      cuts.push_back((u - v) / Rational(static_cast<std::int64_t>(j) - static_cast<std::int64_t>(i)));
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<Element> out{Element::neg_inf()};
  if (cuts.empty()) {
    out.push_back(Element::one());
    return out;
  }
  out.push_back(Element::tangible(cuts.front() - 1));
  for (std::size_t k = 0; k < cuts.size(); ++k) {
    out.push_back(Element::tangible(cuts[k]));
    if (k + 1 < cuts.size()) out.push_back(Element::tangible((cuts[k] + cuts[k + 1]) / 2));
  }
  out.push_back(Element::tangible(cuts.back() + 1));
  return out;
}

bool poly_fn_ghost_surpasses(const Polynomial& f, const Polynomial& g) {
  for (const Element& x : witness_points(f, g)) {
    if (!ghost_surpasses(eval(f, x), eval(g, x))) return false;
  }
  return true;
}

bool poly_fn_equal(const Polynomial& f, const Polynomial& g) {
  for (const Element& x : witness_points(f, g)) {
    if (eval(f, x) != eval(g, x)) return false;
  }
  return true;
}

bool RootInterval::contains(const Element& x) const {
  if (x.is_neg_inf()) return lo.is_neg_inf();
  if (!lo.is_neg_inf() && x.value() < lo.value()) return false;
  return !hi || x.value() <= hi->value();
}

bool RootSet::contains(const Element& r) const {
  if (r.is_ghost()) throw error(errc::invalid_argument, "root membership is defined for tangible points");
  if (r.is_neg_inf() && neg_inf_multiplicity > 0) return true;
  for (const auto& c : corner) {
    if (c.value == r) return true;
  }
  return std::any_of(noncorner.begin(), noncorner.end(),
                     [&](const RootInterval& iv) { return iv.contains(r); });
}

RootSet roots(const Polynomial& f) {
  if (f.is_neg_inf()) {
    throw error(errc::degenerate_polynomial, "every point is a root of -inf");
  }
  const std::vector<std::size_t> v = essential_exponents(f);
  const auto a = f.coeffs();

  // Breakpoint between consecutive essential monomials i < j: the x where
  // a_i x^i and a_j x^j have equal nu-value.
  std::vector<Element> breaks;
  for (std::size_t t = 0; t + 1 < v.size(); ++t) {
    const Rational gap(static_cast<std::int64_t>(v[t + 1] - v[t]));
    breaks.push_back(Element::tangible((a[v[t]].value() - a[v[t + 1]].value()) / gap));
  }

  RootSet out;
  out.neg_inf_multiplicity = v.front();
  for (std::size_t t = 0; t + 1 < v.size(); ++t) {
    if (a[v[t]].is_tangible() && a[v[t + 1]].is_tangible()) {
      out.corner.push_back({breaks[t], v[t + 1] - v[t]});
    }
  }
  for (std::size_t t = 0; t < v.size(); ++t) {
    if (!a[v[t]].is_ghost()) continue;
    RootInterval iv{t == 0 ? Element::neg_inf() : breaks[t - 1],
                    t + 1 == v.size() ? std::nullopt : std::optional<Element>(breaks[t])};
    if (!out.noncorner.empty() && out.noncorner.back().hi == iv.lo) {
      out.noncorner.back().hi = iv.hi;
    } else {
      out.noncorner.push_back(iv);
    }
  }
  return out;
}

std::string to_string(const Polynomial& f) {
  std::string out;
  for (const Element& c : f.coeffs()) {
    if (!out.empty()) out += ", ";
    out += to_string(c);
  }
  return out;
}

Polynomial parse_polynomial(std::string_view text) {
  std::vector<Element> coeffs;
  while (true) {
    const std::size_t comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    coeffs.push_back(parse_element(item));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Polynomial(std::move(coeffs));
}

std::string to_string(const RootSet& roots) {
  std::ostringstream os;
  os << "corner:";
  for (const auto& c : roots.corner) os << ' ' << c.value << " (x" << c.multiplicity << ')';
  os << "\nnoncorner:";
  for (const auto& iv : roots.noncorner) {
    os << " [" << iv.lo << ", " << (iv.hi ? to_string(*iv.hi) : std::string("+inf")) << ']';
  }
  if (roots.neg_inf_multiplicity > 0) {
    os << "\nneg-inf: (x" << roots.neg_inf_multiplicity << ')';
  }
  return os.str();
}

}  // namespace supertrop
