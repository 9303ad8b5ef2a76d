#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "supertrop/element.hpp"

namespace supertrop {

/// Dense univariate supertropical polynomial; coefficient i multiplies x^i.
///
/// Trailing -inf coefficients are stripped on construction, so the leading
/// coefficient is finite unless the polynomial is identically -inf (stored as
/// the single coefficient -inf).
class Polynomial {
 public:
  Polynomial();
  explicit Polynomial(std::vector<Element> coeffs);

  static Polynomial constant(const Element& c);
  static Polynomial monomial(const Element& c, std::size_t exponent);

  std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  bool is_neg_inf() const noexcept;
  bool is_tangible() const noexcept;  // every coefficient tangible or -inf

  // Coefficient of x^i; -inf beyond the degree.
  Element coeff(std::size_t i) const;
  std::span<const Element> coeffs() const noexcept { return coeffs_; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Element> coeffs_;
};

Element eval(const Polynomial& f, const Element& x);

Polynomial poly_add(const Polynomial& f, const Polynomial& g);
Polynomial poly_mul(const Polynomial& f, const Polynomial& g);
Polynomial poly_pow(const Polynomial& f, std::size_t m);

// f(x^m): coefficient i moves to exponent i*m.
Polynomial inflate(const Polynomial& f, std::size_t m);

// Drops every monomial whose removal leaves x -> eval(f, x) unchanged. These
// are exactly the monomials that are not strict vertices of the upper concave
// envelope of the points (i, nu-value of a_i).
Polynomial essential(const Polynomial& f);

// Exponents of the essential monomials, increasing.
std::vector<std::size_t> essential_exponents(const Polynomial& f);

// Coefficientwise: f_i |= g_i for every i.
bool poly_ghost_surpasses(const Polynomial& f, const Polynomial& g);

// Points at which every comparison between f and g as functions is decided:
// each crossing of two monomial lines of f or g, a point inside every gap
// between crossings, a point beyond each end, and -inf.
std::vector<Element> witness_points(const Polynomial& f, const Polynomial& g);

// As functions on T and -inf: f(x) |= g(x), resp. f(x) = g(x), for all x.
bool poly_fn_ghost_surpasses(const Polynomial& f, const Polynomial& g);
bool poly_fn_equal(const Polynomial& f, const Polynomial& g);

struct CornerRoot {
  Element value;  // tangible
  std::size_t multiplicity;

  friend bool operator==(const CornerRoot&, const CornerRoot&) = default;
};

// Closed interval of non-corner roots. lo == -inf means the interval is
// unbounded below (and contains -inf itself); an empty hi means +infinity.
struct RootInterval {
  Element lo;
  std::optional<Element> hi;

  bool contains(const Element& x) const;
  friend bool operator==(const RootInterval&, const RootInterval&) = default;
};

struct RootSet {
  std::vector<CornerRoot> corner;       // strictly increasing values
  std::vector<RootInterval> noncorner;  // disjoint, sorted
  // Multiplicity of the root 0_R = -inf contributed by a factor x^k (the
  // lowest finite exponent). Zero when the constant coefficient is finite.
  std::size_t neg_inf_multiplicity = 0;

  // Whether r is a root (eval(f, r) is ghost or -inf) according to this set.
  bool contains(const Element& r) const;

  friend bool operator==(const RootSet&, const RootSet&) = default;
};

// Throws errc::degenerate_polynomial for the identically -inf polynomial.
RootSet roots(const Polynomial& f);

// Text form: comma-separated coefficients from x^0 upward, e.g. "2, 2, 0".
std::string to_string(const Polynomial& f);
Polynomial parse_polynomial(std::string_view text);
std::string to_string(const RootSet& roots);

}  // namespace supertrop
