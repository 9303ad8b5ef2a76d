#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace supertrop {

// Values live in the ordered group (Q, +). boost::rational keeps them reduced,
// so two equal rationals have identical numerator/denominator pairs.
using Rational = boost::rational<std::int64_t>;

/// One scalar of the supertropical semiring R = T u G u {-inf}.
///
/// Addition is max with ties (or a ghost at the maximum) producing a ghost;
/// multiplication adds the underlying rationals. -inf is the additive zero
/// 0_R and the tangible 0 is the multiplicative unit 1_R.
class Element {
 public:
  enum class Kind : std::uint8_t { NegInfinity, Tangible, Ghost };

  constexpr Element() = default;

  static Element neg_inf() { return Element(); }
  static Element tangible(Rational value) { return Element(Kind::Tangible, value); }
  static Element ghost(Rational value) { return Element(Kind::Ghost, value); }
  static Element tangible(std::int64_t value) { return tangible(Rational(value)); }
  static Element ghost(std::int64_t value) { return ghost(Rational(value)); }

  // Semiring constants.
  static Element zero() { return neg_inf(); }
  static Element one() { return tangible(Rational(0)); }

  Kind kind() const noexcept { return kind_; }
  bool is_neg_inf() const noexcept { return kind_ == Kind::NegInfinity; }
  bool is_tangible() const noexcept { return kind_ == Kind::Tangible; }
  bool is_ghost() const noexcept { return kind_ == Kind::Ghost; }

  // The rational value; zero for -inf, which callers must check first.
  const Rational& value() const noexcept { return value_; }

  friend bool operator==(const Element&, const Element&) = default;

 private:
  Element(Kind kind, Rational value) : kind_(kind), value_(value) {}

  Kind kind_ = Kind::NegInfinity;
  Rational value_{0};
};

Element add(const Element& a, const Element& b);
Element mul(const Element& a, const Element& b);

inline Element operator+(const Element& a, const Element& b) { return add(a, b); }
inline Element operator*(const Element& a, const Element& b) { return mul(a, b); }
inline Element& operator+=(Element& a, const Element& b) { return a = add(a, b); }
inline Element& operator*=(Element& a, const Element& b) { return a = mul(a, b); }

// Idempotent accumulation: the larger nu-value wins, and on a nu-tie the result
// is a ghost only if one of the arguments already is. Unlike add, join(a, a) = a.
Element join(const Element& a, const Element& b);

Element nu(const Element& a);
Element hat(const Element& a);

// a |=gs b: a = b, or a is a ghost whose nu-value is at least b's.
bool ghost_surpasses(const Element& a, const Element& b);
bool nu_equiv(const Element& a, const Element& b);

// Three-way comparison of nu-values with -inf below everything.
int nu_compare(const Element& a, const Element& b);

// Multiplicative inverse of a tangible; throws errc::not_invertible otherwise.
Element invert(const Element& a);

// a^k; a^0 = 1_R for every a (including -inf).
Element power(const Element& a, std::int64_t k);

// The k-th root, value/k, same kind. k >= 1.
Element kth_root(const Element& a, std::int64_t k);

// Scalar grammar: `-inf` | RATIONAL | RATIONAL `g`, RATIONAL = [-]digits[/digits].
std::string to_string(const Element& a);
Element parse_element(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Element& a);

}  // namespace supertrop
