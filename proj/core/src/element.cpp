#include "supertrop/element.hpp"

#include <charconv>
#include <ostream>

#include "supertrop/error.hpp"

namespace supertrop {

std::string_view to_string(errc code) {
  switch (code) {
    case errc::parse_error: return "ParseError";
    case errc::not_invertible: return "NotInvertible";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::size_cap_exceeded: return "SizeCapExceeded";
    case errc::strictly_singular: return "StrictlySingular";
    case errc::not_nonsingular: return "NotNonSingular";
    case errc::not_definite: return "NotDefinite";
    case errc::bad_indices: return "BadIndices";
    case errc::degenerate_polynomial: return "DegeneratePolynomial";
    case errc::constraint_unsatisfiable: return "ConstraintUnsatisfiable";
    case errc::invalid_argument: return "InvalidArgument";
  }
  return "Unknown";
}

int nu_compare(const Element& a, const Element& b) {
  if (a.is_neg_inf()) return b.is_neg_inf() ? 0 : -1;
  if (b.is_neg_inf()) return 1;
  if (a.value() < b.value()) return -1;
  if (b.value() < a.value()) return 1;
  return 0;
}

Element add(const Element& a, const Element& b) {
  const int c = nu_compare(a, b);
  if (c > 0) return a;
  if (c < 0) return b;
  if (a.is_neg_inf()) return a;
  return Element::ghost(a.value());
}

Element join(const Element& a, const Element& b) {
  const int c = nu_compare(a, b);
  if (c > 0) return a;
  if (c < 0) return b;
  return a.is_ghost() ? a : b;
}

Element mul(const Element& a, const Element& b) {
  if (a.is_neg_inf() || b.is_neg_inf()) return Element::neg_inf();
  const Rational sum = a.value() + b.value();
  if (a.is_ghost() || b.is_ghost()) return Element::ghost(sum);
  return Element::tangible(sum);
}

Element nu(const Element& a) {
  return a.is_neg_inf() ? a : Element::ghost(a.value());
}

Element hat(const Element& a) {
  return a.is_neg_inf() ? a : Element::tangible(a.value());
}

bool ghost_surpasses(const Element& a, const Element& b) {
  if (a == b) return true;
  return a.is_ghost() && nu_compare(a, b) >= 0;
}

bool nu_equiv(const Element& a, const Element& b) { return nu_compare(a, b) == 0; }

Element invert(const Element& a) {
  if (!a.is_tangible()) {
    throw error(errc::not_invertible, to_string(a) + " has no multiplicative inverse");
  }
  return Element::tangible(-a.value());
}

Element power(const Element& a, std::int64_t k) {
  if (k < 0) throw error(errc::invalid_argument, "negative exponent");
  if (k == 0) return Element::one();
  if (a.is_neg_inf()) return a;
  const Rational v = a.value() * Rational(k);
  return a.is_ghost() ? Element::ghost(v) : Element::tangible(v);
}

Element kth_root(const Element& a, std::int64_t k) {
  if (k < 1) throw error(errc::invalid_argument, "root index must be positive");
  if (a.is_neg_inf()) return a;
  const Rational v = a.value() / Rational(k);
  return a.is_ghost() ? Element::ghost(v) : Element::tangible(v);
}

std::string to_string(const Element& a) {
  if (a.is_neg_inf()) return "-inf";
  std::string out = std::to_string(a.value().numerator());
  if (a.value().denominator() != 1) {
    out += '/';
    out += std::to_string(a.value().denominator());
  }
  if (a.is_ghost()) out += 'g';
  return out;
}

namespace {

[[noreturn]] void bad_scalar(std::string_view text, std::string_view why) {
  throw error(errc::parse_error,
              "invalid scalar '" + std::string(text) + "': " + std::string(why));
}

// Parses an unsigned run of digits; returns the number of characters consumed.
std::size_t parse_digits(std::string_view text, std::string_view s, std::int64_t& out) {
  std::size_t n = 0;
  while (n < s.size() && s[n] >= '0' && s[n] <= '9') ++n;
  if (n == 0) bad_scalar(text, "expected digits");
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + n, out);
  if (ec != std::errc{}) bad_scalar(text, "number out of range");
  (void)ptr;
  return n;
}

}  // namespace

Element parse_element(std::string_view text) {
  if (text == "-inf") return Element::neg_inf();
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && s.front() == '-') {
    negative = true;
    s.remove_prefix(1);
  }
  std::int64_t num = 0;
  s.remove_prefix(parse_digits(text, s, num));
  std::int64_t den = 1;
  if (!s.empty() && s.front() == '/') {
    s.remove_prefix(1);
    s.remove_prefix(parse_digits(text, s, den));
    if (den == 0) bad_scalar(text, "zero denominator");
  }
  bool ghost = false;
  if (!s.empty() && s.front() == 'g') {
    ghost = true;
    s.remove_prefix(1);
  }
  if (!s.empty()) bad_scalar(text, "trailing characters");
  const Rational value(negative ? -num : num, den);
  return ghost ? Element::ghost(value) : Element::tangible(value);
}

std::ostream& operator<<(std::ostream& os, const Element& a) { return os << to_string(a); }

}  // namespace supertrop
