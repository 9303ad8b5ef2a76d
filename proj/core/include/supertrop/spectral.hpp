#pragma once

#include <span>

#include "supertrop/matrix.hpp"
#include "supertrop/polynomial.hpp"

namespace supertrop {

/// Characteristic maxpolynomial f_A(x) = det(xI + A).
///
/// Built coefficient by coefficient: x^n has coefficient 1_R and x^k collects
/// the determinants of all (n-k)x(n-k) principal submatrices.
Polynomial char_poly(const Matrix& a, std::size_t size_cap = kDefaultSizeCap);

Element trace(const Matrix& a);

// Roots of the characteristic polynomial.
RootSet eigenvalues(const Matrix& a, std::size_t size_cap = kDefaultSizeCap);

// A v |=gs alpha v. v must be tangible (no ghosts), alpha tangible or -inf.
bool check_eigenpair(const Matrix& a, std::span<const Element> v, const Element& alpha);

// sum_i a_i A^i with A^0 = I.
Matrix eval_at_matrix(const Polynomial& f, const Matrix& a);

// nabla(A) * B * A.
Matrix conjugate(const Matrix& a, const Matrix& b, std::size_t size_cap = kDefaultSizeCap);

}  // namespace supertrop
