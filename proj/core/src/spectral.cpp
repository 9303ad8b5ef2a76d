#include "supertrop/spectral.hpp"

#include <bit>
#include <cstdint>

#include "supertrop/error.hpp"

namespace supertrop {

Polynomial char_poly(const Matrix& a, std::size_t size_cap) {
  if (!a.is_square()) throw error(errc::dimension_mismatch, "char_poly needs a square matrix");
  if (a.rows() > size_cap) throw error(errc::size_cap_exceeded, "char_poly: dimension over cap");
  const std::size_t n = a.rows();
  std::vector<Element> coeffs(n + 1);
  std::vector<std::size_t> indices;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    indices.clear();
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) indices.push_back(i);
    const Element minor_det = indices.empty()
                                  ? Element::one()
                                  : determinant(principal_submatrix(a, indices), size_cap);
    coeffs[n - indices.size()] += minor_det;
  }
  return Polynomial(std::move(coeffs));
}

Element trace(const Matrix& a) {
  if (!a.is_square()) throw error(errc::dimension_mismatch, "trace needs a square matrix");
  Element sum;
  for (std::size_t i = 0; i < a.rows(); ++i) sum += a(i, i);
  return sum;
}

RootSet eigenvalues(const Matrix& a, std::size_t size_cap) {
  return roots(char_poly(a, size_cap));
}

bool check_eigenpair(const Matrix& a, std::span<const Element> v, const Element& alpha) {
  if (!a.is_square() || a.cols() != v.size()) {
    throw error(errc::dimension_mismatch, "eigenvector length must match the matrix");
  }
  for (const Element& e : v) {
    if (e.is_ghost()) throw error(errc::invalid_argument, "eigenvectors must be tangible");
  }
  if (alpha.is_ghost()) throw error(errc::invalid_argument, "eigenvalues must be tangible or -inf");
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Element av;
    for (std::size_t j = 0; j < a.cols(); ++j) av += a(i, j) * v[j];
    if (!ghost_surpasses(av, alpha * v[i])) return false;
  }
  return true;
}

Matrix eval_at_matrix(const Polynomial& f, const Matrix& a) {
  if (!a.is_square()) throw error(errc::dimension_mismatch, "eval_at_matrix needs a square matrix");
  Matrix power = Matrix::identity(a.rows());
  Matrix sum(a.rows(), a.cols());
  const auto coeffs = f.coeffs();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i > 0) power = power * a;
    sum = sum + scalar_mul(coeffs[i], power);
  }
  return sum;
}

Matrix conjugate(const Matrix& a, const Matrix& b, std::size_t size_cap) {
  return nabla(a, size_cap) * b * a;
}

}  // namespace supertrop
