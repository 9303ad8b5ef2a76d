#include "supertrop/matrix.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "supertrop/error.hpp"

namespace supertrop {

namespace {

void require_square(const Matrix& a, const char* op) {
  if (!a.is_square()) {
    throw error(errc::dimension_mismatch,
                std::string(op) + " needs a square matrix, got " + std::to_string(a.rows()) +
                    "x" + std::to_string(a.cols()));
  }
}

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw error(errc::dimension_mismatch, std::string(op) + " needs matrices of equal shape");
  }
}

void require_cap(std::size_t n, std::size_t cap) {
  if (n > cap) {
    throw error(errc::size_cap_exceeded,
                "dimension " + std::to_string(n) + " exceeds the size cap " + std::to_string(cap));
  }
}

// dp[mask] = supertropical sum over injective maps rows {0..|mask|-1} -> mask.
std::vector<Element> permanent_table(const Matrix& a) {
  const std::size_t n = a.rows();
  std::vector<Element> dp(std::size_t{1} << n);
  dp[0] = Element::one();
  for (std::uint32_t mask = 1; mask < dp.size(); ++mask) {
    const std::size_t row = static_cast<std::size_t>(std::popcount(mask)) - 1;
    Element sum;
    for (std::size_t j = 0; j < n; ++j) {
      if (mask & (1u << j)) sum += dp[mask ^ (1u << j)] * a(row, j);
    }
    dp[mask] = sum;
  }
  return dp;
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Element> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw error(errc::dimension_mismatch, "entry count does not match rows x cols");
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = Element::one();
  return out;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Element>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  std::vector<Element> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw error(errc::dimension_mismatch, "ragged rows");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return Matrix(r, c, std::move(entries));
}

std::string_view to_string(SingularityClass c) {
  switch (c) {
    case SingularityClass::NonSingular: return "NonSingular";
    case SingularityClass::Singular: return "Singular";
    case SingularityClass::StrictlySingular: return "StrictlySingular";
  }
  return "?";
}

std::string_view to_string(PseudoIdentityClass c) {
  switch (c) {
    case PseudoIdentityClass::PseudoIdentity: return "PseudoIdentity";
    case PseudoIdentityClass::GhostPseudoIdentity: return "GhostPseudoIdentity";
    case PseudoIdentityClass::Neither: return "Neither";
  }
  return "?";
}

Matrix mat_add(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "mat_add");
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
  return out;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw error(errc::dimension_mismatch, "mat_mul: inner dimensions differ");
  }
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Element sum;
      for (std::size_t k = 0; k < a.cols(); ++k) sum += a(i, k) * b(k, j);
      out(i, j) = sum;
    }
  }
  return out;
}

Matrix scalar_mul(const Element& c, const Matrix& a) {
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = c * a(i, j);
  return out;
}

Matrix nu(const Matrix& a) {
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = nu(a(i, j));
  return out;
}

Matrix transpose(const Matrix& a) {
  Matrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

Matrix minor_of(const Matrix& a, std::size_t r, std::size_t c) {
  if (r >= a.rows() || c >= a.cols()) throw error(errc::bad_indices, "minor index out of range");
  Matrix out(a.rows() - 1, a.cols() - 1);
  for (std::size_t i = 0, oi = 0; i < a.rows(); ++i) {
    if (i == r) continue;
    for (std::size_t j = 0, oj = 0; j < a.cols(); ++j) {
      if (j == c) continue;
      out(oi, oj++) = a(i, j);
    }
    ++oi;
  }
  return out;
}

Matrix principal_submatrix(const Matrix& a, std::span<const std::size_t> indices) {
  Matrix out(indices.size(), indices.size());
  for (std::size_t i = 0; i < indices.size(); ++i) {
    for (std::size_t j = 0; j < indices.size(); ++j) {
      if (indices[i] >= a.rows() || indices[j] >= a.cols()) {
        throw error(errc::bad_indices, "principal index out of range");
      }
      out(i, j) = a(indices[i], indices[j]);
    }
  }
  return out;
}

Element determinant(const Matrix& a, std::size_t size_cap) {
  require_square(a, "determinant");
  require_cap(a.rows(), size_cap);
  return permanent_table(a).back();
}

SingularityClass classify(const Matrix& a, std::size_t size_cap) {
  const Element d = determinant(a, size_cap);
  if (d.is_tangible()) return SingularityClass::NonSingular;
  if (d.is_ghost()) return SingularityClass::Singular;
  return SingularityClass::StrictlySingular;
}

std::optional<std::vector<std::size_t>> dominant_permutation(const Matrix& a,
                                                             std::size_t size_cap) {
  require_square(a, "dominant_permutation");
  require_cap(a.rows(), size_cap);
  const std::vector<Element> dp = permanent_table(a);
  if (!dp.back().is_tangible()) return std::nullopt;

  // Walk the unique dominant track back from the full column set. Every
  // partial sum on that track is itself attained exactly once.
  const std::size_t n = a.rows();
  std::vector<std::size_t> perm(n);
  std::uint32_t mask = static_cast<std::uint32_t>(dp.size() - 1);
  for (std::size_t row = n; row-- > 0;) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!(mask & (1u << j))) continue;
      if (nu_equiv(dp[mask ^ (1u << j)] * a(row, j), dp[mask])) {
        perm[row] = j;
        mask ^= (1u << j);
        break;
      }
    }
  }
  return perm;
}

Matrix adjugate(const Matrix& a, std::size_t size_cap) {
  require_square(a, "adjugate");
  require_cap(a.rows(), size_cap);
  const std::size_t n = a.rows();
  Matrix out(n, n);
  if (n == 1) {
    out(0, 0) = Element::one();
    return out;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = determinant(minor_of(a, j, i), size_cap);
  return out;
}

Matrix nabla(const Matrix& a, std::size_t size_cap) {
  const Element d = determinant(a, size_cap);
  if (d.is_neg_inf()) {
    throw error(errc::strictly_singular, "pseudo-inverse of a matrix with determinant -inf");
  }
  const Element scale = d.is_tangible() ? invert(d) : nu(invert(hat(d)));
  return scalar_mul(scale, adjugate(a, size_cap));
}

Matrix nabla_iter(const Matrix& a, std::size_t k, std::size_t size_cap) {
  Matrix out = a;
  for (std::size_t i = 0; i < k; ++i) out = nabla(out, size_cap);
  return out;
}

PseudoIdentityClass pseudo_identity_class(const Matrix& m, std::size_t size_cap) {
  if (!m.is_square()) return PseudoIdentityClass::Neither;
  const std::size_t n = m.rows();
  const bool tangible_diag = [&] {
    for (std::size_t i = 0; i < n; ++i)
      if (m(i, i) != Element::one()) return false;
    return true;
  }();
  const bool ghost_diag = [&] {
    for (std::size_t i = 0; i < n; ++i)
      if (m(i, i) != Element::ghost(0)) return false;
    return true;
  }();
  if (!tangible_diag && !ghost_diag) return PseudoIdentityClass::Neither;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && m(i, j).is_tangible()) return PseudoIdentityClass::Neither;
  if (m * m != m) return PseudoIdentityClass::Neither;

  const SingularityClass sc = classify(m, size_cap);
  if (tangible_diag && sc == SingularityClass::NonSingular) {
    return PseudoIdentityClass::PseudoIdentity;
  }
  if (ghost_diag && sc == SingularityClass::Singular) {
    return PseudoIdentityClass::GhostPseudoIdentity;
  }
  return PseudoIdentityClass::Neither;
}

bool is_definite(const Matrix& a, std::size_t size_cap) {
  if (!a.is_square()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    if (a(i, i) != Element::one()) return false;
  return determinant(a, size_cap) == Element::one();
}

DefiniteForm definite_form(const Matrix& a, Side side, std::size_t size_cap) {
  const auto perm = dominant_permutation(a, size_cap);
  if (!perm) throw error(errc::not_nonsingular, "definite form needs a tangible determinant");
  const std::size_t n = a.rows();

  // The conductor keeps only the dominant track: entry a_{i,pi(i)} at (i, pi(i)).
  DefiniteForm out{Matrix(n, n), Matrix(n, n)};
  for (std::size_t i = 0; i < n; ++i) out.conductor(i, (*perm)[i]) = a(i, (*perm)[i]);

  if (side == Side::Left) {
    // Row i of A, divided by its dominant entry, becomes row pi(i).
    for (std::size_t i = 0; i < n; ++i) {
      const Element scale = invert(a(i, (*perm)[i]));
      for (std::size_t j = 0; j < n; ++j) out.definite((*perm)[i], j) = scale * a(i, j);
    }
  } else {
    // Column pi(k), divided by a_{k,pi(k)}, becomes column k.
    for (std::size_t k = 0; k < n; ++k) {
      const Element scale = invert(a(k, (*perm)[k]));
      for (std::size_t i = 0; i < n; ++i) out.definite(i, k) = a(i, (*perm)[k]) * scale;
    }
  }
  return out;
}

Matrix elementary(const ElementaryKind& kind, std::size_t n) {
  Matrix out = Matrix::identity(n);
  std::visit(
      [&](const auto& k) {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, Transposition>) {
          if (k.i == k.j || k.i >= n || k.j >= n) throw error(errc::bad_indices, "transposition");
          out(k.i, k.i) = Element::neg_inf();
          out(k.j, k.j) = Element::neg_inf();
          out(k.i, k.j) = Element::one();
          out(k.j, k.i) = Element::one();
        } else if constexpr (std::is_same_v<K, DiagMultiplier>) {
          if (k.i >= n) throw error(errc::bad_indices, "diagonal multiplier");
          if (!k.alpha.is_tangible()) {
            throw error(errc::not_invertible, "diagonal multiplier needs a tangible scalar");
          }
          out(k.i, k.i) = k.alpha;
        } else {
          if (k.i == k.j || k.i >= n || k.j >= n) throw error(errc::bad_indices, "gaussian");
          out(k.i, k.j) = k.r;
        }
      },
      kind);
  return out;
}

Matrix permutation_matrix(std::span<const std::size_t> perm) {
  const std::size_t n = perm.size();
  Matrix out(n, n);
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (perm[i] >= n || seen[perm[i]]) throw error(errc::bad_indices, "not a permutation");
    seen[perm[i]] = true;
    out(i, perm[i]) = Element::one();
  }
  return out;
}

bool is_invertible(const Matrix& a) {
  if (!a.is_square()) return false;
  const std::size_t n = a.rows();
  std::vector<std::size_t> per_col(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t per_row = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (a(i, j).is_neg_inf()) continue;
      if (!a(i, j).is_tangible()) return false;
      ++per_row;
      ++per_col[j];
    }
    if (per_row != 1) return false;
  }
  return std::all_of(per_col.begin(), per_col.end(), [](std::size_t c) { return c == 1; });
}

Matrix mat_pow(const Matrix& a, std::size_t k) {
  require_square(a, "mat_pow");
  Matrix out = Matrix::identity(a.rows());
  for (std::size_t i = 0; i < k; ++i) out = out * a;
  return out;
}

namespace {

Matrix join(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = join(a(i, j), b(i, j));
  return out;
}

}  // namespace

Matrix kleene_star(const Matrix& a, std::size_t size_cap) {
  if (!is_definite(a, size_cap)) throw error(errc::not_definite, "Kleene star needs a definite matrix");
  const std::size_t n = a.rows();
  Matrix power = Matrix::identity(n);
  Matrix acc = power;
  for (std::size_t k = 1; k < n; ++k) {
    power = power * a;
    acc = join(acc, power);
  }
  return acc;
}

std::pair<Matrix, std::size_t> kleene_star_fixpoint(const Matrix& a, std::size_t max_power) {
  require_square(a, "kleene_star_fixpoint");
  Matrix power = Matrix::identity(a.rows());
  Matrix acc = power;
  for (std::size_t k = 1; k <= max_power; ++k) {
    const Matrix next = power * a;
    const Matrix grown = join(acc, next);
    const bool settled = grown == acc && mat_nu_equiv(next, power);
    power = next;
    acc = grown;
    if (settled) return {acc, k};
  }
  throw error(errc::not_definite, "powers did not stabilise; matrix is not definite");
}

bool mat_ghost_surpasses(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "mat_ghost_surpasses");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!ghost_surpasses(a(i, j), b(i, j))) return false;
  return true;
}

bool mat_nu_equiv(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "mat_nu_equiv");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!nu_equiv(a(i, j), b(i, j))) return false;
  return true;
}

bool is_ghost_matrix(const Matrix& a) {
  return std::none_of(a.entries().begin(), a.entries().end(),
                      [](const Element& e) { return e.is_tangible(); });
}

}  // namespace supertrop
