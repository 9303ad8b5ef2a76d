#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "supertrop/element.hpp"

namespace supertrop {

// Largest dimension accepted by determinant-based operations unless a caller
// passes its own cap.
inline constexpr std::size_t kDefaultSizeCap = 10;

/// Dense row-major matrix over the supertropical semiring.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);  // filled with -inf
  Matrix(std::size_t rows, std::size_t cols, std::vector<Element> entries);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<Element>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Element& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Element& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Element> entries() const noexcept { return entries_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Element> entries_;
};

enum class SingularityClass { NonSingular, Singular, StrictlySingular };
enum class PseudoIdentityClass { PseudoIdentity, GhostPseudoIdentity, Neither };
enum class Side { Left, Right };

std::string_view to_string(SingularityClass c);
std::string_view to_string(PseudoIdentityClass c);

Matrix mat_add(const Matrix& a, const Matrix& b);
Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix scalar_mul(const Element& c, const Matrix& a);
inline Matrix operator+(const Matrix& a, const Matrix& b) { return mat_add(a, b); }
inline Matrix operator*(const Matrix& a, const Matrix& b) { return mat_mul(a, b); }

Matrix nu(const Matrix& a);
Matrix transpose(const Matrix& a);

// Deletes row r and column c.
Matrix minor_of(const Matrix& a, std::size_t r, std::size_t c);
// Keeps the rows and columns listed in `indices` (increasing).
Matrix principal_submatrix(const Matrix& a, std::span<const std::size_t> indices);

/// Tropical determinant (max-permanent) in supertropical arithmetic: tangible
/// iff a single all-tangible permutation track attains the maximum.
///
/// Evaluated as the supertropical sum over all n! tracks, organised as a
/// Laplace expansion memoised over column subsets; distributivity makes this
/// the same sum. Throws dimension_mismatch for non-square input and
/// size_cap_exceeded when n > size_cap.
Element determinant(const Matrix& a, std::size_t size_cap = kDefaultSizeCap);

SingularityClass classify(const Matrix& a, std::size_t size_cap = kDefaultSizeCap);

// For a non-singular matrix, the unique dominant permutation (row i -> perm[i]).
// Empty when the determinant is not tangible.
std::optional<std::vector<std::size_t>> dominant_permutation(
    const Matrix& a, std::size_t size_cap = kDefaultSizeCap);

// adj(A)_{i,j} = det(A with row j and column i deleted); adj of a 1x1 is [1_R].
Matrix adjugate(const Matrix& a, std::size_t size_cap = kDefaultSizeCap);

// det^-1 adj(A) for tangible det, (hat(det)^-1)^nu adj(A) for ghost det.
// Throws strictly_singular when det(A) = -inf.
Matrix nabla(const Matrix& a, std::size_t size_cap = kDefaultSizeCap);
Matrix nabla_iter(const Matrix& a, std::size_t k, std::size_t size_cap = kDefaultSizeCap);

PseudoIdentityClass pseudo_identity_class(const Matrix& m, std::size_t size_cap = kDefaultSizeCap);

// Diagonal all 1_R and determinant 1_R.
bool is_definite(const Matrix& a, std::size_t size_cap = kDefaultSizeCap);

struct DefiniteForm {
  Matrix conductor;  // generalized permutation matrix, det = det(A)
  Matrix definite;
};

// Left: A = conductor * definite. Right: A = definite * conductor.
// Throws not_nonsingular unless det(A) is tangible.
DefiniteForm definite_form(const Matrix& a, Side side, std::size_t size_cap = kDefaultSizeCap);

// Elementary matrices; indices are zero-based.
struct Transposition {
  std::size_t i, j;
};
struct DiagMultiplier {
  std::size_t i;
  Element alpha;
};
struct Gaussian {
  std::size_t i, j;
  Element r;
};
using ElementaryKind = std::variant<Transposition, DiagMultiplier, Gaussian>;

Matrix elementary(const ElementaryKind& kind, std::size_t n);
Matrix permutation_matrix(std::span<const std::size_t> perm);

// Generalized permutation matrix: exactly one finite entry per row and per
// column, and that entry is tangible.
bool is_invertible(const Matrix& a);

Matrix mat_pow(const Matrix& a, std::size_t k);

/// Kleene star of a definite matrix: the join of A^0, A^1, ..., A^(n-1).
///
/// Powers of a definite matrix stabilise (up to nu) from n-1 on, so the
/// truncation loses nothing. The join is idempotent, so a tangible value that
/// reappears in several powers stays tangible. Throws not_definite.
Matrix kleene_star(const Matrix& a, std::size_t size_cap = kDefaultSizeCap);

// Same closure, but keeps joining further powers until nothing changes.
// Used to cross-check the truncation; returns the number of powers consumed.
std::pair<Matrix, std::size_t> kleene_star_fixpoint(const Matrix& a, std::size_t max_power = 64);

bool mat_ghost_surpasses(const Matrix& a, const Matrix& b);
bool mat_nu_equiv(const Matrix& a, const Matrix& b);

// Every entry ghost or -inf.
bool is_ghost_matrix(const Matrix& a);

}  // namespace supertrop
