#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>

#include "supertrop/matrix.hpp"

namespace supertrop {

enum class Constraint { None, NonSingular, Definite, Triangular, Invertible };

std::string_view to_string(Constraint c);
Constraint parse_constraint(std::string_view text);

/// Sampling scheme for random matrices.
///
/// Entries are -inf with probability neginf_prob, otherwise k/denominator with
/// k uniform in [lo, hi], turned into a ghost with probability ghost_prob.
/// Constraints:
///   NonSingular  rejection on a tangible determinant.
///   Definite     diagonal 1_R, off-diagonal values drawn from [lo, min(hi, 0)],
///                rejection on is_definite.
///   Triangular   upper triangular with a tangible diagonal (so non-singular).
///   Invertible   generalized permutation matrix with tangible entries.
struct GenConfig {
  std::size_t n = 3;
  std::int64_t lo = -10;
  std::int64_t hi = 10;
  std::int64_t denominator = 1;
  double neginf_prob = 0.2;
  double ghost_prob = 0.1;
  Constraint constraint = Constraint::None;
  std::uint64_t seed = 0;
  std::size_t max_attempts = 1000;
};

// Throws errc::invalid_argument on out-of-range fields.
void validate(const GenConfig& cfg);

// Deterministic in cfg.seed.
Matrix gen_matrix(const GenConfig& cfg);
// Draws from a caller-owned engine; cfg.seed is ignored.
Matrix gen_matrix(const GenConfig& cfg, std::mt19937_64& rng);

// Independent stream per trial, so results do not depend on trial order.
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial);

}  // namespace supertrop
