#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "supertrop/generate.hpp"
#include "supertrop/matrix.hpp"

namespace supertrop {

// Outcome of one check on one set of inputs. A counterexample is a violation
// of a conjectured (unproven) relation: it is reported but is not a failure.
struct Verdict {
  bool pass = true;
  bool counterexample = false;
  std::string details;
};

// Theorem-level checks. Each is a pure function of its inputs.
Verdict chk_det_product(const Matrix& a, const Matrix& b);
Verdict chk_det_invertible(const Matrix& p, const Matrix& a);
Verdict chk_adj_rules(const Matrix& a);
Verdict chk_adj_product(const Matrix& a, const Matrix& b);
Verdict chk_pseudo_identity(const Matrix& a);
Verdict chk_definite_form(const Matrix& a);
Verdict chk_nabla_period(const Matrix& a, std::size_t kmax = 4);
Verdict chk_definite_stabilization(const Matrix& a);
Verdict chk_cycle_dominance(const Matrix& a);
Verdict chk_hamilton_cayley(const Matrix& a);
Verdict chk_charpoly_power(const Matrix& a, std::size_t m);
Verdict chk_eigen_power(const Matrix& a, std::size_t m);
Verdict chk_charpoly_function(const Matrix& a, std::size_t samples = 50);
Verdict chk_similarity(const Matrix& a, const Matrix& b);

/// det(A) * b_k against a_{n-k}, where f_A = sum a_k x^k and
/// f_{nabla(A)} = sum b_k x^k, for a non-singular A.
struct CoefficientVerdict {
  std::size_t k;
  Element lhs;  // det(A) * b_k
  Element rhs;  // a_{n-k}
  bool surpasses;
  bool asserted;  // proven range: violation is a failure, not a finding
};

struct ConjectureVerdict {
  std::vector<CoefficientVerdict> coefficients;
  bool asserted_pass = true;
  bool counterexample = false;
};

// Throws errc::not_nonsingular.
ConjectureVerdict conjecture_coefficients(const Matrix& a);
Verdict chk_conjecture_62(const Matrix& a);

// Upper or lower triangular (all -inf strictly below, or strictly above, the diagonal).
bool is_triangular(const Matrix& a);

// ---------------------------------------------------------------------------
// Randomised suite.

struct Failure {
  std::uint64_t trial = 0;
  std::vector<Matrix> inputs;
  std::string details;
};

struct CheckReport {
  std::string check_id;
  GenConfig config;
  std::size_t trials = 0;
  std::size_t passes = 0;
  std::vector<Failure> failures;         // sorted by trial
  std::vector<Failure> counterexamples;  // findings for open conjectures
  std::optional<double> elapsed_ms;      // only set on request; breaks byte-identity
};

// Identifiers accepted by run_check, in suite order.
std::span<const std::string_view> check_ids();
bool is_check_id(std::string_view id);

// Runs `trials` independent instances. Each trial draws its inputs from an
// engine seeded with trial_seed(cfg.seed, trial); the check decides which
// constraint each input needs (cfg.constraint is ignored).
CheckReport run_check(std::string_view id, const GenConfig& cfg, std::size_t trials);

// Re-runs a single check on stored inputs, e.g. from a report failure.
Verdict replay_check(std::string_view id, std::span<const Matrix> inputs);

// Conjecture explorer: run_check("conjecture_62") on non-singular samples
// drawn exactly as cfg describes (cfg.constraint may add Triangular).
CheckReport explore_conjecture(const GenConfig& cfg, std::size_t trials);

}  // namespace supertrop
