#include "supertrop/generate.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "supertrop/error.hpp"

namespace supertrop {

std::string_view to_string(Constraint c) {
  switch (c) {
    case Constraint::None: return "none";
    case Constraint::NonSingular: return "nonsingular";
    case Constraint::Definite: return "definite";
    case Constraint::Triangular: return "triangular";
    case Constraint::Invertible: return "invertible";
  }
  return "?";
}

Constraint parse_constraint(std::string_view text) {
  for (Constraint c : {Constraint::None, Constraint::NonSingular, Constraint::Definite,
                       Constraint::Triangular, Constraint::Invertible}) {
    if (text == to_string(c)) return c;
  }
  throw error(errc::invalid_argument, "unknown constraint '" + std::string(text) + "'");
}

void validate(const GenConfig& cfg) {
  if (cfg.n == 0) throw error(errc::invalid_argument, "n must be positive");
  if (cfg.n > kDefaultSizeCap) throw error(errc::size_cap_exceeded, "n exceeds the size cap");
  if (cfg.lo > cfg.hi) throw error(errc::invalid_argument, "empty numerator range");
  if (cfg.denominator < 1) throw error(errc::invalid_argument, "denominator must be positive");
  auto prob_ok = [](double p) { return p >= 0.0 && p <= 1.0; };
  if (!prob_ok(cfg.neginf_prob) || !prob_ok(cfg.ghost_prob)) {
    throw error(errc::invalid_argument, "probabilities must lie in [0, 1]");
  }
  if (cfg.max_attempts == 0) throw error(errc::invalid_argument, "max_attempts must be positive");
}

namespace {

Element draw_value(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi, std::int64_t den) {
  std::uniform_int_distribution<std::int64_t> value(lo, hi);
  return Element::tangible(Rational(value(rng), den));
}

Element draw_entry(const GenConfig& cfg, std::mt19937_64& rng, std::int64_t hi) {
  std::bernoulli_distribution neginf(cfg.neginf_prob);
  std::bernoulli_distribution ghost(cfg.ghost_prob);
  if (neginf(rng)) return Element::neg_inf();
  const Element e = draw_value(rng, cfg.lo, hi, cfg.denominator);
  return ghost(rng) ? nu(e) : e;
}

Matrix draw_plain(const GenConfig& cfg, std::mt19937_64& rng) {
  Matrix a(cfg.n, cfg.n);
  for (std::size_t i = 0; i < cfg.n; ++i)
    for (std::size_t j = 0; j < cfg.n; ++j) a(i, j) = draw_entry(cfg, rng, cfg.hi);
  return a;
}

Matrix draw_definite_candidate(const GenConfig& cfg, std::mt19937_64& rng) {
  const std::int64_t hi = std::min<std::int64_t>(cfg.hi, 0);
  Matrix a(cfg.n, cfg.n);
  for (std::size_t i = 0; i < cfg.n; ++i)
    for (std::size_t j = 0; j < cfg.n; ++j)
      a(i, j) = i == j ? Element::one() : draw_entry(cfg, rng, hi);
  return a;
}

Matrix draw_triangular(const GenConfig& cfg, std::mt19937_64& rng) {
  Matrix a(cfg.n, cfg.n);
  for (std::size_t i = 0; i < cfg.n; ++i) {
    a(i, i) = draw_value(rng, cfg.lo, cfg.hi, cfg.denominator);
    for (std::size_t j = i + 1; j < cfg.n; ++j) a(i, j) = draw_entry(cfg, rng, cfg.hi);
  }
  return a;
}

Matrix draw_invertible(const GenConfig& cfg, std::mt19937_64& rng) {
  std::vector<std::size_t> perm(cfg.n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  Matrix a(cfg.n, cfg.n);
  for (std::size_t i = 0; i < cfg.n; ++i) {
    a(i, perm[i]) = draw_value(rng, cfg.lo, cfg.hi, cfg.denominator);
  }
  return a;
}

template <typename Draw, typename Accept>
Matrix rejection(const GenConfig& cfg, std::mt19937_64& rng, Draw draw, Accept accept) {
  for (std::size_t attempt = 0; attempt < cfg.max_attempts; ++attempt) {
    Matrix a = draw(cfg, rng);
    if (accept(a)) return a;
  }
  throw error(errc::constraint_unsatisfiable,
              "no " + std::string(to_string(cfg.constraint)) + " matrix after " +
                  std::to_string(cfg.max_attempts) + " attempts");
}

}  // namespace

Matrix gen_matrix(const GenConfig& cfg, std::mt19937_64& rng) {
  validate(cfg);
  switch (cfg.constraint) {
    case Constraint::None:
      return draw_plain(cfg, rng);
    case Constraint::NonSingular:
      return rejection(cfg, rng, draw_plain, [](const Matrix& a) {
        return classify(a) == SingularityClass::NonSingular;
      });
    case Constraint::Definite:
      return rejection(cfg, rng, draw_definite_candidate,
                       [](const Matrix& a) { return is_definite(a); });
    case Constraint::Triangular:
      return draw_triangular(cfg, rng);
    case Constraint::Invertible:
      return draw_invertible(cfg, rng);
  }
  throw error(errc::invalid_argument, "unknown constraint");
}

Matrix gen_matrix(const GenConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  return gen_matrix(cfg, rng);
}

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial) {
  // splitmix64 finalizer over the combined key.
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (trial + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace supertrop
