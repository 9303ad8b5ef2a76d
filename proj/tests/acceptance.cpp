// One line per acceptance criterion: PASS or FAIL with a short reason.
// The exit status is non-zero when a criterion fails that is not listed in
// kKnownFailures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "oracles.hpp"
#include "supertrop/checks.hpp"
#include "supertrop/report.hpp"
#include "supertrop/spectral.hpp"

using namespace supertrop;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Criteria that cannot pass as stated, with the reason.
const std::map<int, std::string> kKnownFailures{
    {1, "two printed golden values disagree with direct evaluation (nabla^3 of the 3x3 example and "
        "the top-right entry of the first conjugate); both are nu-equivalent to the computed values"},
};

Outcome golden_examples() {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  std::size_t lines = 0;
  std::string bad;
  for (const std::string& id : cli::demo_ids()) {
    for (const cli::DemoLine& line : cli::run_demo(id)) {
      ++lines;
      if (!line.match) {
        o.pass = false;
        bad += " [" + id + " " + line.label + ": got " + line.got + ", printed " + line.expected + "]";
      }
    }
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (ms > 1000) o.pass = false;
  std::ostringstream os;
  os << lines << " lines in " << static_cast<int>(ms) << " ms";
  if (!bad.empty()) os << "; mismatches:" << bad;
  o.detail = os.str();
  return o;
}

Outcome theorem_suite() {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  std::size_t runs = 0;
  for (std::size_t n = 2; n <= 5; ++n) {
    GenConfig cfg;
    cfg.n = n;
    cfg.seed = 42;
    for (std::string_view id : check_ids()) {
      if (id == "conjecture_62") continue;
      const CheckReport r = run_check(id, cfg, 500);
      runs += r.trials;
      if (!r.failures.empty()) {
        o.pass = false;
        o.detail += std::string(id) + " n=" + std::to_string(n) + ": " + std::to_string(r.failures.size()) +
                    " failures (" + r.failures.front().details + "); ";
      }
    }
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (s > 300) o.pass = false;
  o.detail += std::to_string(runs) + " trials, " + std::to_string(static_cast<int>(s)) + " s";
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::size_t det_bad = 0, point_bad = 0, points = 0;
  for (std::uint64_t t = 0; t < 1000; ++t) {
    GenConfig cfg;
    cfg.n = 1 + t % 6;
    cfg.seed = trial_seed(3, t);
    const Matrix a = gen_matrix(cfg);
    if (determinant(a) != oracle::permanent(a)) ++det_bad;
  }
  for (std::uint64_t t = 0; t < 200; ++t) {
    GenConfig cfg;
    cfg.n = 1 + t % 6;
    cfg.seed = trial_seed(4, t);
    const Matrix a = gen_matrix(cfg);
    const Polynomial f = char_poly(a);
    const auto xs = oracle::sample_points(f, f, 50);
    for (std::size_t k = 0; k < 50; ++k) {
      const Element x = Element::tangible(xs[k * xs.size() / 50]);
      ++points;
      if (eval(f, x) != oracle::permanent(scalar_mul(x, Matrix::identity(cfg.n)) + a)) ++point_bad;
    }
  }
  o.pass = det_bad == 0 && point_bad == 0 && points == 200 * 50;
  o.detail = "determinant: " + std::to_string(det_bad) + "/1000 disagree; char_poly: " + std::to_string(point_bad) +
             "/" + std::to_string(points) + " points disagree";
  return o;
}

Outcome conjecture() {
  Outcome o;
  auto explore = [&](std::size_t n, Constraint c, std::size_t trials, std::uint64_t seed) {
    GenConfig cfg;
    cfg.n = n;
    cfg.seed = seed;
    cfg.constraint = c;
    return explore_conjecture(cfg, trials);
  };
  // (a) proven coefficients, every n up to 6.
  std::size_t asserted_fail = 0, open_findings = 0;
  for (std::size_t n = 2; n <= 6; ++n) {
    const CheckReport r = explore(n, Constraint::NonSingular, 2000, 42);
    asserted_fail += r.failures.size();
    open_findings += r.counterexamples.size();
  }
  // (b) every coefficient: n = 2, 3, triangular up to 6, and 10^5 4x4 samples.
  std::size_t full_fail = 0;
  for (std::size_t n : {2, 3}) {
    const CheckReport r = explore(n, Constraint::NonSingular, 5000, 1);
    full_fail += r.failures.size() + r.counterexamples.size();
  }
  for (std::size_t n = 2; n <= 6; ++n) {
    const CheckReport r = explore(n, Constraint::Triangular, 2000, 5);
    full_fail += r.failures.size() + r.counterexamples.size();
  }
  const CheckReport four = explore(4, Constraint::NonSingular, 100000, 7);
  full_fail += four.failures.size() + four.counterexamples.size();
  // (c) n = 5 explorer completes with a well-formed report.
  const CheckReport five = explore(5, Constraint::NonSingular, 5000, 7);
  const std::string text = report_to_json(five);
  const CheckReport back = report_from_json(text);
  const bool well_formed = report_to_json(back) == text && back.trials == 5000 &&
                           back.passes + back.failures.size() == back.trials;

  o.pass = asserted_fail == 0 && full_fail == 0 && well_formed;
  o.detail = "(a) " + std::to_string(asserted_fail) + " proven-range violations, " + std::to_string(open_findings) +
             " open-range findings for n=5,6; (b) " + std::to_string(full_fail) +
             " violations, 4x4: " + std::to_string(four.trials) + " trials; (c) n=5 report " +
             (well_formed ? "well-formed" : "MALFORMED") + ", " + std::to_string(five.counterexamples.size()) +
             " counterexamples";
  return o;
}

Outcome determinism() {
  Outcome o;
  const std::vector<std::vector<std::string>> commands{
      {"check", "--suite", "all", "--n", "2,3,4", "--trials", "50", "--seed", "42"},
      {"check", "--suite", "similarity", "--n", "4", "--trials", "200", "--seed", "3", "--range=-3,3"},
      {"explore", "--n", "5", "--trials", "2000", "--seed", "7"},
  };
  for (const auto& args : commands) {
    std::ostringstream out1, err1, out2, err2;
    const int c1 = cli::run(args, out1, err1);
    const int c2 = cli::run(args, out2, err2);
    if (c1 != c2 || out1.str() != out2.str() || out1.str().empty()) {
      o.pass = false;
      o.detail += "differs: " + args[0] + " " + args[2] + "; ";
    }
  }
  o.detail += std::to_string(commands.size()) + " commands repeated";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"golden examples are bit-exact", golden_examples},
      {"theorem property suite passes at seed 42", theorem_suite},
      {"determinant and char_poly agree with oracles", oracle_equivalence},
      {"coefficient-reversal conjecture: proven and verified cases", conjecture},
      {"repeated check/explore commands are byte-identical", determinism},
  };
  int unexpected = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    const Outcome o = criteria[i].second();
    std::printf("%s criterion %d: %s -- %s\n", o.pass ? "PASS" : "FAIL", id, criteria[i].first.c_str(),
                o.detail.c_str());
    if (!o.pass) {
      const auto known = kKnownFailures.find(id);
      if (known == kKnownFailures.end()) {
        ++unexpected;
      } else {
        std::printf("     known failure: %s\n", known->second.c_str());
      }
    }
    std::fflush(stdout);
  }
  return unexpected == 0 ? 0 : 1;
}
