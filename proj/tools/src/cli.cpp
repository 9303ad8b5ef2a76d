#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "supertrop/checks.hpp"
#include "supertrop/error.hpp"
#include "supertrop/io.hpp"
#include "supertrop/report.hpp"
#include "supertrop/spectral.hpp"

namespace supertrop::cli {

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error(errc::parse_error, "cannot read '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text << '\n';
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw error(errc::invalid_argument, "cannot write '" + path + "'");
  file << text << '\n';
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

std::int64_t to_int(const std::string& s, const char* what) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) {
    throw error(errc::invalid_argument, std::string("bad ") + what + " '" + s + "'");
  }
  return v;
}

// "lo,hi" or "lo:hi".
std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
  const char sep = text.find(':') != std::string::npos ? ':' : ',';
  const auto parts = split(text, sep);
  if (parts.size() != 2) throw error(errc::invalid_argument, "range must look like lo,hi");
  return {to_int(parts[0], "range bound"), to_int(parts[1], "range bound")};
}

std::vector<std::size_t> parse_dims(const std::string& text) {
  std::vector<std::size_t> dims;
  for (const std::string& p : split(text, ',')) {
    const std::int64_t n = to_int(p, "dimension");
    if (n < 1) throw error(errc::invalid_argument, "dimensions must be positive");
    dims.push_back(static_cast<std::size_t>(n));
  }
  if (dims.empty()) throw error(errc::invalid_argument, "no dimension given");
  return dims;
}

struct SamplingFlags {
  std::string range = "-10,10";
  std::int64_t denominator = 1;
  double neginf_prob = 0.2;
  double ghost_prob = 0.1;
  std::uint64_t seed = 0;
  std::size_t trials = 100;
  std::string out;
  bool timing = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--trials", trials, "Trials per check and dimension");
    cmd->add_option("--seed", seed, "Master seed");
    cmd->add_option("--range", range, "Numerator range lo,hi");
    cmd->add_option("--denominator", denominator, "Common denominator of entries");
    cmd->add_option("--neginf-prob", neginf_prob, "Probability of a -inf entry");
    cmd->add_option("--ghost-prob", ghost_prob, "Probability of a ghost entry");
    cmd->add_option("--out", out, "Write the JSON report here instead of stdout");
    cmd->add_flag("--timing", timing, "Record elapsed_ms (reports are then not reproducible)");
  }

  GenConfig config(std::size_t n) const {
    GenConfig cfg;
    cfg.n = n;
    std::tie(cfg.lo, cfg.hi) = parse_range(range);
    cfg.denominator = denominator;
    cfg.neginf_prob = neginf_prob;
    cfg.ghost_prob = ghost_prob;
    cfg.seed = seed;
    validate(cfg);
    return cfg;
  }
};

template <class F>
CheckReport timed(bool timing, F&& run) {
  const auto start = std::chrono::steady_clock::now();
  CheckReport r = run();
  if (timing) {
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  return r;
}

int cmd_compute(const std::string& what, const std::string& path, const std::string& side,
                std::ostream& out) {
  const Matrix a = parse_matrix_json(read_input(path));
  if (what == "det") {
    out << determinant(a) << '\n';
  } else if (what == "adj") {
    out << to_json(adjugate(a)) << '\n';
  } else if (what == "nabla") {
    out << to_json(nabla(a)) << '\n';
  } else if (what == "star") {
    out << to_json(kleene_star(a)) << '\n';
  } else if (what == "charpoly") {
    out << to_string(char_poly(a)) << '\n';
  } else if (what == "eigen") {
    out << to_string(eigenvalues(a)) << '\n';
  } else {
    const DefiniteForm f = definite_form(a, side == "right" ? Side::Right : Side::Left);
    out << "conductor: " << to_json(f.conductor) << '\n';
    out << "definite: " << to_json(f.definite) << '\n';
  }
  return kOk;
}

int cmd_demo(const std::string& id, std::ostream& out) {
  bool all = true;
  for (const DemoLine& line : run_demo(id)) {
    out << line.label << ": " << line.got;
    if (line.match) {
      out << "  [ok]\n";
    } else {
      out << "  [MISMATCH, expected " << line.expected << "]\n";
      all = false;
    }
  }
  out << (all ? "all lines match" : "mismatches found") << '\n';
  return all ? kOk : kCheckFailed;
}

int cmd_check(const std::string& suite, const std::string& dims, const SamplingFlags& flags,
              std::ostream& out, std::ostream& err) {
  std::vector<std::string_view> ids;
  if (suite == "all") {
    const auto all = check_ids();
    ids.assign(all.begin(), all.end());
  } else if (is_check_id(suite)) {
    ids.push_back(suite);
  } else {
    throw error(errc::invalid_argument, "unknown check '" + suite + "'");
  }
  std::vector<CheckReport> reports;
  for (std::size_t n : parse_dims(dims)) {
    const GenConfig cfg = flags.config(n);
    for (std::string_view id : ids) {
      reports.push_back(timed(flags.timing, [&] { return run_check(id, cfg, flags.trials); }));
      const CheckReport& r = reports.back();
      err << r.check_id << " n=" << n << ": " << r.passes << "/" << r.trials << " passed";
      if (!r.counterexamples.empty()) err << ", " << r.counterexamples.size() << " counterexamples";
      err << '\n';
    }
  }
  const std::string json =
      reports.size() == 1 ? report_to_json(reports.front()) : suite_to_json(reports);
  write_output(flags.out, json, out);
  for (const CheckReport& r : reports) {
    if (!r.failures.empty()) return kCheckFailed;
  }
  return kOk;
}

int cmd_explore(std::size_t n, bool triangular, const SamplingFlags& flags, std::ostream& out,
                std::ostream& err) {
  if (n < 2) throw error(errc::invalid_argument, "explore needs n >= 2");
  GenConfig cfg = flags.config(n);
  cfg.constraint = triangular ? Constraint::Triangular : Constraint::NonSingular;
  const CheckReport r = timed(flags.timing, [&] { return explore_conjecture(cfg, flags.trials); });
  write_output(flags.out, report_to_json(r), out);
  // The count goes wherever the report does not, so stdout stays one document.
  std::ostream& summary = flags.out.empty() ? err : out;
  summary << "counterexamples: " << r.counterexamples.size() << " in " << r.trials << " trials (n=" << n
          << ")\n";
  if (!r.failures.empty()) {
    err << r.failures.size() << " violations in the proven coefficient range\n";
    return kCheckFailed;
  }
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Supertropical matrix algebra toolkit", "supertrop"};
  app.require_subcommand(1);

  std::string what, path = "-", side = "left";
  auto* compute = app.add_subcommand("compute", "Evaluate one operation on a matrix file");
  compute->add_option("what", what, "det|adj|nabla|star|charpoly|eigen|definite-form")
      ->required()
      ->check(CLI::IsMember({"det", "adj", "nabla", "star", "charpoly", "eigen", "definite-form"}));
  compute->add_option("input", path, "Matrix JSON file ('-' for stdin)")->required();
  compute->add_option("--side", side, "Definite form side")->check(CLI::IsMember({"left", "right"}));

  std::string demo_id;
  auto* demo = app.add_subcommand("demo", "Recompute a worked example against stored values");
  demo->add_option("example", demo_id, "2.30|3.6|5.3|6.1")->required();

  std::string suite = "all", dims = "3";
  SamplingFlags check_flags;
  auto* check = app.add_subcommand("check", "Run randomised theorem checks");
  check->add_option("--suite", suite, "'all' or a check id");
  check->add_option("--n", dims, "Dimension or comma-separated list");
  check_flags.attach(check);

  std::size_t explore_n = 4;
  bool triangular = false;
  SamplingFlags explore_flags;
  auto* explore = app.add_subcommand("explore", "Search for counterexamples to the coefficient-reversal conjecture");
  explore->add_option("--n", explore_n, "Dimension (at least 2)");
  explore->add_flag("--triangular", triangular, "Sample upper triangular matrices");
  explore_flags.attach(explore);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*compute) return cmd_compute(what, path, side, out);
    if (*demo) return cmd_demo(demo_id, out);
    if (*check) return cmd_check(suite, dims, check_flags, out, err);
    return cmd_explore(explore_n, triangular, explore_flags, out, err);
  } catch (const error& e) {
    err << "error: " << e.what() << '\n';
    return e.is_domain_error() ? kDomainError : kUsageError;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"supertrop"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace supertrop::cli
