#include "supertrop/report.hpp"

#include "json_internal.hpp"
#include "supertrop/error.hpp"

namespace supertrop {

namespace {

using nlohmann::ordered_json;

ordered_json config_json(const GenConfig& c) {
  ordered_json j;
  j["n"] = c.n;
  j["range"] = {c.lo, c.hi};
  j["denominator"] = c.denominator;
  j["neginf_prob"] = c.neginf_prob;
  j["ghost_prob"] = c.ghost_prob;
  j["constraint"] = std::string(to_string(c.constraint));
  return j;
}

ordered_json failures_json(const std::vector<Failure>& list) {
  ordered_json out = ordered_json::array();
  for (const Failure& f : list) {
    ordered_json entry;
    entry["trial"] = f.trial;
    ordered_json inputs = ordered_json::array();
    for (const Matrix& m : f.inputs) inputs.push_back(detail::matrix_to_json(m));
    entry["inputs"] = std::move(inputs);
    entry["details"] = f.details;
    out.push_back(std::move(entry));
  }
  return out;
}

std::vector<Failure> failures_from(const ordered_json& arr) {
  std::vector<Failure> out;
  for (const auto& entry : arr) {
    Failure f;
    f.trial = entry.at("trial").get<std::uint64_t>();
    for (const auto& m : entry.at("inputs")) f.inputs.push_back(detail::matrix_from_json(m));
    f.details = entry.at("details").get<std::string>();
    out.push_back(std::move(f));
  }
  return out;
}

ordered_json report_json(const CheckReport& r) {
  ordered_json j;
  j["check_id"] = r.check_id;
  j["seed"] = r.config.seed;
  j["config"] = config_json(r.config);
  j["trials"] = r.trials;
  j["passes"] = r.passes;
  j["failures"] = failures_json(r.failures);
  j["counterexamples"] = failures_json(r.counterexamples);
  j["counterexample_count"] = r.counterexamples.size();
  if (r.elapsed_ms) j["elapsed_ms"] = *r.elapsed_ms;
  return j;
}

}  // namespace

std::string report_to_json(const CheckReport& r, int indent) { return report_json(r).dump(indent); }

CheckReport report_from_json(std::string_view text) {
  try {
    const ordered_json j = ordered_json::parse(text);
    CheckReport r;
    r.check_id = j.at("check_id").get<std::string>();
    const auto& c = j.at("config");
    r.config.seed = j.at("seed").get<std::uint64_t>();
    r.config.n = c.at("n").get<std::size_t>();
    r.config.lo = c.at("range").at(0).get<std::int64_t>();
    r.config.hi = c.at("range").at(1).get<std::int64_t>();
    r.config.denominator = c.at("denominator").get<std::int64_t>();
    r.config.neginf_prob = c.at("neginf_prob").get<double>();
    r.config.ghost_prob = c.at("ghost_prob").get<double>();
    r.config.constraint = parse_constraint(c.at("constraint").get<std::string>());
    r.trials = j.at("trials").get<std::size_t>();
    r.passes = j.at("passes").get<std::size_t>();
    r.failures = failures_from(j.at("failures"));
    r.counterexamples = failures_from(j.at("counterexamples"));
    if (j.contains("elapsed_ms")) r.elapsed_ms = j.at("elapsed_ms").get<double>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw error(errc::parse_error, std::string("report: ") + e.what());
  }
}

std::string suite_to_json(std::span<const CheckReport> reports, int indent) {
  ordered_json j;
  std::size_t counterexamples = 0;
  bool all_passed = true;
  ordered_json list = ordered_json::array();
  for (const CheckReport& r : reports) {
    counterexamples += r.counterexamples.size();
    all_passed = all_passed && r.failures.empty();
    list.push_back(report_json(r));
  }
  if (!reports.empty()) {
    j["seed"] = reports.front().config.seed;
    j["config"] = config_json(reports.front().config);
  }
  j["reports"] = std::move(list);
  j["all_passed"] = all_passed;
  j["counterexample_count"] = counterexamples;
  return j.dump(indent);
}

}  // namespace supertrop
