#pragma once

#include <span>
#include <string>
#include <string_view>

#include "supertrop/checks.hpp"

namespace supertrop {

// {check_id, seed, config, trials, passes, failures, counterexamples,
//  counterexample_count[, elapsed_ms]}; failures and counterexamples are
// lists of {trial, inputs, details} with inputs in the matrix file format.
std::string report_to_json(const CheckReport& r, int indent = 2);
CheckReport report_from_json(std::string_view text);

// {seed, config, reports: [...], all_passed, counterexample_count}
std::string suite_to_json(std::span<const CheckReport> reports, int indent = 2);

}  // namespace supertrop
