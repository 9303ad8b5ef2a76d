#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "supertrop/matrix.hpp"

namespace supertrop::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsageError = 1;   // bad flags, unreadable or malformed input
inline constexpr int kDomainError = 2;  // input parsed but violates a precondition
inline constexpr int kCheckFailed = 3;  // a theorem check reported failures

// Entry point shared by the executable and the tests. Results go to `out`,
// diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct DemoLine {
  std::string label;
  std::string got;
  std::string expected;
  bool match;
};

// Recomputes every quantity of a worked example and pairs it with the
// embedded expected value. Unknown ids throw errc::invalid_argument.
std::vector<DemoLine> run_demo(const std::string& id);
const std::vector<std::string>& demo_ids();

// "[[0, 0, -1g], [0g, 0, 0], [1, 0g, 0]]"
std::string format_rows(const Matrix& a);

}  // namespace supertrop::cli
