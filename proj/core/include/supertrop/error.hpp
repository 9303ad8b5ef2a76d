#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace supertrop {

enum class errc {
  parse_error,
  not_invertible,
  dimension_mismatch,
  size_cap_exceeded,
  strictly_singular,
  not_nonsingular,
  not_definite,
  bad_indices,
  degenerate_polynomial,
  constraint_unsatisfiable,
  invalid_argument,
};

std::string_view to_string(errc code);

// Every failure raised by the library carries one of the codes above so the
// CLI can map it onto an exit status without parsing messages.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  errc code() const noexcept { return code_; }

  // Domain errors are violated mathematical preconditions, as opposed to
  // malformed input text.
  bool is_domain_error() const noexcept {
    return code_ != errc::parse_error && code_ != errc::invalid_argument;
  }

 private:
  errc code_;
};

}  // namespace supertrop
