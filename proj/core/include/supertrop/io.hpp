#pragma once

#include <string>
#include <string_view>

#include "supertrop/matrix.hpp"

namespace supertrop {

// Matrix file format:
//   {"rows": n, "cols": m, "entries": [["0", "-inf"], ["1/2", "3g"]]}
// Entries are strings in the scalar grammar. Unknown keys, non-string entries
// and shape mismatches are rejected with errc::parse_error.
Matrix parse_matrix_json(std::string_view text);

// indent < 0 gives a single line.
std::string to_json(const Matrix& a, int indent = -1);

}  // namespace supertrop
