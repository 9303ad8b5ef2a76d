#include "supertrop/io.hpp"

#include "json_internal.hpp"
#include "supertrop/error.hpp"

namespace supertrop {

namespace detail {

nlohmann::ordered_json matrix_to_json(const Matrix& a) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(to_string(a(i, j)));
    rows.push_back(std::move(row));
  }
  nlohmann::ordered_json out;
  out["rows"] = a.rows();
  out["cols"] = a.cols();
  out["entries"] = std::move(rows);
  return out;
}

Matrix matrix_from_json(const nlohmann::ordered_json& j) {
  auto fail = [](const std::string& why) -> Matrix {
    throw error(errc::parse_error, "matrix file: " + why);
  };
  if (!j.is_object()) return fail("expected a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key != "rows" && key != "cols" && key != "entries") return fail("unknown key '" + key + "'");
  }
  for (const char* key : {"rows", "cols", "entries"}) {
    if (!j.contains(key)) return fail(std::string("missing key '") + key + "'");
  }
  if (!j["rows"].is_number_unsigned() || !j["cols"].is_number_unsigned()) {
    return fail("rows and cols must be non-negative integers");
  }
  const auto rows = j["rows"].get<std::size_t>();
  const auto cols = j["cols"].get<std::size_t>();
  if (rows == 0 || cols == 0) return fail("rows and cols must be positive");
  const auto& entries = j["entries"];
  if (!entries.is_array() || entries.size() != rows) return fail("entries must list `rows` rows");
  std::vector<Element> flat;
  flat.reserve(rows * cols);
  for (const auto& row : entries) {
    if (!row.is_array() || row.size() != cols) return fail("every row must have `cols` entries");
    for (const auto& cell : row) {
      if (!cell.is_string()) return fail("entries must be strings in the scalar grammar");
      flat.push_back(parse_element(cell.get<std::string>()));
    }
  }
  return Matrix(rows, cols, std::move(flat));
}

}  // namespace detail

Matrix parse_matrix_json(std::string_view text) {
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw error(errc::parse_error, std::string("matrix file is not valid JSON: ") + e.what());
  }
  return detail::matrix_from_json(j);
}

std::string to_json(const Matrix& a, int indent) {
  return detail::matrix_to_json(a).dump(indent);
}

}  // namespace supertrop
