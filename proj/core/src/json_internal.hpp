#pragma once

#include "json.hpp"

#include "supertrop/matrix.hpp"

namespace supertrop::detail {

nlohmann::ordered_json matrix_to_json(const Matrix& a);
Matrix matrix_from_json(const nlohmann::ordered_json& j);

}  // namespace supertrop::detail
