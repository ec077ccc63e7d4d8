#pragma once

#include <json.hpp>

#include "grids_data.hpp"

namespace gaussquad::detail {

inline const nlohmann::json& grids() {
  static const nlohmann::json data = nlohmann::json::parse(kGridsJson);
  return data;
}

}  // namespace gaussquad::detail
