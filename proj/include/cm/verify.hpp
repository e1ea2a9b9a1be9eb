#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cm/minors.hpp"

namespace cm {

struct GridRecord {
  int m = 0;
  int d = 0;
  Thm1Report thm1;
  Poly minor;
  bool closed_match = false;
  std::optional<bool> path_match;  // type D only
  bool character_match = false;    // delta_G character against the extremal vector weight
  double seconds = 0;
  std::string error;

  bool ok() const { return error.empty() && thm1.match && closed_match && path_match.value_or(true) && character_match; }
};

GridRecord verify_point(const GridPoint &p);
// records come back in grid order whatever the schedule
std::vector<GridRecord> verify_grid(const GroupType &g, Exec ex = Exec::Serial);

nlohmann::json to_json(const GridRecord &r);

}  // namespace cm
