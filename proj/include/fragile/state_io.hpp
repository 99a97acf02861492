#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "fragile/qstate.hpp"

namespace fragile {

// {"n": N, "amps": [{"bits": "0101", "re": x, "im": y}, ...]}
// Labels absent from "amps" have amplitude zero. Bits may be 0/1 or arrows.
struct LoadedState {
  StateVector state;
  // The stored amplitudes had norm differing from 1 by more than 1e-9.
  bool renormalized = false;
};

nlohmann::json state_to_json(const StateVector& s);
LoadedState state_from_json(const nlohmann::json& doc);

void write_state(const std::filesystem::path& path, const StateVector& s);
LoadedState read_state(const std::filesystem::path& path);

}  // namespace fragile
