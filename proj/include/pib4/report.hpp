#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "pib4/sweep.hpp"

namespace pib4 {

/// Deterministic JSON serialization: fixed key order, integers as decimal
/// strings, no timestamps. Identical inputs give byte-identical files.
std::string report_to_json(const SweepReport& rep);

void write_report(const SweepReport& rep, const std::string& path);

}  // namespace pib4
