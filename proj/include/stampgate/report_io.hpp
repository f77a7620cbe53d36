#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "stampgate/metrics.hpp"
#include "stampgate/netsim.hpp"

namespace stampgate {

// Deterministic: equal reports serialise to equal bytes.
std::string report_to_json(const SimReport& report, const ComparisonTable* comparison = nullptr);

// tick,units,processed,processed_honest,queue_depth
std::string series_to_csv(const SimReport& report);

// Writes to a sibling temp file and renames it over the target.
void write_file_atomic(const std::filesystem::path& target, std::string_view contents);

}  // namespace stampgate
