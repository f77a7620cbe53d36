#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace stampgate::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitInvariant = 3;

// Writes report.json, report.csv and comparison.csv into out_dir.
int cmd_run(const std::string& scenario_path, const std::filesystem::path& out_dir,
            std::optional<std::uint64_t> seed, std::ostream& out, std::ostream& err);

int cmd_validate(const std::string& scenario_path, std::ostream& out, std::ostream& err);

int main(int argc, char** argv);

}  // namespace stampgate::cli
