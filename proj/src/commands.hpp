#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "srw/config.hpp"

namespace srw {

// Outcome of a command, separate from errors: 0 pass/found, 1 exhausted,
// closed at the horizon or a failed check, 3 budget exceeded.
struct CommandResult {
    nlohmann::json report;
    int outcome = 0;
    std::string plain;
    std::vector<std::vector<std::string>> table;  // first row is the header
};

CommandResult run_command(std::string_view command, const nlohmann::json& params, const RunConfig& cfg);
std::string render(const CommandResult& r, const std::string& format);
std::vector<std::string> command_names();

inline constexpr int kSchemaVersion = 1;

}  // namespace srw
