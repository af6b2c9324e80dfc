#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "srw/ordinal.hpp"

namespace srw {

struct RunConfig {
    std::vector<std::string> alphabet{"a", "b"};
    LimitRule limit_rule = LimitRule::FixedSeq;
    std::uint32_t N = 10;          // Schreier enumeration bound
    std::size_t horizon = 12;      // stream entries materialized
    std::size_t depth = 3;         // search depth
    std::uint64_t budget = 5'000'000;
    std::string format = "plain";  // json | csv | plain
    unsigned threads = 1;

    bool operator==(const RunConfig&) const = default;
};

// Throws Error(Invalid) on unknown keys, non-positive bounds or a bad format;
// Error(Parse) on malformed JSON. Missing keys keep their defaults.
RunConfig parse_config(std::string_view json_text);
std::string to_json_text(const RunConfig& c);
void validate(const RunConfig& c);

}  // namespace srw
