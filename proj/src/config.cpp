#include "srw/config.hpp"

#include <json.hpp>

#include "srw/error.hpp"

namespace srw {

using nlohmann::json;

void validate(const RunConfig& c) {
    if (c.alphabet.empty()) fail(ErrorCode::Invalid, "alphabet must not be empty");
    for (const auto& s : c.alphabet)
        if (s.size() != 1 || s == "_" || s == "," || s == "(" || s == ")")
            fail(ErrorCode::Invalid, "alphabet symbols must be single characters other than _ , ( )");
    if (c.N == 0 || c.horizon == 0 || c.depth == 0 || c.budget == 0 || c.threads == 0)
        fail(ErrorCode::Invalid, "bounds must be positive");
    if (c.format != "json" && c.format != "csv" && c.format != "plain")
        fail(ErrorCode::Invalid, "format must be json, csv or plain");
}

RunConfig parse_config(std::string_view json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.byte, "config: " + std::string(e.what()));
    }
    if (!j.is_object()) fail(ErrorCode::Invalid, "config must be a JSON object");
    RunConfig c;
    try {
        for (auto& [key, v] : j.items()) {
            if (key == "alphabet") c.alphabet = v.get<std::vector<std::string>>();
            else if (key == "limit_rule") c.limit_rule = parse_limit_rule(v.get<std::string>());
            else if (key == "N") c.N = v.get<std::uint32_t>();
            else if (key == "horizon") c.horizon = v.get<std::size_t>();
            else if (key == "depth") c.depth = v.get<std::size_t>();
            else if (key == "budget") c.budget = v.get<std::uint64_t>();
            else if (key == "format") c.format = v.get<std::string>();
            else if (key == "threads") c.threads = v.get<unsigned>();
            else fail(ErrorCode::Invalid, "unknown config key '" + key + "'");
        }
    } catch (const json::exception& e) {
        fail(ErrorCode::Invalid, std::string("config: ") + e.what());
    }
    validate(c);
    return c;
}

std::string to_json_text(const RunConfig& c) {
    json j = {{"alphabet", c.alphabet}, {"limit_rule", to_string(c.limit_rule)},
              {"N", c.N},               {"horizon", c.horizon},
              {"depth", c.depth},       {"budget", c.budget},
              {"format", c.format},     {"threads", c.threads}};
    return j.dump(2);
}

}  // namespace srw
