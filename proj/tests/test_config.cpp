#include <doctest.h>

#include "commands.hpp"
#include "srw/error.hpp"
#include "suite.hpp"

using namespace srw;
using nlohmann::json;

namespace {

CommandResult run(const char* cmd, const char* params, const RunConfig& cfg = {}) {
    return run_command(cmd, json::parse(params), cfg);
}

ErrorCode code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return ErrorCode::Invalid;
}

}  // namespace

TEST_CASE("config round trip") {
    RunConfig c;
    c.alphabet = {"x", "y", "z"};
    c.limit_rule = LimitRule::FixedSeqSucc;
    c.N = 14;
    c.threads = 3;
    c.format = "json";
    CHECK(parse_config(to_json_text(c)) == c);
    CHECK(parse_config("{}") == RunConfig{});
    CHECK(parse_config(R"j({"limit_rule": "use_fixed_seq_succ"})j").limit_rule == LimitRule::FixedSeqSucc);
}

TEST_CASE("config rejections") {
    CHECK(code_of([] { parse_config(R"j({"colour": 2})j"); }) == ErrorCode::Invalid);
    CHECK(code_of([] { parse_config(R"j({"N": 0})j"); }) == ErrorCode::Invalid);
    CHECK(code_of([] { parse_config(R"j({"format": "xml"})j"); }) == ErrorCode::Invalid);
    CHECK(code_of([] { parse_config(R"j({"alphabet": ["a", "_"]})j"); }) == ErrorCode::Invalid);
    CHECK(code_of([] { parse_config(R"j({"alphabet": []})j"); }) == ErrorCode::Invalid);
    CHECK(code_of([] { parse_config(R"j({"N": "ten"})j"); }) == ErrorCode::Invalid);
    CHECK(code_of([] { parse_config("[1, 2]"); }) == ErrorCode::Invalid);
    CHECK(code_of([] { parse_config(R"j({"N": )j"); }) == ErrorCode::Parse);
}

TEST_CASE("report envelope") {
    const auto r = run("schreier.mem", R"j({"xi": "w", "set": "{3,5,9}"})j");
    CHECK(r.report["schema_version"] == kSchemaVersion);
    CHECK(r.report["command"] == "schreier.mem");
    CHECK(r.report["member"] == true);
    CHECK(r.report["bounds"]["finite_truncation"] == true);
    CHECK(r.report["config"]["limit_rule"] == "fixed_seq");
    CHECK_FALSE(r.report["config"].contains("threads"));
    CHECK(r.outcome == 0);
    CHECK(render(r, "plain") == "true\n");
}

TEST_CASE("rendering formats") {
    const auto r = run("schreier.enumerate", R"j({"xi": "w", "N": 4})j");
    CHECK(render(r, "plain") == "3 members\n");
    CHECK(render(r, "csv") == "set,size\n{1},1\n\"{2,3}\",2\n\"{2,4}\",2\n");
    CHECK(json::parse(render(r, "json"))["members"] == json::array({"{1}", "{2,3}", "{2,4}"}));
    CHECK_THROWS_AS(render(r, "yaml"), Error);

    const auto kv = run("ordinal.compare", R"j({"a": "w", "b": "5"})j");
    CHECK(render(kv, "plain") == ">\n");
    CHECK(render(kv, "csv").find("compare,1\n") != std::string::npos);
}

TEST_CASE("command outcomes") {
    CHECK(run("verify.hj", R"j({"r": 2, "n": 1, "k": 2, "xi": "0", "mmax": 4})j").plain == "M=2");
    const auto none = run("verify.hj", R"j({"r": 2, "n": 1, "k": 2, "xi": "0", "mmax": 1})j");
    CHECK(none.outcome == 1);
    const auto exhausted =
        run("verify.carlson", R"j({"xi": "1", "coloring1": "parity", "coloring2": "parity", "stream": "e:6", "depth": 1})j");
    CHECK(exhausted.outcome == 1);
    CHECK(exhausted.report["covered"] == exhausted.report["space"]);
    const auto found =
        run("verify.carlson", R"j({"xi": "1", "coloring1": "parity", "coloring2": "parity", "stream": "e:6", "depth": 2})j");
    CHECK(found.outcome == 0);
    CHECK(found.report["witness"]["check"]["independent_check"] == "pass");
    const auto budget = run("cbindex", R"j({"family": "wk:3", "side": "v", "max_words": 6, "max_letters": 6, "stream": "e:12", "oracle": "horizon:6", "budget": 2})j");
    CHECK(budget.outcome == 3);
}

TEST_CASE("command errors") {
    CHECK(code_of([] { run("nope", "{}"); }) == ErrorCode::Invalid);
    CHECK(code_of([] { run("schreier.mem", R"j({"xi": "w"})j"); }) == ErrorCode::Invalid);
    CHECK(code_of([] { run("schreier.mem", R"j({"xi": "w+", "set": "{1}"})j"); }) == ErrorCode::Parse);
    CHECK(code_of([] { run("schreier.mem", R"j({"xi": 3, "set": "{1}"})j"); }) == ErrorCode::Invalid);
    CHECK(code_of([] { run("family.close", R"j({"family": {"side": "c", "members": ["(_)"]}})j"); }) == ErrorCode::Invalid);
    CHECK(code_of([] { run("cbindex", R"j({"family": "wk:3", "side": "v", "max_words": 6, "max_letters": 6, "stream": "e:5", "oracle": "horizon:6"})j"); }) ==
          ErrorCode::Undecided);
    CHECK(code_of([] { run_command("schreier.mem", json::array(), RunConfig{}); }) == ErrorCode::Invalid);
}

TEST_CASE("limit rule from the config reaches the commands") {
    RunConfig succ;
    succ.limit_rule = LimitRule::FixedSeqSucc;
    CHECK(run("ordinal.fixed_seq", R"j({"expr": "w^w", "count": 2})j").plain == "w, w^2");
    CHECK(run("ordinal.fixed_seq", R"j({"expr": "w^w", "count": 2})j", succ).plain == "1, w + 2");
}

TEST_CASE("every suite command runs and is repeatable") {
    RunConfig one, many;
    many.threads = 8;
    for (const auto& [cmd, params] : suite::commands()) {
        CAPTURE(cmd);
        CAPTURE(params);
        const auto a = run_command(cmd, json::parse(params), one);
        const auto b = run_command(cmd, json::parse(params), many);
        CHECK(a.report.dump() == b.report.dump());
        CHECK(a.outcome == b.outcome);
        CHECK(a.report.contains("bounds"));
    }
    const auto names = command_names();
    CHECK(std::is_sorted(names.begin(), names.end()));
    CHECK(names.size() == 27);
}
