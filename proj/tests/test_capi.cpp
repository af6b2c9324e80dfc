#include <doctest.h>

#include <string>

#include "srw.h"

namespace {

struct Owned {
    char* p = nullptr;
    ~Owned() { srw_string_free(p); }
    std::string str() const { return p ? p : ""; }
};

}  // namespace

TEST_CASE("version and command list") {
    CHECK(std::string(srw_version()) == "1.0.0");
    Owned list;
    REQUIRE(srw_commands(&list.p) == SRW_OK);
    CHECK(list.str().find("verify.hj\n") != std::string::npos);
    CHECK(srw_commands(nullptr) == SRW_ERR_ARGUMENT);
}

TEST_CASE("contexts") {
    srw_context* ctx = nullptr;
    REQUIRE(srw_context_new(nullptr, &ctx) == SRW_OK);
    Owned cfg;
    REQUIRE(srw_context_config(ctx, &cfg.p) == SRW_OK);
    CHECK(cfg.str().find("\"format\": \"plain\"") != std::string::npos);
    CHECK(srw_context_set_threads(ctx, 0) == SRW_ERR_ARGUMENT);
    CHECK(srw_context_set_threads(ctx, 4) == SRW_OK);
    CHECK(srw_context_set_format(ctx, "xml") == SRW_ERR_INVALID);
    CHECK(srw_context_set_format(ctx, "json") == SRW_OK);
    srw_context_free(ctx);

    srw_context* bad = nullptr;
    CHECK(srw_context_new("{\"colour\": 1}", &bad) == SRW_ERR_INVALID);
    CHECK(bad == nullptr);
    CHECK(std::string(srw_last_error()).find("colour") != std::string::npos);
    CHECK(srw_context_new("{\"N\": ", &bad) == SRW_ERR_PARSE);
    CHECK(srw_last_error_position() >= 0);
    CHECK(srw_context_new(nullptr, nullptr) == SRW_ERR_ARGUMENT);
}

TEST_CASE("running commands") {
    srw_context* ctx = nullptr;
    REQUIRE(srw_context_new(nullptr, &ctx) == SRW_OK);
    Owned out;
    int outcome = -1;
    REQUIRE(srw_run(ctx, "schreier.mem", "{\"xi\": \"w\", \"set\": \"{3,5,9}\"}", &out.p, &outcome) == SRW_OK);
    CHECK(out.str() == "true\n");
    CHECK(outcome == SRW_OUTCOME_PASS);

    Owned hj;
    REQUIRE(srw_run(ctx, "verify.hj", "{\"r\": 2, \"n\": 1, \"k\": 2, \"xi\": \"0\", \"mmax\": 1}", &hj.p, &outcome) ==
            SRW_OK);
    CHECK(outcome == SRW_OUTCOME_EXHAUSTED);

    Owned err;
    CHECK(srw_run(ctx, "schreier.mem", "{\"xi\": \"w^\", \"set\": \"{1}\"}", &err.p, &outcome) == SRW_ERR_PARSE);
    CHECK(err.p == nullptr);
    CHECK(srw_last_error_position() == 2);
    CHECK(srw_run(ctx, "schreier.mem", "{not json", &err.p, &outcome) == SRW_ERR_PARSE);
    CHECK(srw_run(ctx, "nope", "{}", &err.p, &outcome) == SRW_ERR_INVALID);
    CHECK(srw_run(ctx, "cbindex",
                  "{\"family\": \"wk:3\", \"side\": \"v\", \"max_words\": 6, \"max_letters\": 6, \"stream\": \"e:5\", "
                  "\"oracle\": \"horizon:6\"}",
                  &err.p, &outcome) == SRW_ERR_UNDECIDED);
    CHECK(srw_run(nullptr, "schreier.mem", "{}", &err.p, &outcome) == SRW_ERR_ARGUMENT);

    REQUIRE(srw_context_set_format(ctx, "json") == SRW_OK);
    Owned js;
    REQUIRE(srw_run(ctx, "ordinal.eval", "{\"expr\": \"w^2*3 + w + 5\"}", &js.p, nullptr) == SRW_OK);
    CHECK(js.str().find("\"canonical\": \"w^2*3 + w + 5\"") != std::string::npos);
    srw_context_free(ctx);
}

TEST_CASE("ordinal handles") {
    srw_ordinal *a = nullptr, *b = nullptr, *t = nullptr;
    REQUIRE(srw_ordinal_parse("w^w", &a) == SRW_OK);
    REQUIRE(srw_ordinal_parse("w^2 + 1", &b) == SRW_OK);
    CHECK(srw_ordinal_compare(a, b) == 1);
    CHECK(srw_ordinal_compare(b, a) == -1);
    CHECK(srw_ordinal_is_limit(a) == 1);
    CHECK(srw_ordinal_is_limit(b) == 0);

    REQUIRE(srw_ordinal_fixed_seq(a, 2, 0, &t) == SRW_OK);
    Owned txt;
    REQUIRE(srw_ordinal_format(t, &txt.p) == SRW_OK);
    CHECK(txt.str() == "w^2");
    srw_ordinal_free(t);
    REQUIRE(srw_ordinal_fixed_seq(a, 2, 1, &t) == SRW_OK);
    Owned txt2;
    REQUIRE(srw_ordinal_format(t, &txt2.p) == SRW_OK);
    CHECK(txt2.str() == "w + 2");
    srw_ordinal_free(t);

    srw_ordinal* none = nullptr;
    CHECK(srw_ordinal_fixed_seq(b, 2, 0, &none) == SRW_ERR_INVALID);
    CHECK(srw_ordinal_parse("w +", &none) == SRW_ERR_PARSE);
    CHECK(none == nullptr);

    srw_context* ctx = nullptr;
    REQUIRE(srw_context_new(nullptr, &ctx) == SRW_OK);
    srw_ordinal* w = nullptr;
    REQUIRE(srw_ordinal_parse("w", &w) == SRW_OK);
    const uint32_t yes[] = {3, 5, 9}, no[] = {2, 3, 4};
    int member = -1;
    REQUIRE(srw_schreier_mem(ctx, w, yes, 3, &member) == SRW_OK);
    CHECK(member == 1);
    REQUIRE(srw_schreier_mem(ctx, w, no, 3, &member) == SRW_OK);
    CHECK(member == 0);
    const uint32_t unsorted[] = {4, 2};
    CHECK(srw_schreier_mem(ctx, w, unsorted, 2, &member) != SRW_OK);
    CHECK(srw_schreier_mem(ctx, w, nullptr, 2, &member) == SRW_ERR_ARGUMENT);

    srw_ordinal_free(w);
    srw_context_free(ctx);
    srw_ordinal_free(a);
    srw_ordinal_free(b);
}
