#include "srw.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "commands.hpp"
#include "srw/error.hpp"
#include "srw/schreier.hpp"

struct srw_context {
    srw::RunConfig cfg;
};

struct srw_ordinal {
    srw::Ordinal value;
};

namespace {

thread_local std::string g_error;
thread_local long g_error_pos = -1;

srw_status record(srw_status st, const std::string& msg, long pos = -1) {
    g_error = msg;
    g_error_pos = pos;
    return st;
}

// Runs fn, translating exceptions into status codes.
template <class Fn>
srw_status guarded(Fn&& fn) {
    g_error.clear();
    g_error_pos = -1;
    try {
        fn();
        return SRW_OK;
    } catch (const srw::ParseError& e) {
        return record(SRW_ERR_PARSE, e.what(), static_cast<long>(e.position()));
    } catch (const srw::Error& e) {
        return record(static_cast<srw_status>(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return record(SRW_ERR_BUDGET, "out of memory");
    } catch (const std::exception& e) {
        return record(SRW_ERR_INTERNAL, e.what());
    }
}

char* dup(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

}  // namespace

extern "C" {

const char* srw_version(void) { return "1.0.0"; }
const char* srw_last_error(void) { return g_error.c_str(); }
long srw_last_error_position(void) { return g_error_pos; }
void srw_string_free(char* s) { std::free(s); }

srw_status srw_context_new(const char* config_json, srw_context** out) {
    if (!out) return record(SRW_ERR_ARGUMENT, "null output pointer");
    *out = nullptr;
    return guarded([&] {
        auto ctx = std::make_unique<srw_context>();
        if (config_json) ctx->cfg = srw::parse_config(config_json);
        *out = ctx.release();
    });
}

void srw_context_free(srw_context* ctx) { delete ctx; }

srw_status srw_context_set_threads(srw_context* ctx, unsigned threads) {
    if (!ctx || threads == 0) return record(SRW_ERR_ARGUMENT, "need a context and a positive thread count");
    ctx->cfg.threads = threads;
    return SRW_OK;
}

srw_status srw_context_set_format(srw_context* ctx, const char* format) {
    if (!ctx || !format) return record(SRW_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        srw::RunConfig next = ctx->cfg;
        next.format = format;
        srw::validate(next);
        ctx->cfg = next;
    });
}

srw_status srw_context_config(const srw_context* ctx, char** out_json) {
    if (!ctx || !out_json) return record(SRW_ERR_ARGUMENT, "null argument");
    return guarded([&] { *out_json = dup(srw::to_json_text(ctx->cfg)); });
}

srw_status srw_run(srw_context* ctx, const char* command, const char* params_json, char** out_report,
                   int* out_outcome) {
    if (!ctx || !command || !out_report) return record(SRW_ERR_ARGUMENT, "null argument");
    *out_report = nullptr;
    return guarded([&] {
        nlohmann::json params = nlohmann::json::object();
        if (params_json && *params_json) {
            try {
                params = nlohmann::json::parse(params_json);
            } catch (const nlohmann::json::parse_error& e) {
                throw srw::ParseError(e.byte, std::string("parameters: ") + e.what());
            }
        }
        const auto result = srw::run_command(command, params, ctx->cfg);
        *out_report = dup(srw::render(result, ctx->cfg.format));
        if (out_outcome) *out_outcome = result.outcome;
    });
}

srw_status srw_commands(char** out_list) {
    if (!out_list) return record(SRW_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        std::string s;
        for (const auto& n : srw::command_names()) s += n + "\n";
        *out_list = dup(s);
    });
}

srw_status srw_ordinal_parse(const char* text, srw_ordinal** out) {
    if (!text || !out) return record(SRW_ERR_ARGUMENT, "null argument");
    *out = nullptr;
    return guarded([&] { *out = new srw_ordinal{srw::parse_ordinal(text)}; });
}

void srw_ordinal_free(srw_ordinal* o) { delete o; }

srw_status srw_ordinal_format(const srw_ordinal* o, char** out_text) {
    if (!o || !out_text) return record(SRW_ERR_ARGUMENT, "null argument");
    return guarded([&] { *out_text = dup(srw::format(o->value)); });
}

int srw_ordinal_compare(const srw_ordinal* a, const srw_ordinal* b) {
    const auto c = a->value <=> b->value;
    return c < 0 ? -1 : c > 0 ? 1 : 0;
}

int srw_ordinal_is_limit(const srw_ordinal* o) { return srw::classify(o->value).kind == srw::OrdinalKind::Limit; }

srw_status srw_ordinal_fixed_seq(const srw_ordinal* lambda, uint64_t n, int succ_rule, srw_ordinal** out) {
    if (!lambda || !out) return record(SRW_ERR_ARGUMENT, "null argument");
    *out = nullptr;
    return guarded([&] {
        const auto rule = succ_rule ? srw::LimitRule::FixedSeqSucc : srw::LimitRule::FixedSeq;
        *out = new srw_ordinal{srw::limit_step(lambda->value, n, rule)};
    });
}

srw_status srw_schreier_mem(const srw_context* ctx, const srw_ordinal* xi, const uint32_t* elems, size_t count,
                            int* out_member) {
    if (!ctx || !xi || !out_member || (count > 0 && !elems)) return record(SRW_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        const srw::FinSet s(std::vector<std::uint32_t>(elems, elems + count));
        *out_member = srw::schreier::mem(xi->value, s, srw::SchreierConfig{ctx->cfg.limit_rule}) ? 1 : 0;
    });
}

}  // extern "C"
