// srw command-line front end. Everything goes through the C API in srw.h.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "srw.h"

namespace {

using nlohmann::json;

enum class Kind { Text, Number, Flag, Json, File };

struct Flag {
    std::string key;
    Kind kind;
    std::string value;
    bool set = false;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Inline JSON, or a file when the text starts with '@'.
json json_arg(const std::string& text) {
    const std::string body = !text.empty() && text[0] == '@' ? read_file(text.substr(1)) : text;
    return json::parse(body);
}

// One leaf command: its flags are collected into a JSON parameter object.
struct Leaf {
    std::string command;
    CLI::App* app = nullptr;
    std::vector<std::unique_ptr<Flag>> flags;
    std::string params_text;

    Leaf& opt(const std::string& names, const std::string& key, Kind kind, const std::string& help) {
        auto f = std::make_unique<Flag>(Flag{key, kind, {}, false});
        Flag* raw = f.get();
        if (kind == Kind::Flag)
            app->add_flag_callback(names, [raw] { raw->set = true; }, help);
        else
            app->add_option_function<std::string>(names, [raw](const std::string& v) { raw->value = v, raw->set = true; }, help);
        flags.push_back(std::move(f));
        return *this;
    }
    Leaf& positional(const std::string& name, const std::string& key, const std::string& help) {
        return opt(name, key, Kind::Text, help);
    }

    json params() const {
        json p = params_text.empty() ? json::object() : json_arg(params_text);
        if (!p.is_object()) throw std::runtime_error("--params must be a JSON object");
        for (const auto& f : flags) {
            if (!f->set) continue;
            switch (f->kind) {
                case Kind::Text: p[f->key] = f->value; break;
                case Kind::Number:
                    try {
                        std::size_t used = 0;
                        const unsigned long long v = std::stoull(f->value, &used);
                        if (used != f->value.size()) throw std::invalid_argument("trailing");
                        p[f->key] = v;
                    } catch (const std::logic_error&) {
                        throw CLI::ValidationError(f->key, "expected a natural number, got '" + f->value + "'");
                    }
                    break;
                case Kind::Flag: p[f->key] = true; break;
                case Kind::Json: {
                    // colorings and similar: a bare rule name or a JSON object
                    const bool structured = !f->value.empty() && (f->value[0] == '{' || f->value[0] == '@');
                    p[f->key] = structured ? json_arg(f->value) : json(f->value);
                    break;
                }
                case Kind::File: p[f->key] = json_arg("@" + f->value); break;
            }
        }
        return p;
    }
};

struct Cli {
    CLI::App app{"Schreier-indexed Ramsey theory on words: finite-instance engine", "srw"};
    std::vector<std::unique_ptr<Leaf>> leaves;

    std::string config_file, format, alphabet, rule;
    unsigned threads = 0;

    Leaf& leaf(CLI::App* parent, const std::string& name, const std::string& command, const std::string& help) {
        auto l = std::make_unique<Leaf>();
        l->command = command;
        l->app = parent->add_subcommand(name, help);
        l->app->add_option("--params", l->params_text, "parameters as JSON, or @file");
        leaves.push_back(std::move(l));
        return *leaves.back();
    }

    static void family_opts(Leaf& l) {
        l.opt("--family", "family", Kind::File, "family file (JSON)")
            .opt("--fixture", "family", Kind::Json, "named family: wk:<k> | nw1 | nw2")
            .opt("--side", "side", Kind::Text, "c | v (fixture)")
            .opt("--max-words", "max_words", Kind::Number, "universe words (fixture)")
            .opt("--max-letters", "max_letters", Kind::Number, "universe letters (fixture)");
    }

    Cli() {
        app.require_subcommand(1);
        app.fallthrough();
        app.add_option("--config-file", config_file, "run configuration (JSON)");
        app.add_option("--format", format, "json | csv | plain");
        app.add_option("--threads", threads, "worker thread hint");
        app.add_option("--alphabet", alphabet, "comma separated symbols, e.g. a,b");
        app.add_option("--rule", rule, "limit rule: fixed_seq | fixed_seq_succ");

        auto* ord = app.add_subcommand("ordinal", "ordinal notation")->require_subcommand(1);
        leaf(ord, "eval", "ordinal.eval", "canonical form").positional("expr", "expr", "ordinal expression");
        leaf(ord, "compare", "ordinal.compare", "compare two ordinals")
            .positional("a", "a", "left")
            .positional("b", "b", "right");
        leaf(ord, "seq", "ordinal.fixed_seq", "fundamental sequence terms")
            .positional("expr", "expr", "limit ordinal")
            .opt("--count", "count", Kind::Number, "number of terms")
            .opt("--seq-rule", "rule", Kind::Text, "fixed_seq | fixed_seq_succ");

        auto* sch = app.add_subcommand("schreier", "Schreier families")->require_subcommand(1);
        for (auto [name, cmd] : {std::pair{"mem", "schreier.mem"}, {"decompose", "schreier.decompose"},
                                 {"enumerate", "schreier.enumerate"}, {"transfer", "schreier.transfer"}}) {
            leaf(sch, name, cmd, std::string("schreier ") + name)
                .opt("--xi", "xi", Kind::Text, "ordinal")
                .opt("--set", "set", Kind::Text, "finite set {a,b,...}")
                .opt("--N", "N", Kind::Number, "enumeration bound")
                .opt("--n", "n", Kind::Number, "transfer index argument")
                .app->add_option("--config", rule, "limit rule for this run");
        }

        auto* wd = app.add_subcommand("words", "words and reductions")->require_subcommand(1);
        leaf(wd, "reduce", "words.reduce", "w[t]")
            .opt("--stream", "stream", Kind::Text, "stream such as e:8 or list:(a_,_b)")
            .opt("--t", "t", Kind::Text, "variable word sequence");
        leaf(wd, "reductions", "words.reductions", "list reductions")
            .opt("--seq", "seq", Kind::Text, "finite source sequence")
            .opt("--stream", "stream", Kind::Text, "stream such as e:8 or list:(a_,_b)")
            .opt("--side", "side", Kind::Text, "c | v")
            .opt("--positions", "positions", Kind::Number, "stream entries")
            .opt("--max-words", "max_words", Kind::Number, "longest reduction");

        auto* wx = app.add_subcommand("wxi", "W^xi families of word sequences")->require_subcommand(1);
        for (auto [name, cmd] : {std::pair{"member", "wxi.member"}, {"decompose", "wxi.decompose"},
                                 {"enumerate", "wxi.enumerate"}, {"transfer", "wxi.transfer"}}) {
            leaf(wx, name, cmd, std::string("wxi ") + name)
                .opt("--xi", "xi", Kind::Text, "ordinal")
                .opt("--side", "side", Kind::Text, "c | v")
                .opt("--seq", "seq", Kind::Text, "word sequence")
                .opt("--base", "base", Kind::Text, "base stream for relative complexity")
                .opt("--letters", "letters", Kind::Number, "letter budget")
                .opt("--word", "word", Kind::Text, "word for the transfer check")
                .app->add_option("--config", rule, "limit rule for this run");
        }

        auto* fam = app.add_subcommand("family", "families of word sequences")->require_subcommand(1);
        for (auto [name, cmd] : {std::pair{"close", "family.close"}, {"kernel", "family.kernel"},
                                 {"thin", "family.thin"}, {"tree", "family.tree"},
                                 {"hereditary", "family.hereditary"}, {"dichotomy", "family.dichotomy"},
                                 {"closed", "family.closed"}}) {
            auto& l = leaf(fam, name, cmd, std::string("family ") + name);
            family_opts(l);
            l.opt("--xi", "xi", Kind::Text, "ordinal (dichotomy)")
                .opt("--stream", "stream", Kind::Text, "stream such as e:8 or list:(a_,_b)")
                .opt("--positions", "positions", Kind::Number, "stream entries (dichotomy)")
                .opt("--H", "H", Kind::Number, "chain length (closed)")
                .opt("--mode", "mode", Kind::Text, "tree | hereditary (closed)");
        }

        auto& cbl = leaf(&app, "cbindex", "cbindex", "strong Cantor-Bendixson index");
        family_opts(cbl);
        cbl.opt("--stream", "stream", Kind::Text, "stream such as e:8 or list:(a_,_b)")
            .opt("--oracle", "oracle", Kind::Text, "exact:length-bound | horizon:<H>")
            .opt("--budget", "budget", Kind::Number, "derivative passes");
        cbl.app->require_subcommand(0, 1);
        leaf(cbl.app, "monotonicity", "cbindex.monotonicity", "index monotonicity check")
            .opt("--f1", "f1", Kind::File, "smaller family file")
            .opt("--f2", "f2", Kind::File, "larger family file")
            .opt("--stream", "stream", Kind::Text, "stream")
            .opt("--stream1", "stream1", Kind::Text, "reduced stream")
            .opt("--oracle", "oracle", Kind::Text, "oracle on stream")
            .opt("--oracle1", "oracle1", Kind::Text, "oracle on stream1")
            .opt("--budget", "budget", Kind::Number, "derivative passes");

        auto* ver = app.add_subcommand("verify", "finite-instance witness searches")->require_subcommand(1);
        leaf(ver, "ramsey", "verify.ramsey", "monochromatic Schreier sets")
            .opt("--xi", "xi", Kind::Text, "ordinal")
            .opt("--N", "N", Kind::Number, "ground set {1..N}")
            .opt("--target", "target", Kind::Number, "size of L")
            .opt("--coloring", "coloring", Kind::Json, "rule name or JSON coloring")
            .opt("--exhaust", "exhaust", Kind::Number, "try every r-coloring");
        leaf(ver, "carlson", "verify.carlson", "monochromatic reductions of a stream")
            .opt("--xi", "xi", Kind::Text, "ordinal")
            .opt("--coloring1", "coloring1", Kind::Json, "coloring of constant sequences")
            .opt("--coloring2", "coloring2", Kind::Json, "coloring of variable sequences")
            .opt("--stream", "stream", Kind::Text, "stream such as e:8 or list:(a_,_b)")
            .opt("--depth", "depth", Kind::Number, "number of variable words")
            .opt("--d", "d", Kind::Text, "relative | absolute");
        leaf(ver, "hj", "verify.hj", "Hales-Jewett numbers and lines")
            .opt("--r", "r", Kind::Number, "colors")
            .opt("--n", "n", Kind::Number, "words per sequence")
            .opt("--k", "k", Kind::Number, "alphabet size")
            .opt("--xi", "xi", Kind::Text, "ordinal")
            .opt("--mmax", "mmax", Kind::Number, "largest M tried")
            .opt("--scan-all", "scan_all", Kind::Flag, "continue past the least M")
            .opt("--coloring", "coloring", Kind::Json, "single-coloring mode")
            .opt("--M", "M", Kind::Number, "total length (single-coloring mode)");
        leaf(ver, "subspace", "verify.subspace", "monochromatic combinatorial subspaces")
            .opt("--xi", "xi", Kind::Text, "ordinal")
            .opt("--coloring", "coloring", Kind::Json, "coloring of point sets")
            .opt("--stream", "stream", Kind::Text, "base stream")
            .opt("--depth", "depth", Kind::Number, "number of variable words");
        leaf(ver, "nw", "verify.nw", "non-pointwise-closed fixtures")
            .opt("--fixture", "fixture", Kind::Text, "1 | 2 | empty")
            .opt("--xi", "xi", Kind::Text, "probe ordinal")
            .opt("--stream", "stream", Kind::Text, "stream such as e:8 or list:(a_,_b)")
            .opt("--positions", "positions", Kind::Number, "stream entries probed")
            .opt("--max-words", "max_words", Kind::Number, "universe words")
            .opt("--max-letters", "max_letters", Kind::Number, "universe letters")
            .opt("--H", "H", Kind::Number, "closedness horizon")
            .opt("--levels", "levels", Kind::Number, "derivative passes");
    }

    const Leaf* chosen() const {
        const Leaf* best = nullptr;
        for (const auto& l : leaves)
            if (l->app->parsed() && (!best || l->command.size() > best->command.size())) best = l.get();
        return best;
    }

    std::string config_json() const {
        json cfg = config_file.empty() ? json::object() : json::parse(read_file(config_file));
        if (!format.empty()) cfg["format"] = format;
        if (threads) cfg["threads"] = threads;
        if (!rule.empty()) cfg["limit_rule"] = rule;
        if (!alphabet.empty()) {
            std::vector<std::string> syms;
            std::stringstream ss(alphabet);
            for (std::string s; std::getline(ss, s, ',');) syms.push_back(s);
            cfg["alphabet"] = syms;
        }
        return cfg.dump();
    }
};

int exit_code(srw_status st) {
    switch (st) {
        case SRW_OK: return 0;
        case SRW_ERR_PARSE:
        case SRW_ERR_INVALID:
        case SRW_ERR_ARGUMENT: return 2;
        case SRW_ERR_BUDGET: return 3;
        default: return 4;
    }
}

}  // namespace

int main(int argc, char** argv) {
    Cli cli;
    try {
        cli.app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = cli.app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    const Leaf* leaf = cli.chosen();
    if (!leaf) {
        std::cerr << "srw: error: no command given\n";
        return 2;
    }

    std::string params, config;
    try {
        params = leaf->params().dump();
        config = cli.config_json();
    } catch (const std::exception& e) {
        std::cerr << "srw: error: " << e.what() << "\n";
        return 2;
    }

    srw_context* ctx = nullptr;
    if (srw_status st = srw_context_new(config.c_str(), &ctx); st != SRW_OK) {
        std::cerr << "srw: config error: " << srw_last_error() << "\n";
        return exit_code(st);
    }
    char* report = nullptr;
    int outcome = 0;
    const srw_status st = srw_run(ctx, leaf->command.c_str(), params.c_str(), &report, &outcome);
    srw_context_free(ctx);
    if (st != SRW_OK) {
        std::cerr << "srw: error: " << srw_last_error() << "\n";
        return exit_code(st);
    }
    std::fwrite(report, 1, std::strlen(report), stdout);
    srw_string_free(report);
    return outcome;
}
