#include "commands.hpp"

#include <functional>
#include <map>

#include "srw/cbindex.hpp"
#include "srw/error.hpp"
#include "srw/verify.hpp"

namespace srw {

using nlohmann::json;

namespace {

// ------------------------------------------------------------ parameter access

struct Ctx {
    const json& p;
    const RunConfig& cfg;
    Alphabet alphabet;
    SchreierConfig scfg;

    bool has(const char* key) const { return p.contains(key) && !p.at(key).is_null(); }

    template <class T>
    T get(const char* key) const {
        if (!has(key)) fail(ErrorCode::Invalid, std::string("missing parameter '") + key + "'");
        try {
            return p.at(key).get<T>();
        } catch (const json::exception&) {
            fail(ErrorCode::Invalid, std::string("parameter '") + key + "' has the wrong type");
        }
    }
    template <class T>
    T get(const char* key, T fallback) const {
        return has(key) ? get<T>(key) : fallback;
    }

    Ordinal ordinal(const char* key) const { return parse_ordinal(get<std::string>(key)); }
    Ordinal ordinal(const char* key, const char* fallback) const {
        return parse_ordinal(get<std::string>(key, fallback));
    }
    Side side() const { return parse_side(get<std::string>("side", "c")); }
    VarWordStream stream(const char* key = "stream") const {
        return parse_stream(get<std::string>(key, "e:" + std::to_string(cfg.horizon)), alphabet);
    }
    WordSeq seq(const char* key) const { return parse_wordseq(get<std::string>(key), alphabet); }
    std::optional<VarWordStream> base() const {
        if (!has("base")) return std::nullopt;
        return parse_stream(get<std::string>("base"), alphabet);
    }
    WxiQuery query() const { return WxiQuery{ordinal("xi"), alphabet, side(), base(), scfg}; }
};

json seq_list(const std::vector<WordSeq>& v, const Alphabet& a) {
    json out = json::array();
    for (const auto& s : v) out.push_back(format(s, a));
    return out;
}

json set_list(const std::vector<FinSet>& v) {
    json out = json::array();
    for (const auto& s : v) out.push_back(format(s));
    return out;
}

json certificate(const std::vector<CertEntry>& c) {
    json out = json::array();
    for (const auto& e : c) out.push_back({{"item", e.item}, {"color", e.color}});
    return out;
}

json checker(const check::CheckResult& r) { return {{"independent_check", r.ok ? "pass" : "fail"}, {"message", r.message}}; }

Coloring coloring(const Ctx& c, const char* key) {
    if (!c.has(key)) fail(ErrorCode::Invalid, std::string("missing coloring '") + key + "'");
    const json& j = c.p.at(key);
    Coloring col;
    if (j.is_string()) {
        col.rule = j.get<std::string>();
        return col;
    }
    if (!j.is_object()) fail(ErrorCode::Invalid, "a coloring is a rule name or an object");
    try {
        col.rule = j.value("rule", std::string("constant"));
        col.colors = j.value("colors", 2u);
        if (j.contains("table")) col.table = j.at("table").get<std::map<std::string, unsigned>>();
    } catch (const json::exception&) {
        fail(ErrorCode::Invalid, std::string("malformed coloring '") + key + "'");
    }
    if (!col.table.empty() && !j.contains("rule")) col.rule = "table";
    return col;
}

json coloring_json(const Coloring& c) {
    json j = {{"rule", c.rule}, {"colors", c.colors}};
    if (!c.table.empty()) j["table"] = c.table;
    return j;
}

// A family is either inline ({side, max_words, max_letters, members}) or a
// named fixture ({fixture: "wk:<k>" | "nw1" | "nw2"} plus universe bounds).
Family family(const Ctx& c, const char* key) {
    if (!c.has(key)) fail(ErrorCode::Invalid, std::string("missing family '") + key + "'");
    json j = c.p.at(key);
    if (j.is_string()) {
        // bare fixture name; universe bounds come from the surrounding parameters
        j = json{{"fixture", j.get<std::string>()}};
        for (const char* k : {"max_words", "max_letters", "side"})
            if (c.has(k)) j[k] = c.p.at(k);
    }
    if (!j.is_object()) fail(ErrorCode::Invalid, "a family is a JSON object or a fixture name");
    Universe u;
    u.alphabet = c.alphabet;
    try {
        u.max_words = j.value("max_words", u.max_words);
        u.max_letters = j.value("max_letters", u.max_letters);
        const Side side = parse_side(j.value("side", std::string("c")));
        if (j.contains("fixture")) {
            const std::string fx = j.at("fixture").get<std::string>();
            if (fx.rfind("wk:", 0) == 0) {
                const std::size_t k = std::stoul(fx.substr(3));
                return families::materialize(u, side, [k](const WordSeq& s) { return fixtures::wk_closure_member(s, k); });
            }
            if (fx == "nw1") return families::materialize(u, Side::Constant, fixtures::nw_one_member);
            if (fx == "nw2") return families::materialize(u, Side::Constant, fixtures::nw_two_member);
            fail(ErrorCode::Invalid, "unknown family fixture '" + fx + "'");
        }
        Family f;
        f.universe = u;
        f.side = side;
        for (const auto& m : j.at("members")) {
            WordSeq s = parse_wordseq(m.get<std::string>(), c.alphabet);
            if (side == Side::Constant ? !all_constant(s) : !all_variable(s))
                fail(ErrorCode::Invalid, "member " + m.get<std::string>() + " is on the wrong side");
            f.members.insert(std::move(s));
        }
        return f;
    } catch (const json::exception& e) {
        fail(ErrorCode::Invalid, std::string("malformed family: ") + e.what());
    } catch (const std::logic_error&) {
        fail(ErrorCode::Invalid, "malformed family fixture");
    }
}

json family_json(const Family& f, const Alphabet& a) {
    return {{"side", to_string(f.side)},
            {"max_words", f.universe.max_words},
            {"max_letters", f.universe.max_letters},
            {"size", f.size()},
            {"members", seq_list(std::vector<WordSeq>(f.members.begin(), f.members.end()), a)}};
}

std::string yes(bool b) { return b ? "true" : "false"; }

using Handler = std::function<CommandResult(const Ctx&)>;

// ------------------------------------------------------------ ordinal

CommandResult ordinal_eval(const Ctx& c) {
    const Ordinal a = c.ordinal("expr");
    const auto cl = classify(a);
    const char* kind = cl.kind == OrdinalKind::Zero ? "zero" : cl.kind == OrdinalKind::Successor ? "successor" : "limit";
    CommandResult r;
    r.report = {{"canonical", format(a)}, {"kind", kind}, {"height", a.height()}};
    r.plain = format(a);
    return r;
}

CommandResult ordinal_compare(const Ctx& c) {
    const auto cmp = compare(c.ordinal("a"), c.ordinal("b"));
    const int v = cmp < 0 ? -1 : cmp > 0 ? 1 : 0;
    CommandResult r;
    r.report = {{"a", format(c.ordinal("a"))}, {"b", format(c.ordinal("b"))}, {"compare", v}};
    r.plain = v < 0 ? "<" : v > 0 ? ">" : "=";
    return r;
}

CommandResult ordinal_fixed_seq(const Ctx& c) {
    const Ordinal lam = c.ordinal("expr");
    const auto count = c.get<std::uint64_t>("count", 5);
    const LimitRule rule = c.has("rule") ? parse_limit_rule(c.get<std::string>("rule")) : c.cfg.limit_rule;
    CommandResult r;
    json seq = json::array();
    r.table.push_back({"n", "term"});
    for (std::uint64_t n = 1; n <= count; ++n) {
        const std::string t = format(limit_step(lam, n, rule));
        seq.push_back(t);
        r.table.push_back({std::to_string(n), t});
        r.plain += (n > 1 ? ", " : "") + t;
    }
    r.report = {{"limit", format(lam)}, {"rule", to_string(rule)}, {"terms", seq}, {"bounds", {{"count", count}}}};
    return r;
}

// ------------------------------------------------------------ schreier

CommandResult schreier_mem(const Ctx& c) {
    const FinSet s = parse_finset(c.get<std::string>("set"));
    const bool m = schreier::mem(c.ordinal("xi"), s, c.scfg);
    CommandResult r;
    r.report = {{"xi", format(c.ordinal("xi"))}, {"set", format(s)}, {"member", m}};
    r.plain = yes(m);
    return r;
}

CommandResult schreier_decompose(const Ctx& c) {
    const FinSet s = parse_finset(c.get<std::string>("set"));
    const Ordinal xi = c.ordinal("xi");
    const auto blocks = schreier::decompose(xi, s, c.scfg);
    CommandResult r;
    r.report = {{"xi", format(xi)}, {"set", format(s)}, {"member", !blocks.empty() || s.empty()}, {"blocks", set_list(blocks)}};
    for (const auto& b : blocks) r.plain += format(b) + " ";
    if (!r.plain.empty()) r.plain.pop_back();
    if (blocks.empty()) r.plain = "not a member";
    return r;
}

CommandResult schreier_enumerate(const Ctx& c) {
    const Ordinal xi = c.ordinal("xi");
    const auto N = c.get<std::uint32_t>("N", c.cfg.N);
    const auto members = schreier::enumerate(xi, N, c.scfg, c.cfg.budget);
    CommandResult r;
    r.report = {{"xi", format(xi)}, {"count", members.size()}, {"members", set_list(members)}, {"bounds", {{"N", N}}}};
    r.plain = std::to_string(members.size()) + " members";
    r.table.push_back({"set", "size"});
    for (const auto& s : members) r.table.push_back({format(s), std::to_string(s.size())});
    return r;
}

CommandResult schreier_transfer(const Ctx& c) {
    const Ordinal xi = c.ordinal("xi");
    const auto n = c.get<std::uint64_t>("n");
    const Ordinal t = schreier::transfer_index(xi, n, c.scfg);
    CommandResult r;
    r.report = {{"xi", format(xi)}, {"n", n}, {"xi_n", format(t)}};
    r.plain = format(t);
    return r;
}

// ------------------------------------------------------------ words

CommandResult words_reduce(const Ctx& c) {
    const auto w = c.stream();
    const Reduction red = words::reduce_seq(w, c.seq("t"));
    CommandResult r;
    r.report = {{"stream", describe(w, c.alphabet)},
                {"u", format(red.words, c.alphabet)},
                {"d_relative", format(red.d)},
                {"consumed", red.consumed}};
    r.plain = format(red.words, c.alphabet);
    return r;
}

CommandResult words_reductions(const Ctx& c) {
    const Side side = c.side();
    std::vector<Reduction> out;
    json bounds;
    if (c.has("seq")) {
        const auto fr = words::finite_reductions(c.seq("seq"), c.alphabet, c.cfg.budget);
        out = side == Side::Constant ? fr.rw : fr.vrw;
        bounds = {{"source", c.get<std::string>("seq")}};
    } else {
        const auto w = c.stream();
        const auto positions = c.get<std::size_t>("positions", std::min<std::size_t>(4, w.horizon()));
        out = words::stream_reductions(w, c.alphabet, side, positions, c.get<std::size_t>("max_words", positions),
                                       c.cfg.budget);
        bounds = {{"stream", describe(w, c.alphabet)}, {"positions", positions}};
    }
    CommandResult r;
    json items = json::array();
    r.table.push_back({"reduction", "d"});
    for (const auto& red : out) {
        items.push_back({{"words", format(red.words, c.alphabet)}, {"d", format(red.d)}});
        r.table.push_back({format(red.words, c.alphabet), format(red.d)});
    }
    r.report = {{"side", to_string(side)}, {"count", out.size()}, {"reductions", items}, {"bounds", bounds}};
    r.plain = std::to_string(out.size()) + " reductions";
    return r;
}

// ------------------------------------------------------------ wxi

CommandResult wxi_member(const Ctx& c) {
    const WxiQuery q = c.query();
    const WordSeq u = c.seq("seq");
    const bool m = wxi::in_wxi(q, u);
    CommandResult r;
    r.report = {{"xi", format(q.xi)}, {"seq", format(u, c.alphabet)}, {"side", to_string(q.side)}, {"member", m}};
    if (!u.empty()) r.report["d"] = format(wxi::complexity(q, u));
    r.report["star_minus"] = wxi::in_star_minus(q, u);
    if (q.base) r.report["base"] = describe(*q.base, c.alphabet);
    r.plain = yes(m);
    return r;
}

CommandResult wxi_decompose(const Ctx& c) {
    const WxiQuery q = c.query();
    const WordSeq u = c.seq("seq");
    const auto rep = wxi::canonical_rep(q, u);
    CommandResult r;
    json blocks = json::array();
    for (const auto& b : rep.block_d) blocks.push_back(format(b));
    r.report = {{"xi", format(q.xi)}, {"seq", format(u, c.alphabet)}, {"boundaries", rep.boundaries},
                {"block_d", blocks},  {"residual", rep.residual}};
    for (auto b : rep.boundaries) r.plain += std::to_string(b) + " ";
    r.plain += rep.residual ? "residual" : "exact";
    return r;
}

CommandResult wxi_enumerate(const Ctx& c) {
    const Ordinal xi = c.ordinal("xi");
    const Side side = c.side();
    const auto letters = c.get<std::size_t>("letters", 4);
    const auto all = wxi::enumerate(xi, c.alphabet, side, letters, c.scfg, c.cfg.budget);
    CommandResult r;
    r.report = {{"xi", format(xi)}, {"side", to_string(side)}, {"count", all.size()}, {"members", seq_list(all, c.alphabet)},
                {"bounds", {{"letters", letters}}}};
    r.plain = std::to_string(all.size()) + " members";
    r.table.push_back({"seq", "d"});
    for (const auto& s : all) r.table.push_back({format(s, c.alphabet), format(words::d_map(s))});
    return r;
}

CommandResult wxi_transfer(const Ctx& c) {
    const Ordinal xi = c.ordinal("xi");
    const Word s = parse_word(c.get<std::string>("word"), c.alphabet);
    const auto letters = c.get<std::size_t>("letters", 6);
    const auto rep = wxi::transfer_check(xi, s, c.alphabet, letters, c.scfg);
    CommandResult r;
    r.report = {{"xi", format(xi)},       {"word", format(s, c.alphabet)}, {"xi_n", format(rep.xi_n)},
                {"lhs", rep.lhs_size},    {"rhs", rep.rhs_size},           {"equal", rep.equal},
                {"bounds", {{"letters", letters}}}};
    if (rep.counterexample) r.report["counterexample"] = format(*rep.counterexample, c.alphabet);
    r.plain = yes(rep.equal);
    r.outcome = rep.equal ? 0 : 1;
    return r;
}

// ------------------------------------------------------------ family

CommandResult family_close(const Ctx& c) {
    const Family f = families::star_closure(family(c, "family"));
    CommandResult r;
    r.report = {{"closure", family_json(f, c.alphabet)}};
    r.plain = std::to_string(f.size()) + " members";
    return r;
}

CommandResult family_kernel(const Ctx& c) {
    const Family f = family(c, "family");
    const Family k = families::hereditary_kernel(f);
    CommandResult r;
    r.report = {{"input_size", f.size()}, {"kernel", family_json(k, c.alphabet)}};
    r.plain = std::to_string(k.size()) + " members";
    return r;
}

CommandResult family_predicate(const Ctx& c, const char* name, bool (*pred)(const Family&)) {
    const Family f = family(c, "family");
    const bool v = pred(f);
    CommandResult r;
    r.report = {{name, v}, {"size", f.size()}};
    r.plain = yes(v);
    return r;
}

CommandResult family_dichotomy(const Ctx& c) {
    const Family g = family(c, "family");
    const auto u = c.stream();
    const auto positions = c.get<std::size_t>("positions", std::min<std::size_t>(5, u.horizon()));
    const auto rep = families::tree_dichotomy_check(g, c.ordinal("xi"), u, positions, c.scfg);
    CommandResult r;
    r.report = {{"disjoint", rep.disjoint},
                {"inside_star_minus", rep.inside_star_minus},
                {"agree", rep.agree()},
                {"bounds", {{"stream", describe(u, c.alphabet)}, {"positions", positions}}}};
    if (rep.disjoint_failure) r.report["disjoint_failure"] = format(*rep.disjoint_failure, c.alphabet);
    if (rep.star_failure) r.report["star_failure"] = format(*rep.star_failure, c.alphabet);
    r.plain = rep.agree() ? "agree" : "disagree";
    r.outcome = rep.agree() ? 0 : 1;
    return r;
}

CommandResult family_closed(const Ctx& c) {
    const Family g = family(c, "family");
    const auto u = c.stream();
    const auto H = c.get<std::size_t>("H", 3);
    const std::string mode = c.get<std::string>("mode", "hereditary");
    if (mode != "tree" && mode != "hereditary") fail(ErrorCode::Invalid, "mode is tree or hereditary");
    const auto rep = families::pointwise_closed_trunc(
        g, u, H, mode == "tree" ? families::ClosedMode::Tree : families::ClosedMode::Hereditary);
    CommandResult r;
    r.report = {{"open_at_horizon", rep.open}, {"bounds", {{"H", H}, {"stream", describe(u, c.alphabet)}, {"mode", mode}}}};
    if (rep.open) r.report["chain"] = format(rep.chain, c.alphabet);
    r.plain = rep.open ? "open: chain " + format(rep.chain, c.alphabet) : "closed at horizon " + std::to_string(H);
    r.outcome = rep.open ? 0 : 1;
    return r;
}

// ------------------------------------------------------------ cbindex

CommandResult cbindex_run(const Ctx& c) {
    const Family f = family(c, "family");
    const auto u = c.stream();
    const ChainOracle o = parse_oracle(c.get<std::string>("oracle", "exact:length-bound"));
    const auto budget = c.get<std::size_t>("budget", 16);
    const auto rep = cb::so_index(f, u, o, budget, c.cfg.threads);
    CommandResult r;
    r.report = {{"oracle", describe(o)},
                {"initial_size", rep.initial_size},
                {"level_sizes", rep.level_sizes},
                {"budget_exceeded", rep.budget_exceeded},
                {"bounds",
                 {{"stream", describe(u, c.alphabet)},
                  {"max_words", f.universe.max_words},
                  {"max_letters", f.universe.max_letters},
                  {"budget", budget}}}};
    if (rep.index) {
        r.report["so_index"] = *rep.index;
        r.plain = "sO=" + std::to_string(*rep.index);
    } else {
        r.report["so_index"] = nullptr;
        r.plain = "budget exceeded after " + std::to_string(budget) + " derivatives";
        r.outcome = 3;
    }
    r.table.push_back({"level", "survivors"});
    for (std::size_t i = 0; i < rep.level_sizes.size(); ++i)
        r.table.push_back({std::to_string(i), std::to_string(rep.level_sizes[i])});
    return r;
}

CommandResult cbindex_monotonicity(const Ctx& c) {
    const Family f1 = family(c, "f1"), f2 = family(c, "f2");
    const auto u = c.stream();
    const auto u1 = c.stream("stream1");
    const ChainOracle o = parse_oracle(c.get<std::string>("oracle", "exact:length-bound"));
    const ChainOracle o1 = c.has("oracle1") ? parse_oracle(c.get<std::string>("oracle1")) : o;
    const auto budget = c.get<std::size_t>("budget", 16);
    const auto rep = cb::monotonicity_check(f1, f2, u, o, u1, o1, budget, c.cfg.threads);
    CommandResult r;
    r.report = {{"so_f1", rep.so_small},
                {"so_f2", rep.so_large},
                {"so_f2_restricted", rep.so_restricted},
                {"inclusion_holds", rep.inclusion_holds},
                {"restriction_holds", rep.restriction_holds},
                {"bounds",
                 {{"stream", describe(u, c.alphabet)}, {"stream1", describe(u1, c.alphabet)}, {"budget", budget}}}};
    const bool ok = rep.inclusion_holds && rep.restriction_holds;
    r.plain = ok ? "holds" : "violated";
    r.outcome = ok ? 0 : 1;
    return r;
}

// ------------------------------------------------------------ verify

CommandResult verify_ramsey(const Ctx& c) {
    const Ordinal xi = c.ordinal("xi");
    const auto N = c.get<std::uint32_t>("N", c.cfg.N);
    const auto target = c.get<std::uint32_t>("target");
    CommandResult r;
    json bounds = {{"N", N}, {"target", target}};
    if (c.has("exhaust")) {
        const auto colors = c.get<unsigned>("exhaust");
        const auto rep = verify::ramsey_exhaust(xi, N, colors, target, c.scfg, c.cfg.threads, c.cfg.budget);
        r.report = {{"xi", format(xi)},
                    {"mode", "exhaust"},
                    {"colors", colors},
                    {"domain", rep.domain},
                    {"colorings", rep.colorings},
                    {"visited", rep.visited},
                    {"defeated", rep.defeated},
                    {"every_coloring_has_witness", rep.every_coloring_has_witness()},
                    {"bounds", bounds}};
        if (rep.first_defeating) r.report["first_defeating"] = *rep.first_defeating;
        r.plain = rep.every_coloring_has_witness() ? "every coloring has a witness"
                                                   : std::to_string(rep.defeated) + " defeating colorings";
        r.outcome = rep.every_coloring_has_witness() ? 0 : 1;
        return r;
    }
    const Coloring chi = coloring(c, "coloring");
    const auto res = verify::ramsey_schreier_search(xi, N, chi, target, c.scfg);
    r.report = {{"xi", format(xi)}, {"mode", "search"}, {"coloring", coloring_json(chi)}, {"found", res.found},
                {"candidates_checked", res.candidates_checked}, {"space", res.space}, {"bounds", bounds}};
    if (res.found) {
        r.report["witness"] = {{"kind", "mono-set"}, {"L", format(res.L)}, {"color", res.color},
                               {"certificate", certificate(res.certificate)},
                               {"check", checker(check::ramsey_witness(xi, chi, res, c.scfg))}};
        r.plain = "L=" + format(res.L);
    } else {
        r.plain = "exhausted";
        r.outcome = 1;
    }
    return r;
}

json carlson_json(const verify::CarlsonParams& p, const verify::CarlsonResult& res, const char* kind) {
    json j = {{"found", res.found}, {"space", res.space}, {"covered", res.covered}, {"nodes", res.nodes}};
    if (res.found) {
        j["witness"] = {{"kind", kind},
                        {"t", format(res.t, p.alphabet)},
                        {"u", format(res.u, p.alphabet)},
                        {"color_constant", res.color1},
                        {"color_variable", res.color2},
                        {"certificate_constant", certificate(res.cert_constant)},
                        {"certificate_variable", certificate(res.cert_variable)},
                        {"check", checker(check::carlson_witness(p, res))}};
    } else {
        j["exhaustion_count_matches"] = res.covered == res.space;
    }
    return j;
}

CommandResult verify_carlson(const Ctx& c) {
    const Coloring chi1 = coloring(c, "coloring1"), chi2 = coloring(c, "coloring2");
    verify::CarlsonParams p;
    p.xi = c.ordinal("xi");
    p.alphabet = c.alphabet;
    p.w = c.stream();
    p.depth = c.get<std::size_t>("depth", c.cfg.depth);
    p.dmode = c.get<std::string>("d", "relative") == "absolute" ? verify::DMode::Absolute : verify::DMode::Relative;
    const Alphabet a = c.alphabet;
    p.chi1 = [chi1, a](const WordSeq& s) { return color_of(chi1, s, a); };
    p.chi2 = [chi2, a](const WordSeq& s) { return color_of(chi2, s, a); };
    p.cfg = c.scfg;
    p.node_budget = c.cfg.budget;
    p.threads = c.cfg.threads;
    const auto res = verify::carlson_search(p);
    CommandResult r;
    r.report = carlson_json(p, res, "variable-sequence prefix");
    r.report["xi"] = format(p.xi);
    r.report["coloring1"] = coloring_json(chi1);
    r.report["coloring2"] = coloring_json(chi2);
    r.report["bounds"] = {{"stream", describe(p.w, a)}, {"depth", p.depth},
                          {"d", p.dmode == verify::DMode::Absolute ? "absolute" : "relative"}};
    r.plain = res.found ? "t=" + format(res.t, a) : "exhausted at depth " + std::to_string(p.depth);
    r.outcome = res.found ? 0 : 1;
    return r;
}

CommandResult verify_subspace(const Ctx& c) {
    const Coloring chi = coloring(c, "coloring");
    verify::CarlsonParams p;
    p.xi = c.ordinal("xi");
    p.alphabet = c.alphabet;
    p.w = c.stream();
    p.depth = c.get<std::size_t>("depth", c.cfg.depth);
    p.dmode = verify::DMode::Absolute;
    const Alphabet a = c.alphabet;
    p.chi2 = [chi, a](const WordSeq& s) { return color_of_points(chi, wxi::subspace_points(s, a), a); };
    p.cfg = c.scfg;
    p.node_budget = c.cfg.budget;
    p.threads = c.cfg.threads;
    const auto res = verify::carlson_search(p);
    CommandResult r;
    r.report = carlson_json(p, res, "subspace generator");
    r.report["xi"] = format(p.xi);
    r.report["coloring"] = coloring_json(chi);
    r.report["bounds"] = {{"base", describe(p.w, a)}, {"depth", p.depth}};
    r.plain = res.found ? "u=" + format(res.u, a) : "exhausted at depth " + std::to_string(p.depth);
    r.outcome = res.found ? 0 : 1;
    return r;
}

CommandResult verify_hj(const Ctx& c) {
    const Ordinal xi = c.ordinal("xi", "0");
    const auto n = c.get<std::size_t>("n", 1);
    CommandResult r;
    if (c.has("coloring")) {
        const Coloring chi = coloring(c, "coloring");
        const auto M = c.get<std::size_t>("M");
        const auto res = verify::hj_line_search(chi, M, n, xi, c.alphabet, c.scfg);
        r.report = {{"mode", "single"}, {"xi", format(xi)}, {"coloring", coloring_json(chi)}, {"found", res.found},
                    {"candidates_checked", res.candidates_checked},
                    {"bounds", {{"M", M}, {"n", n}, {"alphabet", c.alphabet.symbols()}}}};
        if (res.found)
            r.report["witness"] = {{"kind", "variable word line"}, {"w", format(res.w, c.alphabet)}, {"color", res.color},
                                   {"certificate", certificate(res.certificate)},
                                   {"check", checker(check::hj_witness(chi, M, xi, c.alphabet, res, c.scfg))}};
        r.plain = res.found ? "w=" + format(res.w, c.alphabet) : "exhausted";
        r.outcome = res.found ? 0 : 1;
        return r;
    }
    const auto colors = c.get<unsigned>("r", 2);
    const auto k = c.get<std::size_t>("k", 2);
    const auto mmax = c.get<std::size_t>("mmax", 4);
    const bool scan = c.get<bool>("scan_all", false);
    const auto rep = verify::hales_jewett_M(colors, n, k, xi, mmax, c.scfg, c.cfg.threads, c.cfg.budget, scan);
    json levels = json::array();
    r.table.push_back({"M", "domain", "candidates", "colorings", "visited", "defeated", "works"});
    for (const auto& l : rep.levels) {
        json lj = {{"M", l.M},
                   {"domain", l.domain},
                   {"candidates", l.candidates},
                   {"colorings", l.exhaust.colorings},
                   {"visited", l.exhaust.visited},
                   {"defeated", l.exhaust.defeated},
                   {"works", l.works}};
        if (l.exhaust.first_defeating) {
            json assignment = json::object();
            for (std::size_t i = 0; i < l.exhaust.domain.size(); ++i)
                assignment[l.exhaust.domain[i]] = (*l.exhaust.first_defeating)[i];
            lj["defeating_coloring"] = assignment;
        }
        levels.push_back(std::move(lj));
        r.table.push_back({std::to_string(l.M), std::to_string(l.domain), std::to_string(l.candidates),
                           std::to_string(l.exhaust.colorings), std::to_string(l.exhaust.visited),
                           std::to_string(l.exhaust.defeated), yes(l.works)});
    }
    r.report = {{"mode", "least-M"},
                {"xi", format(xi)},
                {"levels", levels},
                {"budget_exceeded", rep.budget_exceeded},
                {"frontier", rep.frontier},
                {"bounds", {{"r", colors}, {"n", n}, {"k", k}, {"mmax", mmax}, {"budget", c.cfg.budget}}}};
    r.report["M"] = rep.M ? json(*rep.M) : json(nullptr);
    if (rep.M) {
        r.plain = "M=" + std::to_string(*rep.M);
    } else if (rep.budget_exceeded) {
        r.plain = "budget exceeded at M=" + std::to_string(rep.frontier);
        r.outcome = 3;
    } else {
        r.plain = "not found up to M=" + std::to_string(mmax);
        r.outcome = 1;
    }
    return r;
}

CommandResult verify_nw(const Ctx& c) {
    verify::NwParams p;
    p.fixture = c.get<std::string>("fixture", "1");
    p.xi_probe = c.ordinal("xi", "w");
    p.stream = c.stream();
    p.positions = c.get<std::size_t>("positions", std::min<std::size_t>(8, p.stream.horizon()));
    p.universe = Universe{c.alphabet, c.get<std::size_t>("max_words", 5), c.get<std::size_t>("max_letters", 5)};
    p.horizon = c.get<std::size_t>("H", 3);
    p.levels = c.get<std::size_t>("levels", 3);
    p.cfg = c.scfg;
    const auto rep = verify::nw_fixture_check(p);
    CommandResult r;
    r.report = {{"fixture", p.fixture},
                {"xi_probe", format(p.xi_probe)},
                {"horn", rep.horn},
                {"probed", rep.probed},
                {"inside", rep.inside},
                {"outside", rep.outside},
                {"family_size", rep.family_size},
                {"open_at_horizon", rep.open_at_horizon},
                {"profile", rep.profile},
                {"profile_note", rep.profile_note},
                {"bounds",
                 {{"stream", describe(p.stream, c.alphabet)},
                  {"positions", p.positions},
                  {"max_words", p.universe.max_words},
                  {"max_letters", p.universe.max_letters},
                  {"H", p.horizon},
                  {"levels", p.levels}}}};
    if (rep.first_inside) r.report["first_inside"] = format(*rep.first_inside, c.alphabet);
    if (rep.first_outside) r.report["first_outside"] = format(*rep.first_outside, c.alphabet);
    if (rep.open_at_horizon) r.report["chain"] = format(rep.chain, c.alphabet);
    r.plain = "horn=" + rep.horn;
    r.outcome = rep.horn == "mixed" ? 1 : 0;
    return r;
}

const std::map<std::string, Handler, std::less<>>& registry() {
    static const std::map<std::string, Handler, std::less<>> table = {
        {"ordinal.eval", ordinal_eval},
        {"ordinal.compare", ordinal_compare},
        {"ordinal.fixed_seq", ordinal_fixed_seq},
        {"schreier.mem", schreier_mem},
        {"schreier.decompose", schreier_decompose},
        {"schreier.enumerate", schreier_enumerate},
        {"schreier.transfer", schreier_transfer},
        {"words.reduce", words_reduce},
        {"words.reductions", words_reductions},
        {"wxi.member", wxi_member},
        {"wxi.decompose", wxi_decompose},
        {"wxi.enumerate", wxi_enumerate},
        {"wxi.transfer", wxi_transfer},
        {"family.close", family_close},
        {"family.kernel", family_kernel},
        {"family.thin", [](const Ctx& c) { return family_predicate(c, "thin", families::is_thin); }},
        {"family.tree", [](const Ctx& c) { return family_predicate(c, "tree", families::is_tree); }},
        {"family.hereditary", [](const Ctx& c) { return family_predicate(c, "hereditary", families::is_hereditary); }},
        {"family.dichotomy", family_dichotomy},
        {"family.closed", family_closed},
        {"cbindex", cbindex_run},
        {"cbindex.monotonicity", cbindex_monotonicity},
        {"verify.ramsey", verify_ramsey},
        {"verify.carlson", verify_carlson},
        {"verify.subspace", verify_subspace},
        {"verify.hj", verify_hj},
        {"verify.nw", verify_nw},
    };
    return table;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

}  // namespace

std::vector<std::string> command_names() {
    std::vector<std::string> out;
    for (const auto& [name, h] : registry()) out.push_back(name);
    return out;
}

CommandResult run_command(std::string_view command, const json& params, const RunConfig& cfg) {
    validate(cfg);
    const auto it = registry().find(command);
    if (it == registry().end()) fail(ErrorCode::Invalid, "unknown command '" + std::string(command) + "'");
    if (!params.is_object()) fail(ErrorCode::Invalid, "parameters must be a JSON object");
    Ctx ctx{params, cfg, Alphabet(cfg.alphabet), SchreierConfig{cfg.limit_rule}};
    CommandResult r = it->second(ctx);

    json head = {{"schema_version", kSchemaVersion},
                 {"command", std::string(command)},
                 {"config", {{"alphabet", cfg.alphabet}, {"limit_rule", to_string(cfg.limit_rule)}}},
                 {"outcome", r.outcome}};
    head.update(r.report);
    if (!head.contains("bounds")) head["bounds"] = json::object();
    head["bounds"]["finite_truncation"] = true;
    r.report = std::move(head);
    return r;
}

std::string render(const CommandResult& r, const std::string& format) {
    if (format == "json") return r.report.dump(2) + "\n";
    if (format == "plain") return r.plain + "\n";
    if (format != "csv") fail(ErrorCode::Invalid, "format must be json, csv or plain");
    std::string out;
    if (r.table.empty()) {
        out = "key,value\n";
        for (const auto& [k, v] : r.report.items())
            if (v.is_primitive()) out += csv_field(k) + "," + csv_field(v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
        return out;
    }
    for (const auto& row : r.table) {
        for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + csv_field(row[i]);
        out += "\n";
    }
    return out;
}

}  // namespace srw
