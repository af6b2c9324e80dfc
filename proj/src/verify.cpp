#include "srw/verify.hpp"

#include <algorithm>

#include "srw/cbindex.hpp"
#include "srw/error.hpp"
#include "srw/parallel.hpp"

namespace srw {

namespace {

unsigned clamp_color(const Coloring& c, std::uint64_t v) {
    if (c.colors == 0) fail(ErrorCode::Invalid, "a coloring needs at least one color");
    return static_cast<unsigned>(v % c.colors) + 1;
}

unsigned table_lookup(const Coloring& c, const std::string& key) {
    auto it = c.table.find(key);
    if (it == c.table.end()) fail(ErrorCode::Invalid, "coloring table has no entry for " + key);
    if (it->second < 1 || it->second > c.colors) fail(ErrorCode::Invalid, "color out of range for " + key);
    return it->second;
}

[[noreturn]] void unknown_rule(const Coloring& c, const char* domain) {
    fail(ErrorCode::Invalid, "rule '" + c.rule + "' does not apply to " + domain);
}

}  // namespace

unsigned color_of(const Coloring& c, const FinSet& s) {
    if (c.rule == "constant") return 1;
    if (c.rule == "table") return table_lookup(c, format(s));
    if (c.rule == "size-parity") return clamp_color(c, s.size());
    if (c.rule == "min-parity") return s.empty() ? 1 : clamp_color(c, s.min());
    if (c.rule == "sum-parity") {
        std::uint64_t sum = 0;
        for (auto x : s.elems()) sum += x;
        return clamp_color(c, sum);
    }
    unknown_rule(c, "finite sets");
}

unsigned color_of(const Coloring& c, const WordSeq& s, const Alphabet& a) {
    if (c.rule == "constant") return 1;
    if (c.rule == "table") return table_lookup(c, format(s, a));
    if (s.empty()) return 1;
    if (c.rule == "first-letter") {
        const Letter l = s[0][0];
        return clamp_color(c, l == kVar ? a.size() : l);
    }
    if (c.rule == "parity") return clamp_color(c, s[0].size());
    if (c.rule == "min-of-d") return s.size() < 2 ? 1 : clamp_color(c, words::d_map(s).min());
    unknown_rule(c, "word sequences");
}

std::string format_points(const std::set<Word>& points, const Alphabet& a) {
    std::string out = "{";
    for (const auto& w : points) {
        if (out.size() > 1) out += ',';
        out += format(w, a);
    }
    return out + "}";
}

unsigned color_of_points(const Coloring& c, const std::set<Word>& points, const Alphabet& a) {
    if (c.rule == "constant") return 1;
    if (c.rule == "table") return table_lookup(c, format_points(points, a));
    if (points.empty()) return 1;
    if (c.rule == "moving-first") {
        const Letter first = points.begin()->operator[](0);
        const bool moves = std::any_of(points.begin(), points.end(), [&](const Word& w) { return w[0] != first; });
        return moves ? std::min(2u, c.colors) : 1;
    }
    if (c.rule == "first-letter") return clamp_color(c, points.begin()->operator[](0));
    unknown_rule(c, "point sets");
}

namespace verify {

namespace {

std::uint64_t checked_pow(std::uint64_t base, std::size_t exp, std::uint64_t cap) {
    std::uint64_t v = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (base != 0 && v > cap / base) return cap + 1;
        v *= base;
    }
    return v;
}

// Tries every r-coloring of a domain of size m. A coloring is defeated when
// none of the candidate index lists is monochromatic under it. Coloring number
// c assigns domain element i the (m-1-i)-th base-r digit of c, plus one, so
// the first domain element is the most significant digit.
ExhaustReport exhaust_colorings(std::vector<std::string> domain, unsigned r,
                                const std::vector<std::vector<std::uint32_t>>& candidates, unsigned threads,
                                std::uint64_t budget) {
    ExhaustReport rep;
    const std::size_t m = domain.size();
    rep.domain = std::move(domain);
    rep.colorings = checked_pow(r, m, budget);
    if (rep.colorings > budget)
        fail(ErrorCode::Budget, std::to_string(r) + "^" + std::to_string(m) + " colorings exceed the budget");

    const std::size_t blocks = std::min<std::uint64_t>(rep.colorings, 256);
    std::vector<std::uint64_t> visited(blocks, 0), defeated(blocks, 0), first(blocks, UINT64_MAX);
    parallel_for(blocks, threads, [&](std::size_t b) {
        const std::uint64_t lo = rep.colorings * b / blocks, hi = rep.colorings * (b + 1) / blocks;
        std::vector<unsigned> col(m);
        for (std::uint64_t c = lo; c < hi; ++c) {
            std::uint64_t x = c;
            for (std::size_t i = m; i-- > 0;) {
                col[i] = static_cast<unsigned>(x % r);
                x /= r;
            }
            bool witness = false;
            for (const auto& cand : candidates) {
                const unsigned c0 = col[cand[0]];
                if (std::all_of(cand.begin() + 1, cand.end(), [&](std::uint32_t i) { return col[i] == c0; })) {
                    witness = true;
                    break;
                }
            }
            ++visited[b];
            if (!witness) {
                ++defeated[b];
                if (first[b] == UINT64_MAX) first[b] = c;
            }
        }
    });
    for (std::size_t b = 0; b < blocks; ++b) {
        rep.visited += visited[b];
        rep.defeated += defeated[b];
        if (!rep.first_defeating && first[b] != UINT64_MAX) {
            std::vector<unsigned> col(m);
            std::uint64_t x = first[b];
            for (std::size_t i = m; i-- > 0;) {
                col[i] = static_cast<unsigned>(x % r) + 1;
                x /= r;
            }
            rep.first_defeating = std::move(col);
        }
    }
    if (rep.visited != rep.colorings) fail(ErrorCode::Invalid, "coloring sweep visited count mismatch");
    return rep;
}

std::uint32_t mask_of(const FinSet& s) {
    std::uint32_t m = 0;
    for (auto x : s.elems()) m |= 1u << (x - 1);
    return m;
}

// All target-element subsets of {1..N} as bitmasks, in lexicographic order of
// their increasing element lists.
std::vector<std::uint32_t> subsets_lex(std::uint32_t N, std::uint32_t target) {
    std::vector<std::uint32_t> out;
    std::vector<std::uint32_t> pick;
    auto rec = [&](auto&& self, std::uint32_t next) -> void {
        if (pick.size() == target) {
            std::uint32_t m = 0;
            for (auto x : pick) m |= 1u << (x - 1);
            out.push_back(m);
            return;
        }
        for (std::uint32_t x = next; x + (target - pick.size()) <= N + 1; ++x) {
            pick.push_back(x);
            self(self, x + 1);
            pick.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

void check_ramsey_bounds(std::uint32_t N, std::uint32_t target) {
    if (N == 0 || N > 30) fail(ErrorCode::Invalid, "ramsey search needs 1 <= N <= 30");
    if (target == 0 || target > N) fail(ErrorCode::Invalid, "target must lie in [1, N]");
}

}  // namespace

RamseyResult ramsey_schreier_search(const Ordinal& xi, std::uint32_t N, const Coloring& chi, std::uint32_t target,
                                    const SchreierConfig& cfg) {
    check_ramsey_bounds(N, target);
    const auto members = schreier::enumerate(xi, N, cfg);
    std::vector<std::uint32_t> masks;
    std::vector<unsigned> colors;
    for (const auto& s : members) {
        masks.push_back(mask_of(s));
        colors.push_back(color_of(chi, s));
    }
    RamseyResult res;
    const auto Ls = subsets_lex(N, target);
    res.space = Ls.size();
    for (std::uint32_t L : Ls) {
        ++res.candidates_checked;
        std::optional<unsigned> c;
        bool mono = true;
        for (std::size_t i = 0; i < masks.size() && mono; ++i) {
            if ((masks[i] & ~L) != 0) continue;
            if (!c) c = colors[i];
            mono = *c == colors[i];
        }
        if (!mono || !c) continue;
        res.found = true;
        res.color = *c;
        std::vector<std::uint32_t> elems;
        for (std::uint32_t x = 1; x <= N; ++x)
            if (L >> (x - 1) & 1) elems.push_back(x);
        res.L = FinSet(std::move(elems));
        for (std::size_t i = 0; i < masks.size(); ++i)
            if ((masks[i] & ~L) == 0) res.certificate.push_back({format(members[i]), colors[i]});
        return res;
    }
    return res;
}

ExhaustReport ramsey_exhaust(const Ordinal& xi, std::uint32_t N, unsigned r, std::uint32_t target,
                             const SchreierConfig& cfg, unsigned threads, std::uint64_t budget) {
    check_ramsey_bounds(N, target);
    if (r == 0) fail(ErrorCode::Invalid, "need at least one color");
    const auto members = schreier::enumerate(xi, N, cfg);
    std::vector<std::string> domain;
    std::vector<std::uint32_t> masks;
    for (const auto& s : members) {
        domain.push_back(format(s));
        masks.push_back(mask_of(s));
    }
    std::vector<std::vector<std::uint32_t>> candidates;
    for (std::uint32_t L : subsets_lex(N, target)) {
        std::vector<std::uint32_t> inside;
        for (std::uint32_t i = 0; i < masks.size(); ++i)
            if ((masks[i] & ~L) == 0) inside.push_back(i);
        if (!inside.empty()) candidates.push_back(std::move(inside));
    }
    return exhaust_colorings(std::move(domain), r, candidates, threads, budget);
}

// ------------------------------------------------------------------ Carlson

std::uint64_t carlson_space(std::size_t alphabet_size, std::size_t depth, std::size_t positions) {
    // V(l): variable words of length l over k symbols plus the variable.
    std::vector<std::uint64_t> V(positions + 1, 0);
    for (std::size_t l = 1; l <= positions; ++l)
        V[l] = checked_pow(alphabet_size + 1, l, UINT64_MAX / 4) - checked_pow(alphabet_size, l, UINT64_MAX / 4);
    // S[d][p]: sequences of d such words using at most p entries.
    std::vector<std::vector<std::uint64_t>> S(depth + 1, std::vector<std::uint64_t>(positions + 1, 0));
    for (std::size_t p = 0; p <= positions; ++p) S[0][p] = 1;
    for (std::size_t d = 1; d <= depth; ++d)
        for (std::size_t p = 0; p <= positions; ++p)
            for (std::size_t l = 1; l <= p; ++l) S[d][p] += V[l] * S[d - 1][p - l];
    return S[depth][positions];
}

namespace {

struct CarlsonSearch {
    const CarlsonParams& p;
    std::vector<std::vector<Word>> by_len;
    std::vector<std::vector<std::uint64_t>> space;  // space[d][positions]

    struct State {
        WordSeq t, u;
        std::vector<std::uint32_t> starts;  // 1-based stream position of each u_i
        std::size_t used = 0;
        unsigned c1 = 0, c2 = 0;
        std::vector<CertEntry> cert1, cert2;
        std::uint64_t covered = 0, nodes = 0;
    };

    CarlsonSearch(const CarlsonParams& params) : p(params) {
        const std::size_t P = p.w.horizon();
        by_len.resize(P + 1);
        for (std::size_t l = 1; l <= P; ++l) by_len[l] = wxi::words_of_length(p.alphabet, l, Side::Variable);
        space.assign(p.depth + 1, std::vector<std::uint64_t>(P + 1, 0));
        for (std::size_t d = 0; d <= p.depth; ++d)
            for (std::size_t q = 0; q <= P; ++q) space[d][q] = carlson_space(p.alphabet.size(), d, q);
    }

    Word apply(const Word& t, std::size_t offset) const {
        std::vector<Letter> out;
        for (std::size_t j = 0; j < t.size(); ++j)
            for (Letter x : p.w.at(offset + j).letters()) out.push_back(x == kVar ? t[j] : x);
        return Word(std::move(out));
    }

    // r.d indexes words of u; starts maps them to stream positions.
    bool member(const Reduction& r, const std::vector<std::uint32_t>& starts) const {
        if (r.words.empty()) return false;
        if (p.xi.is_zero()) return r.words.size() == 1;
        if (p.dmode == DMode::Absolute) return schreier::mem(p.xi, words::d_map(r.words), p.cfg);
        std::vector<std::uint32_t> d;
        for (auto i : r.d.elems()) d.push_back(starts[i - 1]);
        return schreier::mem(p.xi, FinSet(std::move(d)), p.cfg);
    }

    // Adds the colors of the reductions that cover all of s.u; false on a clash.
    bool absorb(State& s) const {
        const auto fr = words::finite_reductions(s.u, p.alphabet);
        auto pass = [&](const std::vector<Reduction>& pool, const SeqColor& chi, unsigned& c,
                        std::vector<CertEntry>& cert) {
            if (!chi) return true;
            for (const auto& r : pool) {
                if (!member(r, s.starts)) continue;
                const unsigned col = chi(r.words);
                if (c == 0) c = col;
                if (col != c) return false;
                cert.push_back({format(r.words, p.alphabet), col});
            }
            return true;
        };
        return pass(fr.rw, p.chi1, s.c1, s.cert1) && pass(fr.vrw, p.chi2, s.c2, s.cert2);
    }

    bool nonvacuous(const State& s) const { return (!p.chi1 || s.c1 != 0) && (!p.chi2 || s.c2 != 0); }

    // Tries t_{j+1} = word; returns true when a witness was completed below.
    bool descend(State& s, const Word& word) {
        if (++s.nodes > p.node_budget) fail(ErrorCode::Budget, "carlson search node budget exceeded");
        const unsigned c1 = s.c1, c2 = s.c2;
        const std::size_t c1n = s.cert1.size(), c2n = s.cert2.size();
        s.t.push_back(word);
        s.u.push_back(apply(word, s.used));
        s.starts.push_back(static_cast<std::uint32_t>(s.used + 1));
        s.used += word.size();
        const std::size_t remaining = p.w.horizon() - s.used;
        const std::size_t depth_left = p.depth - s.t.size();

        bool done = false;
        if (!absorb(s)) {
            s.covered += space[depth_left][remaining];
        } else if (depth_left == 0) {
            if (nonvacuous(s)) done = true;
            else s.covered += 1;
        } else {
            done = expand(s);
        }
        if (done) return true;
        s.used -= word.size();
        s.starts.pop_back();
        s.u.pop_back();
        s.t.pop_back();
        s.c1 = c1;
        s.c2 = c2;
        s.cert1.resize(c1n);
        s.cert2.resize(c2n);
        return false;
    }

    bool expand(State& s) {
        const std::size_t remaining = p.w.horizon() - s.used;
        for (std::size_t l = 1; l <= remaining; ++l)
            for (const auto& w : by_len[l])
                if (descend(s, w)) return true;
        return false;
    }
};

}  // namespace

CarlsonResult carlson_search(const CarlsonParams& p) {
    if (p.depth == 0) fail(ErrorCode::Invalid, "depth must be positive");
    if (!p.chi1 && !p.chi2) fail(ErrorCode::Invalid, "at least one coloring is required");
    CarlsonSearch cs(p);
    CarlsonResult res;
    const std::size_t P = p.w.horizon();
    res.space = cs.space[p.depth][P];

    std::vector<Word> roots;
    for (std::size_t l = 1; l <= P; ++l)
        for (const auto& w : cs.by_len[l]) roots.push_back(w);

    std::vector<CarlsonSearch::State> states(roots.size());
    std::vector<char> found(roots.size(), 0);
    auto run_root = [&](std::size_t i) { found[i] = cs.descend(states[i], roots[i]); };

    std::size_t winner = roots.size();
    if (p.threads <= 1) {
        for (std::size_t i = 0; i < roots.size(); ++i) {
            run_root(i);
            if (found[i]) {
                winner = i;
                break;
            }
        }
    } else {
        // Roots are searched independently, the least successful root wins.
        parallel_for(roots.size(), p.threads, run_root);
        for (std::size_t i = 0; i < roots.size(); ++i)
            if (found[i]) {
                winner = i;
                break;
            }
    }
    const std::size_t counted = winner == roots.size() ? roots.size() : winner + 1;
    for (std::size_t i = 0; i < counted; ++i) {
        res.covered += states[i].covered;
        res.nodes += states[i].nodes;
    }
    if (winner < roots.size()) {
        auto& s = states[winner];
        res.found = true;
        res.t = s.t;
        res.u = s.u;
        res.color1 = s.c1;
        res.color2 = s.c2;
        res.cert_constant = std::move(s.cert1);
        res.cert_variable = std::move(s.cert2);
    } else if (res.covered != res.space) {
        fail(ErrorCode::Invalid, "carlson search coverage " + std::to_string(res.covered) + " != space " +
                                     std::to_string(res.space));
    }
    return res;
}

CarlsonResult carlson_witness_search(const Ordinal& xi, const Alphabet& a, const Coloring& chi1, const Coloring& chi2,
                                     const VarWordStream& w, std::size_t depth, const SchreierConfig& cfg,
                                     unsigned threads) {
    CarlsonParams p;
    p.xi = xi;
    p.alphabet = a;
    p.w = w;
    p.depth = depth;
    p.dmode = DMode::Relative;
    p.chi1 = [chi1, a](const WordSeq& s) { return color_of(chi1, s, a); };
    p.chi2 = [chi2, a](const WordSeq& s) { return color_of(chi2, s, a); };
    p.cfg = cfg;
    p.threads = threads;
    return carlson_search(p);
}

CarlsonResult subspace_search(const Ordinal& xi, const Alphabet& a, const Coloring& chi, const VarWordStream& base,
                              std::size_t depth, const SchreierConfig& cfg, unsigned threads) {
    CarlsonParams p;
    p.xi = xi;
    p.alphabet = a;
    p.w = base;
    p.depth = depth;
    p.dmode = DMode::Absolute;
    p.chi2 = [chi, a](const WordSeq& s) { return color_of_points(chi, wxi::subspace_points(s, a), a); };
    p.cfg = cfg;
    p.threads = threads;
    return carlson_search(p);
}

// ------------------------------------------------------------------ Hales-Jewett

Alphabet first_letters(std::size_t k) {
    if (k == 0 || k > 26) fail(ErrorCode::Invalid, "alphabet size must be in [1, 26]");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < k; ++i) names.emplace_back(1, static_cast<char>('a' + i));
    return Alphabet(std::move(names));
}

namespace {

// Sequences of n variable words with total length M: length compositions in
// lexicographic order, then words in canonical order.
std::vector<WordSeq> hj_candidates(std::size_t M, std::size_t n, const Alphabet& a) {
    std::vector<std::vector<Word>> by_len(M + 1);
    for (std::size_t l = 1; l <= M; ++l) by_len[l] = wxi::words_of_length(a, l, Side::Variable);
    std::vector<WordSeq> out;
    WordSeq acc;
    auto rec = [&](auto&& self, std::size_t left) -> void {
        if (acc.size() == n) {
            if (left == 0) out.push_back(acc);
            return;
        }
        const std::size_t slots = n - acc.size();
        for (std::size_t l = 1; l + (slots - 1) <= left; ++l) {
            for (const auto& w : by_len[l]) {
                acc.push_back(w);
                self(self, left - l);
                acc.pop_back();
            }
        }
    };
    rec(rec, M);
    return out;
}

std::vector<WordSeq> hj_domain(std::size_t M, const Ordinal& xi, const Alphabet& a, const SchreierConfig& cfg) {
    std::vector<WordSeq> out;
    for (auto& s : wxi::enumerate(xi, a, Side::Constant, M, cfg))
        if (total_letters(s) == M) out.push_back(std::move(s));
    return out;
}

std::vector<WordSeq> hj_members(const WordSeq& w, const Ordinal& xi, const Alphabet& a, const SchreierConfig& cfg) {
    std::vector<WordSeq> out;
    WxiQuery q{xi, a, Side::Constant, std::nullopt, cfg};
    for (auto& r : words::finite_reductions(w, a).rw)
        if (!r.words.empty() && wxi::in_wxi(q, r.words)) out.push_back(std::move(r.words));
    return out;
}

}  // namespace

HjReport hales_jewett_M(unsigned r, std::size_t n, std::size_t k, const Ordinal& xi, std::size_t M_max,
                        const SchreierConfig& cfg, unsigned threads, std::uint64_t budget, bool scan_all) {
    if (r == 0 || n == 0) fail(ErrorCode::Invalid, "r and n must be positive");
    const Alphabet a = first_letters(k);
    HjReport rep;
    for (std::size_t M = n; M <= M_max; ++M) {
        rep.frontier = M;
        const auto domain = hj_domain(M, xi, a, cfg);
        std::map<WordSeq, std::uint32_t> index;
        std::vector<std::string> names;
        for (std::uint32_t i = 0; i < domain.size(); ++i) {
            index.emplace(domain[i], i);
            names.push_back(format(domain[i], a));
        }
        std::vector<std::vector<std::uint32_t>> candidates;
        const auto cands = hj_candidates(M, n, a);
        for (const auto& w : cands) {
            std::vector<std::uint32_t> idx;
            for (const auto& s : hj_members(w, xi, a, cfg)) idx.push_back(index.at(s));
            if (!idx.empty()) candidates.push_back(std::move(idx));
        }
        HjLevel lvl;
        lvl.M = M;
        lvl.domain = domain.size();
        lvl.candidates = cands.size();
        try {
            lvl.exhaust = exhaust_colorings(std::move(names), r, candidates, threads, budget);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::Budget) throw;
            rep.budget_exceeded = true;
            break;
        }
        lvl.works = lvl.exhaust.every_coloring_has_witness();
        rep.levels.push_back(std::move(lvl));
        if (rep.levels.back().works && !rep.M) {
            rep.M = M;
            if (!scan_all) break;
        }
    }
    return rep;
}

HjWitness hj_line_search(const Coloring& chi, std::size_t M, std::size_t n, const Ordinal& xi, const Alphabet& a,
                         const SchreierConfig& cfg) {
    if (n == 0 || M < n) fail(ErrorCode::Invalid, "need 1 <= n <= M");
    HjWitness res;
    for (const auto& w : hj_candidates(M, n, a)) {
        ++res.candidates_checked;
        const auto members = hj_members(w, xi, a, cfg);
        if (members.empty()) continue;
        const unsigned c0 = color_of(chi, members[0], a);
        bool mono = true;
        for (const auto& s : members)
            if (color_of(chi, s, a) != c0) {
                mono = false;
                break;
            }
        if (!mono) continue;
        res.found = true;
        res.w = w;
        res.color = c0;
        for (const auto& s : members) res.certificate.push_back({format(s, a), c0});
        return res;
    }
    return res;
}

// ------------------------------------------------------------------ fixtures

NwReport nw_fixture_check(const NwParams& p) {
    NwReport rep;
    std::function<bool(const WordSeq&)> in_g;
    if (p.fixture == "1") in_g = fixtures::nw_one_member;
    else if (p.fixture == "2") in_g = fixtures::nw_two_member;
    else if (p.fixture == "empty") {
        rep.horn = "vacuous";
        rep.profile_note = "no generators";
        return rep;
    } else fail(ErrorCode::Invalid, "unknown fixture '" + p.fixture + "'");

    const Alphabet& a = p.universe.alphabet;
    WxiQuery q{p.xi_probe, a, Side::Constant, std::nullopt, p.cfg};
    for (const auto& r : words::stream_reductions(p.stream, a, Side::Constant, p.positions, p.positions)) {
        if (r.words.empty() || !wxi::in_wxi(q, r.words)) continue;
        ++rep.probed;
        if (in_g(r.words)) {
            ++rep.inside;
            if (!rep.first_inside) rep.first_inside = r.words;
        } else {
            ++rep.outside;
            if (!rep.first_outside) rep.first_outside = r.words;
        }
    }
    rep.horn = rep.probed == 0 ? "vacuous" : rep.outside == 0 ? "inside" : rep.inside == 0 ? "complement" : "mixed";

    const Family g = families::materialize(p.universe, Side::Constant, in_g);
    rep.family_size = g.size();
    const auto closed = families::pointwise_closed_trunc(g, p.stream, p.horizon, families::ClosedMode::Hereditary);
    rep.open_at_horizon = closed.open;
    rep.chain = closed.chain;

    try {
        auto st = cb::start(g, p.stream);
        ChainOracle o;
        o.H = p.horizon;
        for (std::size_t lvl = 0; lvl < p.levels; ++lvl) {
            st = cb::derivative(g, st, p.stream, o);
            rep.profile.push_back(st.survivors.size());
            if (st.survivors.empty()) break;
        }
    } catch (const Error& e) {
        if (e.code() != ErrorCode::Undecided) throw;
        rep.profile_note = e.what();
    }
    return rep;
}

}  // namespace verify
}  // namespace srw
