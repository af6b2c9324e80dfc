#include "srw/families.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "srw/error.hpp"

namespace srw {
namespace families {

namespace {

void require_side(const Family& f, Side side, const char* what) {
    if (f.side != side) fail(ErrorCode::Invalid, std::string(what) + " expects a " + to_string(side) + "-side family");
}

Family like(const Family& f, Side side) {
    Family out;
    out.universe = f.universe;
    out.side = side;
    return out;
}

}  // namespace

std::vector<WordSeq> universe_sequences(const Universe& u, Side side, std::size_t budget) {
    std::vector<std::vector<Word>> by_len(u.max_letters + 1);
    for (std::size_t len = 1; len <= u.max_letters; ++len) by_len[len] = wxi::words_of_length(u.alphabet, len, side);
    std::vector<WordSeq> out;
    WordSeq acc;
    auto rec = [&](auto&& self, std::size_t letters) -> void {
        if (out.size() >= budget) fail(ErrorCode::Budget, "universe enumeration budget exceeded");
        out.push_back(acc);
        if (acc.size() >= u.max_words) return;
        for (std::size_t len = 1; letters + len <= u.max_letters; ++len) {
            for (const auto& w : by_len[len]) {
                acc.push_back(w);
                self(self, letters + len);
                acc.pop_back();
            }
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

Family materialize(const Universe& u, Side side, const std::function<bool(const WordSeq&)>& pred) {
    Family f;
    f.universe = u;
    f.side = side;
    for (auto& s : universe_sequences(u, side))
        if (pred(s)) f.members.insert(std::move(s));
    return f;
}

Family star_closure(const Family& f) {
    Family out = f;
    for (const auto& m : f.members)
        for (std::size_t j = 0; j < m.size(); ++j) out.members.insert(WordSeq(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(j)));
    out.members.insert(WordSeq{});
    return out;
}

bool is_tree(const Family& f) { return star_closure(f).members == f.members; }

bool is_thin(const Family& f) {
    for (const auto& m : f.members)
        for (std::size_t j = 0; j < m.size(); ++j)
            if (f.contains(WordSeq(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(j)))) return false;
    return true;
}

Family substar(const Family& f) {
    require_side(f, Side::Variable, "substar");
    Family out = like(f, Side::Variable);
    out.members.insert(WordSeq{});
    for (const auto& s : star_closure(f).members) {
        if (s.empty()) continue;
        for (auto& r : words::finite_reductions(s, f.universe.alphabet).vrw) out.members.insert(std::move(r.words));
    }
    return out;
}

Family f_of_g(const Family& g) {
    require_side(g, Side::Constant, "f_of_g");
    Family out = like(g, Side::Variable);
    const Alphabet& a = g.universe.alphabet;
    const Letter first = 0;
    if (g.contains(WordSeq{})) out.members.insert(WordSeq{});

    for (const auto& s : g.members) {
        if (s.empty()) continue;
        // t with t(first, ..., first) = s: variables sit on positions holding `first`.
        std::vector<std::vector<Word>> options(s.size());
        bool feasible = true;
        for (std::size_t i = 0; i < s.size() && feasible; ++i) {
            std::vector<std::size_t> spots;
            for (std::size_t j = 0; j < s[i].size(); ++j)
                if (s[i][j] == first) spots.push_back(j);
            if (spots.empty()) feasible = false;
            for (std::size_t mask = 1; mask < (std::size_t{1} << spots.size()); ++mask) {
                std::vector<Letter> w = s[i].letters();
                for (std::size_t b = 0; b < spots.size(); ++b)
                    if (mask >> b & 1) w[spots[b]] = kVar;
                options[i].emplace_back(std::move(w));
            }
        }
        if (!feasible) continue;
        WordSeq t(s.size());
        auto rec = [&](auto&& self, std::size_t i) -> void {
            if (i == s.size()) {
                const auto sp = wxi::span(t, a);
                if (std::all_of(sp.begin(), sp.end(), [&](const WordSeq& x) { return g.contains(x); })) out.members.insert(t);
                return;
            }
            for (const auto& w : options[i]) {
                t[i] = w;
                self(self, i + 1);
            }
        };
        rec(rec, 0);
    }
    return out;
}

Family g_substar(const Family& g) {
    const Family fs = substar(f_of_g(g));
    Family out = like(g, Side::Constant);
    for (const auto& t : fs.members)
        for (auto& s : wxi::span(t, g.universe.alphabet)) out.members.insert(std::move(s));
    return out;
}

bool is_hereditary(const Family& f) {
    return f.side == Side::Variable ? substar(f).members == f.members : g_substar(f).members == f.members;
}

Family hereditary_kernel(const Family& f) {
    if (f.side == Side::Constant) {
        const Family kf = hereditary_kernel(f_of_g(f));
        Family out = like(f, Side::Constant);
        out.members.insert(WordSeq{});
        for (const auto& t : kf.members)
            for (auto& s : wxi::span(t, f.universe.alphabet)) out.members.insert(std::move(s));
        return out;
    }

    std::map<WordSeq, bool> closed;  // VRW(t1) lies inside F u {empty}
    auto reductions_inside = [&](const WordSeq& t1) {
        if (auto it = closed.find(t1); it != closed.end()) return it->second;
        bool ok = true;
        for (const auto& r : words::finite_reductions(t1, f.universe.alphabet).vrw) {
            if (!r.words.empty() && !f.contains(r.words)) {
                ok = false;
                break;
            }
        }
        closed.emplace(t1, ok);
        return ok;
    };

    Family out = like(f, Side::Variable);
    out.members.insert(WordSeq{});
    for (const auto& t : f.members) {
        if (t.empty()) continue;
        bool keep = true;
        for (std::size_t j = 1; j <= t.size() && keep; ++j)
            keep = reductions_inside(WordSeq(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(j)));
        if (keep) out.members.insert(t);
    }
    return out;
}

// ---------------------------------------------------------------- closedness at a horizon

namespace {

struct ChainSearch {
    const Family& f;
    const VarWordStream& w;
    std::size_t H;
    ClosedMode mode;
    std::vector<Letter> symbols;
    WordSeq acc;

    bool accept(const WordSeq& cand) const {
        if (mode == ClosedMode::Tree) return f.contains(cand);
        const auto fr = words::finite_reductions(cand, f.universe.alphabet);
        const auto& pool = f.side == Side::Constant ? fr.rw : fr.vrw;
        return std::all_of(pool.begin(), pool.end(), [&](const Reduction& r) { return r.words.empty() || f.contains(r.words); });
    }

    // Build one more block starting at stream position pos.
    bool extend(std::size_t pos) {
        if (acc.size() == H) return true;
        std::vector<Letter> word;
        return block(pos, pos, word, false);
    }

    bool block(std::size_t pos, std::size_t start, std::vector<Letter>& word, bool has_var) {
        const bool need_var = mode == ClosedMode::Hereditary || f.side == Side::Variable;
        if (pos > start && (!need_var || has_var)) {
            acc.emplace_back(word);
            const bool ok = accept(acc) && extend(pos);
            if (ok) return true;
            acc.pop_back();
        }
        if (pos >= w.horizon() || word.size() >= f.universe.max_letters) return false;
        const Word& src = w.at(pos);
        const std::size_t mark = word.size();
        std::vector<Letter> subs = symbols;
        if (need_var) subs.push_back(kVar);
        for (Letter l : subs) {
            for (Letter x : src.letters()) word.push_back(x == kVar ? l : x);
            if (block(pos + 1, start, word, has_var || l == kVar)) return true;
            word.resize(mark);
        }
        return false;
    }
};

}  // namespace

ClosedReport pointwise_closed_trunc(const Family& f, const VarWordStream& w, std::size_t H, ClosedMode mode) {
    if (H == 0) fail(ErrorCode::Invalid, "horizon must be positive");
    ClosedReport rep;
    rep.horizon = H;
    ChainSearch cs{f, w, H, mode, f.universe.alphabet.letters(false), {}};
    if (cs.extend(0)) {
        rep.open = true;
        rep.chain = cs.acc;
    }
    return rep;
}

DichotomyReport tree_dichotomy_check(const Family& g, const Ordinal& xi, const VarWordStream& u, std::size_t positions,
                                     const SchreierConfig& cfg) {
    if (!is_tree(g)) fail(ErrorCode::Invalid, "tree dichotomy needs a tree");
    DichotomyReport rep;
    rep.disjoint = true;
    rep.inside_star_minus = true;
    WxiQuery q{xi, g.universe.alphabet, g.side, std::nullopt, cfg};
    for (const auto& r : words::stream_reductions(u, g.universe.alphabet, g.side, positions, positions)) {
        if (!g.contains(r.words)) continue;
        if (rep.disjoint && !r.words.empty() && wxi::in_wxi(q, r.words)) {
            rep.disjoint = false;
            rep.disjoint_failure = r.words;
        }
        if (rep.inside_star_minus && !wxi::in_star_minus(q, r.words)) {
            rep.inside_star_minus = false;
            rep.star_failure = r.words;
        }
    }
    return rep;
}

Family random_tree(const Universe& u, Side side, std::uint64_t seed, double density) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution pick(density);
    Family f;
    f.universe = u;
    f.side = side;
    for (auto& s : universe_sequences(u, side))
        if (pick(rng)) f.members.insert(std::move(s));
    return star_closure(f);
}

}  // namespace families

namespace fixtures {

namespace {

bool nw_one_d(const FinSet& d) { return d.size() <= 2 * static_cast<std::size_t>(d.min()) + 1; }

bool nw_two_d(const FinSet& d) {
    for (std::size_t k = 1; 2 * k <= d.min(); ++k) {
        const bool exact = 2 * k == d.min();
        if (exact ? d.size() <= k : d.size() + 1 <= k) return true;
    }
    return false;
}

}  // namespace

bool nw_one_member(const WordSeq& s) {
    if (s.size() <= 1) return true;
    return nw_one_d(words::d_map(s));
}

bool nw_two_member(const WordSeq& s) {
    if (s.size() <= 1) return true;
    return nw_two_d(words::d_map(s));
}

bool nw_one_generator(const WordSeq& t) {
    if (t.size() < 2) return false;
    const std::size_t k = words::d_map(t).min();
    return t.size() == 2 * k + 2;
}

bool nw_two_generator(const WordSeq& t) {
    if (t.size() < 2) return false;
    const std::size_t m = words::d_map(t).min();
    return m % 2 == 0 && t.size() == m / 2 + 1;
}

bool wk_closure_member(const WordSeq& s, std::size_t k) { return s.size() <= k + 1; }

}  // namespace fixtures
}  // namespace srw
