#include "srw/cbindex.hpp"

#include <algorithm>

#include "srw/error.hpp"
#include "srw/parallel.hpp"

namespace srw {

ChainOracle parse_oracle(std::string_view text) {
    ChainOracle o;
    if (text.rfind("exact:", 0) == 0) {
        o.mode = ChainOracle::Mode::Exact;
        o.rule = std::string(text.substr(6));
        if (o.rule != "length-bound") fail(ErrorCode::Invalid, "unknown exact rule '" + o.rule + "'");
        return o;
    }
    if (text.rfind("horizon:", 0) == 0) {
        const std::string num(text.substr(8));
        if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
            fail(ErrorCode::Invalid, "bad horizon '" + num + "'");
        o.mode = ChainOracle::Mode::Horizon;
        o.H = std::stoull(num);
        if (o.H < 2) fail(ErrorCode::Invalid, "horizon oracle needs H >= 2");
        return o;
    }
    fail(ErrorCode::Invalid, "oracle must be exact:<rule> or horizon:<H>");
}

std::string describe(const ChainOracle& o) {
    return o.mode == ChainOracle::Mode::Exact ? "exact:" + o.rule : "horizon:" + std::to_string(o.H);
}

namespace cb {

namespace {

// Is there an H-element chain c*x_1, c*x_1*x_2, ... inside the escape set,
// one stream entry per step? Each partial extension y must give (s, y) outside S.
bool escape_chain(const std::set<WordSeq>& S, const WordSeq& s, std::size_t p, const VarWordStream& u, std::size_t H,
                  const std::vector<Letter>& subs) {
    WordSeq probe = s;
    probe.emplace_back();
    std::vector<Letter> y;
    auto rec = [&](auto&& self, std::size_t depth) -> bool {
        if (depth == H) return true;
        const Word& src = u.at(p + depth);
        const std::size_t mark = y.size();
        for (Letter l : subs) {
            for (Letter x : src.letters()) y.push_back(x == kVar ? l : x);
            probe.back() = Word(y);
            if (!S.count(probe) && self(self, depth + 1)) return true;
            y.resize(mark);
        }
        return false;
    };
    return rec(rec, 0);
}

struct LengthRule {
    std::vector<WordSeq> universe;  // reductions of u within the family's letter budget
};

LengthRule prepare_length_rule(const Family& f, const VarWordStream& u) {
    const std::size_t L = f.universe.max_letters;
    if (u.horizon() < L)
        fail(ErrorCode::Undecided, "exact length rule needs the stream horizon to cover the letter budget");
    LengthRule lr;
    for (auto& r : words::stream_reductions(u, f.universe.alphabet, f.side, L, L))
        if (total_letters(r.words) <= L && r.words.size() <= f.universe.max_words) lr.universe.push_back(std::move(r.words));
    std::sort(lr.universe.begin(), lr.universe.end());
    lr.universe.erase(std::unique(lr.universe.begin(), lr.universe.end()), lr.universe.end());
    return lr;
}

std::set<WordSeq> apply_length_rule(const LengthRule& lr, const std::set<WordSeq>& S) {
    if (S.empty()) return {};
    std::size_t m = 0;
    for (const auto& s : S) m = std::max(m, s.size());
    std::set<WordSeq> complete;
    for (const auto& r : lr.universe)
        if (r.size() <= m) complete.insert(r);
    if (complete != S)
        fail(ErrorCode::Undecided, "length-bound rule does not apply: survivors are not all reductions with at most " +
                                       std::to_string(m) + " words");
    std::set<WordSeq> out;
    for (const auto& s : S)
        if (s.size() < m) out.insert(s);
    return out;
}

DerivativeState horizon_step(const Family& f, const DerivativeState& st, const VarWordStream& u, std::size_t H,
                             unsigned threads) {
    const std::vector<WordSeq> items(st.survivors.begin(), st.survivors.end());
    std::vector<char> keep(items.size(), 0);
    std::vector<Letter> subs = f.side == Side::Constant ? f.universe.alphabet.letters(false) : std::vector<Letter>{kVar};
    parallel_for(items.size(), threads, [&](std::size_t i) {
        auto pre = words::find_reduction(u, items[i], f.side);
        if (!pre) fail(ErrorCode::Invalid, "survivor is not a reduction of the stream");
        if (pre->consumed + H > u.horizon())
            fail(ErrorCode::Undecided, "window of " + std::to_string(H) + " entries after position " +
                                           std::to_string(pre->consumed) + " exceeds stream horizon " +
                                           std::to_string(u.horizon()));
        keep[i] = !escape_chain(st.survivors, items[i], pre->consumed, u, H, subs);
    });
    DerivativeState next;
    next.level = st.level + 1;
    for (std::size_t i = 0; i < items.size(); ++i)
        if (keep[i]) next.survivors.insert(items[i]);
    return next;
}

}  // namespace

DerivativeState start(const Family& f, const VarWordStream& u) {
    DerivativeState st;
    for (const auto& s : f.members)
        if (s.empty() || words::find_reduction(u, s, f.side)) st.survivors.insert(s);
    return st;
}

DerivativeState derivative(const Family& f, const DerivativeState& st, const VarWordStream& u, const ChainOracle& o,
                           unsigned threads) {
    if (o.mode == ChainOracle::Mode::Horizon) return horizon_step(f, st, u, o.H, threads);
    DerivativeState next;
    next.level = st.level + 1;
    next.survivors = apply_length_rule(prepare_length_rule(f, u), st.survivors);
    return next;
}

SoReport so_index(const Family& f, const VarWordStream& u, const ChainOracle& o, std::size_t budget, unsigned threads) {
    SoReport rep;
    DerivativeState st = start(f, u);
    rep.initial_size = st.survivors.size();
    std::optional<LengthRule> lr;
    if (o.mode == ChainOracle::Mode::Exact) lr = prepare_length_rule(f, u);
    for (std::size_t pass = 1; pass <= budget; ++pass) {
        if (lr) {
            st.survivors = apply_length_rule(*lr, st.survivors);
            ++st.level;
        } else {
            st = horizon_step(f, st, u, o.H, threads);
        }
        rep.level_sizes.push_back(st.survivors.size());
        if (st.survivors.empty()) {
            rep.index = pass - 1;  // the first derivative is level 0
            return rep;
        }
    }
    rep.budget_exceeded = true;
    return rep;
}

MonotonicityReport monotonicity_check(const Family& f1, const Family& f2, const VarWordStream& u, const ChainOracle& ou,
                                      const VarWordStream& u1, const ChainOracle& ou1, std::size_t budget,
                                      unsigned threads) {
    if (!std::includes(f2.members.begin(), f2.members.end(), f1.members.begin(), f1.members.end()))
        fail(ErrorCode::Invalid, "monotonicity check needs f1 inside f2");
    if (!words::find_reduction(u, u1.prefix(), Side::Variable))
        fail(ErrorCode::Invalid, "monotonicity check needs u1 to be a variable reduction of u");
    auto value = [&](const Family& f, const VarWordStream& s, const ChainOracle& o) {
        auto r = so_index(f, s, o, budget, threads);
        if (!r.index) fail(ErrorCode::Budget, "derivative budget exhausted before the family emptied");
        return *r.index;
    };
    MonotonicityReport rep;
    rep.so_small = value(f1, u, ou);
    rep.so_large = value(f2, u, ou);
    rep.so_restricted = value(f2, u1, ou1);
    rep.inclusion_holds = rep.so_small <= rep.so_large;
    rep.restriction_holds = rep.so_restricted >= rep.so_large;
    return rep;
}

}  // namespace cb
}  // namespace srw
