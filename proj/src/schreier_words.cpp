#include "srw/schreier_words.hpp"

#include <algorithm>

#include "srw/error.hpp"

namespace srw::wxi {

namespace {

void check_side(const WordSeq& u, Side side) {
    if (side == Side::Constant && !all_constant(u)) fail(ErrorCode::Invalid, "constant side expects constant words");
    if (side == Side::Variable && !all_variable(u)) fail(ErrorCode::Invalid, "variable side expects variable words");
}

}  // namespace

FinSet complexity(const WxiQuery& q, const WordSeq& u) {
    if (u.empty()) fail(ErrorCode::Invalid, "complexity is undefined on the empty sequence");
    if (!q.base) return words::d_map(u);
    auto pre = words::find_reduction(*q.base, u, q.side);
    if (!pre) fail(ErrorCode::Invalid, "sequence is not a reduction of the base stream");
    return words::d_map(pre->t);
}

bool in_wxi(const WxiQuery& q, const WordSeq& u) {
    check_side(u, q.side);
    if (u.empty()) return false;
    const FinSet d = complexity(q, u);
    if (q.xi.is_zero()) return u.size() == 1;
    return schreier::mem(q.xi, d, q.cfg);
}

bool in_star_minus(const WxiQuery& q, const WordSeq& u) {
    check_side(u, q.side);
    if (u.empty()) return true;
    const FinSet d = complexity(q, u);
    return !schreier::segment_length(q.xi, d.elems(), q.cfg).has_value();
}

CanonicalRep canonical_rep(const WxiQuery& q, const WordSeq& s) {
    if (q.xi.is_zero()) fail(ErrorCode::Invalid, "canonical representation needs xi >= 1");
    check_side(s, q.side);
    CanonicalRep rep;
    if (s.empty()) {
        rep.residual = true;
        return rep;
    }
    const FinSet d = complexity(q, s);
    std::span<const std::uint32_t> rest(d.elems());
    std::size_t m = 1;  // words covered so far
    for (;;) {
        auto k = schreier::segment_length(q.xi, rest, q.cfg);
        if (!k) {
            rep.residual = true;
            break;
        }
        m += *k;
        rep.boundaries.push_back(m);
        rep.block_d.emplace_back(std::vector<std::uint32_t>(rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(*k)));
        rest = rest.subspan(*k);
        if (rest.empty()) break;
    }
    return rep;
}

std::vector<Word> words_of_length(const Alphabet& a, std::size_t len, Side side) {
    const auto letters = a.letters(side == Side::Variable);
    std::vector<Word> out;
    std::vector<std::size_t> idx(len, 0);
    for (;;) {
        std::vector<Letter> w(len);
        for (std::size_t i = 0; i < len; ++i) w[i] = letters[idx[len - 1 - i]];
        Word word(std::move(w));
        if (side == Side::Constant || word.is_variable()) out.push_back(std::move(word));
        std::size_t i = 0;
        while (i < len && ++idx[i] == letters.size()) idx[i++] = 0;
        if (i == len) break;
    }
    return out;
}

std::vector<WordSeq> enumerate(const Ordinal& xi, const Alphabet& a, Side side, std::size_t letter_budget,
                               const SchreierConfig& cfg, std::size_t budget) {
    std::vector<std::vector<Word>> by_len(letter_budget + 1);
    for (std::size_t len = 1; len <= letter_budget; ++len) by_len[len] = words_of_length(a, len, side);

    std::vector<WordSeq> out;
    auto fill = [&](const std::vector<std::size_t>& lengths) {
        WordSeq acc;
        auto rec = [&](auto&& self, std::size_t i) -> void {
            if (i == lengths.size()) {
                if (out.size() >= budget) fail(ErrorCode::Budget, "W^xi enumeration budget exceeded");
                out.push_back(acc);
                return;
            }
            for (const auto& w : by_len[lengths[i]]) {
                acc.push_back(w);
                self(self, i + 1);
                acc.pop_back();
            }
        };
        rec(rec, 0);
    };

    if (xi.is_zero()) {
        for (std::size_t len = 1; len <= letter_budget; ++len) fill({len});
    } else if (letter_budget >= 2) {
        const auto dsets = schreier::enumerate_from(xi, 2, static_cast<std::uint32_t>(letter_budget), cfg);
        for (const auto& d : dsets) {
            if (d.empty()) continue;
            std::vector<std::size_t> lengths;
            std::uint32_t prev = 1;
            for (auto k : d.elems()) {
                lengths.push_back(k - prev);
                prev = k;
            }
            for (std::size_t total = d.max(); total <= letter_budget; ++total) {
                lengths.push_back(total - d.max() + 1);
                fill(lengths);
                lengths.pop_back();
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Reduction> enumerate_relative(const Ordinal& xi, const VarWordStream& w, const Alphabet& a, Side side,
                                          std::size_t positions, const SchreierConfig& cfg) {
    std::vector<Reduction> out;
    for (auto& r : words::stream_reductions(w, a, side, positions, positions)) {
        if (r.words.empty()) continue;
        const bool member = xi.is_zero() ? r.words.size() == 1 : schreier::mem(xi, r.d, cfg);
        if (member) out.push_back(std::move(r));
    }
    return out;
}

TransferReport transfer_check(const Ordinal& xi, const Word& s, const Alphabet& a, std::size_t letter_budget,
                              const SchreierConfig& cfg) {
    if (s.empty()) fail(ErrorCode::Invalid, "transfer check needs a non-empty word");
    const Side side = s.is_variable() ? Side::Variable : Side::Constant;
    TransferReport rep;
    rep.xi_n = schreier::transfer_index(xi, s.size() + 1, cfg);

    const auto full = enumerate(xi, a, side, letter_budget, cfg);
    const std::set<WordSeq> lhs = words::family_shift(std::set<WordSeq>(full.begin(), full.end()), s, side);

    std::set<WordSeq> rhs;
    for (auto& m : enumerate(rep.xi_n, a, side, letter_budget, cfg))
        if (words::is_prefix(s, m[0], side)) rhs.insert(std::move(m));

    rep.lhs_size = lhs.size();
    rep.rhs_size = rhs.size();
    rep.equal = lhs == rhs;
    if (!rep.equal) {
        std::vector<WordSeq> diff;
        std::set_symmetric_difference(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(), std::back_inserter(diff));
        rep.counterexample = diff.front();
    }
    return rep;
}

std::set<Word> subspace_points(const WordSeq& generator, const Alphabet& a) {
    return words::reduced_words(generator, a).rw;
}

bool is_xi_subspace(const WordSeq& generator, const Ordinal& xi, const Alphabet& a,
                    const std::optional<VarWordStream>& base, const SchreierConfig& cfg) {
    if (generator.empty() || !all_variable(generator)) return false;
    WxiQuery q{xi, a, Side::Variable, base, cfg};
    return in_wxi(q, generator);
}

std::set<WordSeq> span(const WordSeq& t, const Alphabet& a) {
    if (!all_variable(t)) fail(ErrorCode::Invalid, "span needs variable words");
    std::set<WordSeq> out;
    const auto symbols = a.letters(false);
    std::vector<std::size_t> idx(t.size(), 0);
    for (;;) {
        WordSeq inst;
        for (std::size_t i = 0; i < t.size(); ++i) inst.push_back(words::substitute(t[i], symbols[idx[i]]));
        out.insert(std::move(inst));
        std::size_t i = 0;
        while (i < idx.size() && ++idx[i] == symbols.size()) idx[i++] = 0;
        if (i == idx.size()) break;
    }
    return out;
}

ShadowReport shadow_equivalence(const std::set<WordSeq>& g, const Ordinal& xi, const VarWordStream& u,
                                const Alphabet& a, std::size_t positions, const SchreierConfig& cfg) {
    ShadowReport rep;
    rep.containment = true;
    for (const auto& r : words::stream_reductions(u, a, Side::Constant, positions, positions)) {
        if (r.words.empty()) continue;
        WxiQuery q{xi, a, Side::Constant, std::nullopt, cfg};
        if (in_wxi(q, r.words) && !g.count(r.words)) {
            rep.containment = false;
            rep.containment_failure = r.words;
            break;
        }
    }
    rep.initial_spans = true;
    for (const auto& r : words::stream_reductions(u, a, Side::Variable, positions, positions)) {
        if (r.words.empty()) continue;
        WxiQuery q{xi, a, Side::Variable, std::nullopt, cfg};
        if (!in_wxi(q, r.words)) continue;
        for (const auto& inst : span(r.words, a)) {
            if (!g.count(inst)) {
                rep.initial_spans = false;
                rep.span_failure = r.words;
                break;
            }
        }
        if (!rep.initial_spans) break;
    }
    return rep;
}

}  // namespace srw::wxi
