#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "srw/error.hpp"
#include "srw/schreier_words.hpp"

using namespace srw;

namespace {

const Alphabet ab;
Word W(const char* s, const Alphabet& a = ab) { return parse_word(s, a); }
WordSeq Q(const char* s, const Alphabet& a = ab) { return parse_wordseq(s, a); }
std::string F(const Word& w, const Alphabet& a = ab) { return format(w, a); }
std::string F(const WordSeq& s, const Alphabet& a = ab) { return format(s, a); }
VarWordStream stream(const char* s, const Alphabet& a = ab) { return parse_stream(s, a); }

std::vector<std::string> strings(const WordSeq& s, const Alphabet& a = ab) {
    std::vector<std::string> out;
    for (const auto& w : s) out.push_back(format(w, a));
    return out;
}

// Counts covering reductions of w by brute force: every composition into
// blocks times every substitution, the empty sequence added by convention.
std::pair<std::size_t, std::size_t> count_reductions(const std::vector<std::string>& w, const std::string& letters) {
    const std::size_t n = w.size();
    std::set<std::vector<std::string>> rw, vrw;
    for (std::uint32_t cuts = 0; cuts < (1u << (n - 1)); ++cuts) {
        std::size_t subs = 1;
        for (std::size_t i = 0; i < n; ++i) subs *= letters.size() + 1;
        for (std::size_t c = 0; c < subs; ++c) {
            std::vector<std::string> u{""};
            bool constant = true, every_block_var = true, block_var = false;
            std::size_t x = c;
            for (std::size_t i = 0; i < n; ++i, x /= letters.size() + 1) {
                const std::size_t pick = x % (letters.size() + 1);
                const char alpha = pick == letters.size() ? '_' : letters[pick];
                if (i && (cuts >> (i - 1) & 1)) {
                    every_block_var = every_block_var && block_var;
                    block_var = false;
                    u.emplace_back();
                }
                const std::string piece = oracle::subst(w[i], alpha);
                if (piece.find('_') != std::string::npos) {
                    constant = false;
                    block_var = true;
                }
                u.back() += piece;
            }
            every_block_var = every_block_var && block_var;
            if (constant) rw.insert(u);
            if (every_block_var) vrw.insert(u);
        }
    }
    return {rw.size() + 1, vrw.size() + 1};
}

}  // namespace

TEST_CASE("concatenation and substitution") {
    CHECK(F(words::concat(W("ab"), W("ba"))) == "abba");
    CHECK(words::concat(W("_"), W("_")).is_variable());
    CHECK(F(words::concat(W("a"), W("_b"))) == "a_b");

    const Alphabet abc({"a", "b", "c"});
    CHECK(F(words::substitute(W("a_b_", abc), 2), abc) == "acbc");
    CHECK(words::substitute(W("ab_b"), kVar) == W("ab_b"));
    CHECK(F(words::substitute(W("_"), 0)) == "a");
}

TEST_CASE("prefix relation and difference") {
    CHECK(words::is_prefix(W("ab"), W("abba"), Side::Constant));
    CHECK(F(words::diff(W("abba"), W("ab"))) == "ba");
    CHECK(words::is_prefix(W("_a"), W("_a_b"), Side::Variable));
    CHECK_FALSE(words::is_prefix(W("_a"), W("_ab"), Side::Variable));
    CHECK_FALSE(words::is_prefix(W("ab"), W("ab"), Side::Constant));
    CHECK_FALSE(words::is_prefix(W("ba"), W("abba"), Side::Constant));
}

TEST_CASE("d-map") {
    CHECK(format(words::d_map(Q("(ab,ba,aab)"))) == "{3,5}");
    CHECK(words::d_map(Q("(ab)")).empty());
    CHECK(format(words::d_map(Q("(a,a,a)"))) == "{2,3}");
    for (const char* s : {"(a,bb,_a_,b)", "(__,a)", "(b)"}) {
        CHECK(words::d_map(Q(s)).elems() == oracle::d_map(strings(Q(s))));
    }
}

TEST_CASE("word parsing rejects foreign symbols") {
    CHECK_THROWS_AS(parse_word("abc", ab), ParseError);
    CHECK_THROWS_AS(parse_wordseq("ab,ba", ab), ParseError);
    CHECK(Q("()").empty());
    CHECK(F(Q(" ( a , _b ) ")) == "(a,_b)");
}

TEST_CASE("reducing a single word") {
    CHECK(F(words::reduce_word(VarWordStream::identity(6), W("ab"))) == "ab");
    const auto w = stream("list:(a_,_b,__)");
    CHECK(F(words::reduce_word(w, W("ab"))) == "aabb");
    CHECK(F(words::reduce_word(w, W("__"))) == "a__b");
    CHECK_THROWS_AS(words::reduce_word(w, W("abab")), Error);
}

TEST_CASE("reducing sequences") {
    CHECK(F(words::reduce_seq(VarWordStream::identity(6), Q("(_a,b_)")).words) == "(_a,b_)");
    const auto w = stream("list:(a_,_b,__)");
    CHECK(F(words::reduce_seq(w, Q("(ab)")).words) == "(aabb)");
    const auto two = words::reduce_seq(w, Q("(a,b)"));
    CHECK(F(two.words) == "(aa,bb)");
    CHECK(format(two.d) == "{2}");
    CHECK(two.consumed == 2);
}

TEST_CASE("reducing streams") {
    const auto t = stream("periodic:(_a,b_):6");
    CHECK(words::reduce_stream(VarWordStream::identity(12), t.prefix()).words == t.prefix());
    const auto w = stream("periodic:(a_,_b):8");
    CHECK(words::reduce_stream(w, VarWordStream::identity(8).prefix()).words == w.prefix());
    const auto r = words::reduce_stream(w, VarWordStream::periodic(Q("(__)"), 4).prefix());
    CHECK(F(r.words) == "(a__b,a__b,a__b,a__b)");
    // blocks beyond the horizon are dropped
    const auto cut = words::reduce_stream(stream("e:3"), Q("(__,__)"));
    CHECK(cut.words.size() == 1);
}

TEST_CASE("reduced words") {
    const auto r1 = words::reduced_words(Q("(_,_)"), ab);
    CHECK(r1.rw == std::set<Word>{W("aa"), W("ab"), W("ba"), W("bb")});
    CHECK(words::reduced_words(Q("(_)"), ab).vrw == std::set<Word>{W("_")});
    const auto r3 = words::reduced_words(Q("(a_,_)"), ab);
    CHECK(r3.rw == std::set<Word>{W("aaa"), W("aab"), W("aba"), W("abb")});
}

TEST_CASE("finite reductions") {
    const Alphabet a1({"a"});
    const auto fr = words::finite_reductions(Q("(_,_)", a1), a1);
    bool joined = false, split = false;
    for (const auto& r : fr.rw) {
        if (F(r.words, a1) == "(aa)") joined = r.d.empty();
        if (F(r.words, a1) == "(a,a)") split = format(r.d) == "{2}";
    }
    CHECK(joined);
    CHECK(split);

    const auto single = words::finite_reductions(Q("(_)", a1), a1);
    REQUIRE(single.vrw.size() == 2);
    CHECK(single.vrw[0].words.empty());
    CHECK(F(single.vrw[1].words, a1) == "(_)");

    for (const char* w : {"(a_,b_)", "(_,_)", "(_,a_,_)", "(_a_,_)"}) {
        const auto got = words::finite_reductions(Q(w), ab);
        const auto [rw, vrw] = count_reductions(strings(Q(w)), "ab");
        CAPTURE(w);
        CHECK(got.rw.size() == rw);
        CHECK(got.vrw.size() == vrw);
    }
    CHECK_THROWS_AS(words::finite_reductions(Q("(_,_,_,_,_,_)"), ab, 10), Error);
}

TEST_CASE("stream and family shifts") {
    const auto e = VarWordStream::identity(6);
    const auto minus = words::stream_minus(e, W("a"));
    CHECK(F(minus.at(0)) == "a_");
    CHECK(F(minus.at(1)) == "_");
    CHECK(minus.horizon() == 5);
    const auto drop = words::stream_drop(e, W("_"));
    CHECK(drop.horizon() == 5);
    CHECK(F(drop.at(0)) == "_");

    const std::set<WordSeq> g{Q("(ab)"), Q("(ab,b)")};
    const auto shifted = words::family_shift(g, W("ab"), Side::Constant);
    CHECK(shifted.count(WordSeq{}) == 1);
    CHECK(shifted.count(Q("(abb)")) == 1);
    CHECK(words::family_shift(g, W("ba"), Side::Constant).empty());
}

TEST_CASE("find_reduction recovers the preimage") {
    const auto w = stream("list:(a_,_b,__,b_)");
    const auto pre = words::find_reduction(w, Q("(aabb,_)"), Side::Constant);
    CHECK_FALSE(pre.has_value());  // mixed sequence is neither side
    const auto pv = words::find_reduction(w, Q("(a__b,__)"), Side::Variable);
    REQUIRE(pv.has_value());
    CHECK(F(pv->t) == "(__,_)");
    CHECK(pv->consumed == 3);
}

TEST_CASE("reduction coherence on random pairs") {
    std::mt19937_64 rng(7);
    const std::string letters = "ab_";
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Word> prefix;
        std::vector<std::string> raw;
        for (int i = 0; i < 10; ++i) {
            std::string s;
            const int len = 1 + static_cast<int>(rng() % 3);
            for (int j = 0; j < len; ++j) s += letters[rng() % 3];
            if (s.find('_') == std::string::npos) s[rng() % s.size()] = '_';
            raw.push_back(s);
            prefix.push_back(W(s.c_str()));
        }
        const VarWordStream w(prefix, "list");
        std::vector<std::string> t;
        std::size_t used = 0;
        const std::size_t blocks = 1 + rng() % 4;
        for (std::size_t b = 0; b < blocks && used < 10; ++b) {
            const std::size_t len = std::min<std::size_t>(1 + rng() % 3, 10 - used);
            std::string s;
            for (std::size_t j = 0; j < len; ++j) s += letters[rng() % 2];
            t.push_back(s);
            used += len;
        }
        WordSeq tseq;
        for (const auto& s : t) tseq.push_back(W(s.c_str()));
        const auto red = words::reduce_seq(w, tseq);
        CHECK(strings(red.words) == oracle::reduce(raw, t));
        CHECK(red.d.elems() == oracle::d_map(t));
    }
}
