#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "srw/error.hpp"
#include "srw/schreier_words.hpp"

using namespace srw;

namespace {

const Alphabet ab;
const Alphabet a1({"a"});
Ordinal O(const char* s) { return parse_ordinal(s); }
WordSeq Q(const char* s, const Alphabet& a = ab) { return parse_wordseq(s, a); }

WxiQuery query(const char* xi, const Alphabet& a = ab, Side side = Side::Constant) {
    return WxiQuery{O(xi), a, side, std::nullopt, {}};
}

// Every non-empty constant sequence over {a,b} with at most L letters whose
// d-map lies in the family, computed without the library.
std::set<std::vector<std::string>> oracle_wxi(const char* xi, std::size_t L) {
    const oracle::SchreierOracle orc(O(xi), LimitRule::FixedSeq);
    std::set<std::vector<std::string>> out;
    std::vector<std::string> acc;
    auto rec = [&](auto&& self, std::size_t left) -> void {
        if (!acc.empty()) {
            const auto d = oracle::d_map(acc);
            if (orc.mem(d)) out.insert(acc);
        }
        for (std::size_t len = 1; len <= left; ++len)
            for (std::uint32_t bits = 0; bits < (1u << len); ++bits) {
                std::string w;
                for (std::size_t i = 0; i < len; ++i) w += (bits >> (len - 1 - i) & 1) ? 'b' : 'a';
                acc.push_back(w);
                self(self, left - len);
                acc.pop_back();
            }
    };
    rec(rec, L);
    return out;
}

std::set<std::vector<std::string>> as_strings(const std::vector<WordSeq>& v) {
    std::set<std::vector<std::string>> out;
    for (const auto& s : v) {
        std::vector<std::string> row;
        for (const auto& w : s) row.push_back(format(w, ab));
        out.insert(row);
    }
    return out;
}

}  // namespace

TEST_CASE("membership in W^xi") {
    CHECK(wxi::in_wxi(query("2"), Q("(ab,ba,aab)")));
    CHECK(wxi::in_wxi(query("w", a1), Q("(a,a,a)", a1)));
    CHECK_FALSE(wxi::in_wxi(query("1", a1), Q("(a)", a1)));
    CHECK(wxi::in_wxi(query("0"), Q("(abba)")));
    CHECK_FALSE(wxi::in_wxi(query("0"), Q("(a,b)")));
    // wrong side
    CHECK_THROWS_AS(wxi::in_wxi(query("1", ab, Side::Variable), Q("(a,b)")), Error);
}

TEST_CASE("relative complexity goes through the base stream") {
    WxiQuery q = query("1");
    q.base = parse_stream("list:(a_,_b,__,_)", ab);
    const auto d = wxi::complexity(q, Q("(aabb,bb)"));
    CHECK(format(d) == "{3}");
    CHECK(wxi::in_wxi(q, Q("(aabb,bb)")));
    CHECK_THROWS_AS(wxi::complexity(q, Q("(bb)")), Error);
}

TEST_CASE("canonical representation") {
    const auto r1 = wxi::canonical_rep(query("1"), Q("(a,b,a,b)"));
    CHECK(r1.boundaries == std::vector<std::size_t>{2, 3, 4});
    CHECK_FALSE(r1.residual);

    const auto rw = wxi::canonical_rep(query("w", a1), Q("(a,a,a,a)", a1));
    REQUIRE_FALSE(rw.boundaries.empty());
    CHECK(rw.boundaries[0] == 3);
    CHECK(rw.residual);

    const auto r2 = wxi::canonical_rep(query("2"), Q("(ab)"));
    CHECK(r2.residual);
    CHECK(r2.boundaries.empty());
    CHECK(wxi::in_star_minus(query("2"), Q("(ab)")));
    CHECK_FALSE(wxi::in_star_minus(query("2"), Q("(ab,b,a)")));
}

TEST_CASE("canonical blocks are members and partition the prefix") {
    std::mt19937_64 rng(11);
    for (const char* xi : {"1", "2", "w", "w+1", "w*2", "w^2"}) {
        for (int trial = 0; trial < 40; ++trial) {
            WordSeq s;
            const std::size_t n = 2 + rng() % 12;
            for (std::size_t i = 0; i < n; ++i) s.push_back(Word(std::vector<Letter>(1 + rng() % 2, 0)));
            const auto rep = wxi::canonical_rep(query(xi), s);
            std::size_t covered = 1;
            for (std::size_t b = 0; b < rep.boundaries.size(); ++b) {
                CHECK(schreier::mem(O(xi), rep.block_d[b]));
                CHECK(rep.block_d[b].size() == rep.boundaries[b] - covered);
                covered = rep.boundaries[b];
            }
            CHECK((covered == n) != rep.residual);
        }
    }
}

TEST_CASE("enumeration agrees with the oracle and with reductions of e") {
    for (const char* xi : {"0", "1", "2", "w"}) {
        const auto got = wxi::enumerate(O(xi), ab, Side::Constant, 6);
        CHECK(as_strings(got) == oracle_wxi(xi, 6));

        const auto rel = wxi::enumerate_relative(O(xi), VarWordStream::identity(6), ab, Side::Constant, 6);
        std::vector<WordSeq> rel_words;
        for (const auto& r : rel) rel_words.push_back(r.words);
        CHECK(as_strings(rel_words) == as_strings(got));
    }
}

TEST_CASE("transfer identity on words") {
    const auto r2 = wxi::transfer_check(O("2"), parse_word("ab", ab), ab, 8);
    CHECK(r2.equal);
    CHECK(r2.xi_n == O("1"));
    CHECK(r2.lhs_size > 0);

    const auto r1 = wxi::transfer_check(O("1"), parse_word("b", ab), ab, 7);
    CHECK(r1.equal);
    CHECK(r1.xi_n == O("0"));

    const auto rw = wxi::transfer_check(O("w"), parse_word("ba", ab), ab, 8);
    CHECK(rw.equal);
    CHECK(rw.xi_n == O("2"));

    const auto rv = wxi::transfer_check(O("w"), parse_word("_", ab), ab, 6);
    CHECK(rv.equal);
}

TEST_CASE("subspaces and spans") {
    CHECK(wxi::subspace_points(Q("(_,_)"), ab) ==
          std::set<Word>{parse_word("aa", ab), parse_word("ab", ab), parse_word("ba", ab), parse_word("bb", ab)});
    CHECK(wxi::span(Q("(_a,b_)"), ab) ==
          std::set<WordSeq>{Q("(aa,ba)"), Q("(aa,bb)"), Q("(ba,ba)"), Q("(ba,bb)")});
    CHECK(wxi::span({}, ab) == std::set<WordSeq>{WordSeq{}});
    CHECK(wxi::is_xi_subspace(Q("(_,_,_)"), O("w"), ab));
    CHECK_FALSE(wxi::is_xi_subspace(Q("(_,_)"), O("w"), ab));
    CHECK_FALSE(wxi::is_xi_subspace(Q("(a,_)"), O("1"), ab));
    CHECK_THROWS_AS(wxi::span(Q("(a)"), ab), Error);
}

TEST_CASE("W^xi families are thin") {
    for (const char* xi : {"1", "2", "3", "w", "w+1", "w*2", "w^2"}) {
        const auto all = wxi::enumerate(O(xi), a1, Side::Constant, 8);
        const std::set<WordSeq> members(all.begin(), all.end());
        for (const auto& s : all)
            for (std::size_t k = 1; k < s.size(); ++k)
                CHECK(members.count(WordSeq(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(k))) == 0);
    }
}
