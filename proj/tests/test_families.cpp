#include <doctest.h>

#include "srw/error.hpp"
#include "srw/families.hpp"

using namespace srw;

namespace {

const Alphabet ab;
const Alphabet a1({"a"});
WordSeq Q(const char* s, const Alphabet& a = ab) { return parse_wordseq(s, a); }

Family fam(Side side, std::initializer_list<const char*> members, const Alphabet& a = ab, std::size_t words = 4,
           std::size_t letters = 6) {
    Family f;
    f.universe = Universe{a, words, letters};
    f.side = side;
    for (const char* m : members) f.members.insert(Q(m, a));
    return f;
}

// Builds the constant family spanned by the variable reductions of every
// prefix that some generator extends. `extends` decides that for a prefix.
Family construct(const std::function<bool(const WordSeq&)>& extends, std::size_t L) {
    const Universe u{ab, L, L};
    Family prefixes = families::materialize(u, Side::Variable, [&](const WordSeq& p) { return !p.empty() && extends(p); });
    Family out;
    out.universe = u;
    out.side = Side::Constant;
    out.members.insert(WordSeq{});
    for (const auto& p : prefixes.members)
        for (const auto& r : words::finite_reductions(p, ab).vrw)
            for (auto& s : wxi::span(r.words, ab)) out.members.insert(s);
    return out;
}

}  // namespace

TEST_CASE("initial-segment closure") {
    const auto c = families::star_closure(fam(Side::Constant, {"(ab,b)"}));
    CHECK(c.members == std::set<WordSeq>{WordSeq{}, Q("(ab)"), Q("(ab,b)")});
    CHECK(families::star_closure(fam(Side::Constant, {"()"})).members == std::set<WordSeq>{WordSeq{}});
    CHECK(families::is_tree(c));
    CHECK_FALSE(families::is_tree(fam(Side::Constant, {"(ab,b)"})));
    // idempotent
    CHECK(families::star_closure(c).members == c.members);
}

TEST_CASE("thinness") {
    CHECK_FALSE(families::is_thin(fam(Side::Constant, {"(a)", "(a,b)"})));
    CHECK(families::is_thin(fam(Side::Constant, {"(a,b)", "(b,a)"})));
    const auto ww = wxi::enumerate(parse_ordinal("w"), ab, Side::Constant, 6);
    Family f;
    f.members.insert(ww.begin(), ww.end());
    CHECK(families::is_thin(f));
}

TEST_CASE("substar") {
    const auto s = families::substar(fam(Side::Variable, {"(_,_)"}, a1));
    CHECK(s.contains(Q("(__)", a1)));
    CHECK(s.contains(Q("(_)", a1)));
    CHECK(s.contains(Q("(_,_)", a1)));
    CHECK(s.contains(Q("(a_)", a1)));
    CHECK(s.contains(WordSeq{}));
    CHECK_FALSE(s.contains(Q("(_,a)", a1)));
    CHECK(families::substar(fam(Side::Variable, {"()"})).members == std::set<WordSeq>{WordSeq{}});
    // extensive and idempotent
    CHECK(families::substar(s).members == s.members);
    CHECK_THROWS_AS(families::substar(fam(Side::Constant, {"(a)"})), Error);
}

TEST_CASE("constant substar goes through the spanning family") {
    const auto g0 = families::substar(fam(Side::Variable, {"(_,_)"}));
    Family g;
    g.universe = g0.universe;
    g.side = Side::Constant;
    for (const auto& t : g0.members)
        for (auto& s : wxi::span(t, ab)) g.members.insert(s);
    const auto gs = families::g_substar(g);
    CHECK(gs.members == g.members);
    CHECK(families::is_hereditary(g));
}

TEST_CASE("hereditary kernel") {
    const auto h = families::substar(fam(Side::Variable, {"(_,_)"}, a1));
    CHECK(families::is_hereditary(h));
    CHECK(families::hereditary_kernel(h).members == h.members);
    CHECK(families::hereditary_kernel(fam(Side::Variable, {"(_,_)"}, a1)).members == std::set<WordSeq>{WordSeq{}});
    const auto k = families::hereditary_kernel(fam(Side::Variable, {"(_)", "(_,_)", "(__)", "(a_)", "(_a)"}, a1));
    CHECK(k.contains(Q("(_)", a1)));
    CHECK(k.contains(Q("(_,_)", a1)));
    CHECK(families::is_hereditary(k));
}

TEST_CASE("pointwise closedness at a horizon") {
    const Universe u{ab, 4, 4};
    const auto e = VarWordStream::identity(8);
    const auto short_seqs = families::materialize(u, Side::Variable, [](const WordSeq& s) { return s.size() <= 2; });
    CHECK(families::is_hereditary(short_seqs));
    for (std::size_t H : {3u, 4u}) {
        CHECK_FALSE(families::pointwise_closed_trunc(short_seqs, e, H, families::ClosedMode::Hereditary).open);
        CHECK_FALSE(families::pointwise_closed_trunc(short_seqs, e, H, families::ClosedMode::Tree).open);
    }
    const auto everything = families::materialize(u, Side::Variable, [](const WordSeq&) { return true; });
    for (std::size_t H = 1; H <= 4; ++H) {
        const auto r = families::pointwise_closed_trunc(everything, e, H, families::ClosedMode::Hereditary);
        CHECK(r.open);
        CHECK(r.chain.size() == H);
    }
    CHECK_THROWS_AS(families::pointwise_closed_trunc(everything, e, 0, families::ClosedMode::Tree), Error);
}

TEST_CASE("tree dichotomy examples") {
    const auto e = VarWordStream::identity(6);
    const auto one = parse_ordinal("1");
    const auto r1 = families::tree_dichotomy_check(fam(Side::Constant, {"()", "(a)"}, a1), one, e, 6);
    CHECK(r1.disjoint);
    CHECK(r1.inside_star_minus);

    const auto g2 = families::star_closure(fam(Side::Constant, {"(a,b)"}));
    const auto r2 = families::tree_dichotomy_check(g2, one, e, 6);
    CHECK_FALSE(r2.disjoint);
    CHECK_FALSE(r2.inside_star_minus);

    for (const char* xi : {"1", "2", "w"}) {
        const auto r3 = families::tree_dichotomy_check(fam(Side::Constant, {"()"}), parse_ordinal(xi), e, 6);
        CHECK(r3.disjoint);
        CHECK(r3.inside_star_minus);
    }
    CHECK_THROWS_AS(families::tree_dichotomy_check(fam(Side::Constant, {"(a,b)"}), one, e, 6), Error);
}

TEST_CASE("tree dichotomy never splits on random trees") {
    const Universe u{ab, 3, 4};
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        const auto g = families::random_tree(u, Side::Constant, seed, 0.05);
        for (const char* xi : {"1", "2", "w"}) {
            const auto r = families::tree_dichotomy_check(g, parse_ordinal(xi), VarWordStream::identity(4), 4);
            CAPTURE(seed);
            CHECK(r.agree());
        }
    }
}

TEST_CASE("closed-form fixtures match their construction") {
    const std::size_t L = 5;
    const Universe u{ab, L, L};
    // nw1 generators: |t| = 2k + 2 with k = |t_1| + 1, so a prefix p extends iff |p| <= 2|p_1| + 4.
    const auto built1 = construct([](const WordSeq& p) { return p.size() <= 2 * p[0].size() + 4; }, L);
    const auto closed1 = families::materialize(u, Side::Constant, fixtures::nw_one_member);
    CHECK(built1.members == closed1.members);

    // nw2 generators: |t_1| + 1 = m even, |t| = m/2 + 1.
    const auto built2 = construct(
        [](const WordSeq& p) { return p[0].size() % 2 == 1 && p.size() <= (p[0].size() + 1) / 2 + 1; }, L);
    const auto closed2 = families::materialize(u, Side::Constant, fixtures::nw_two_member);
    CHECK(built2.members == closed2.members);

    CHECK(fixtures::wk_closure_member(Q("(a,b)"), 1));
    CHECK_FALSE(fixtures::wk_closure_member(Q("(a,b,a)"), 1));
    CHECK(fixtures::nw_one_generator(Q("(_,_,_,_,_,_)")));
    CHECK_FALSE(fixtures::nw_one_generator(Q("(_,_,_,_)")));
    CHECK(fixtures::nw_two_generator(Q("(_,_)")));
}
