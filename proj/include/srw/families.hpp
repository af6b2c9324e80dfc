#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "srw/schreier_words.hpp"

namespace srw {

struct Universe {
    Alphabet alphabet;
    std::size_t max_words = 4;
    std::size_t max_letters = 6;
    bool operator==(const Universe&) const = default;
};

// Explicit finite family over a truncated universe. Anything outside the
// member set, including sequences beyond the universe bounds, is a non-member.
struct Family {
    Universe universe;
    Side side = Side::Constant;
    std::set<WordSeq> members;

    bool contains(const WordSeq& s) const { return members.count(s) > 0; }
    std::size_t size() const { return members.size(); }
};

namespace families {

// Every sequence of the universe on the given side, the empty one included.
std::vector<WordSeq> universe_sequences(const Universe& u, Side side, std::size_t budget = 4'000'000);
Family materialize(const Universe& u, Side side, const std::function<bool(const WordSeq&)>& pred);

Family star_closure(const Family& f);
bool is_tree(const Family& f);
bool is_thin(const Family& f);

Family substar(const Family& f);            // variable side
Family f_of_g(const Family& g);             // {t : <t> inside G}
Family g_substar(const Family& g);          // constant side, through f_of_g
bool is_hereditary(const Family& f);        // either side

Family hereditary_kernel(const Family& f);  // either side

enum class ClosedMode { Tree, Hereditary };
struct ClosedReport {
    bool open = false;   // an H-long chain was found
    WordSeq chain;       // the witness reduction (u_1..u_H)
    std::size_t horizon = 0;
};
// Looks for (u_1..u_H), a reduction of w on the family's side, with every
// prefix a member (tree mode) or every finite reduction of every prefix a member
// (hereditary mode; u must then be a variable reduction).
ClosedReport pointwise_closed_trunc(const Family& f, const VarWordStream& w, std::size_t H, ClosedMode mode);

struct DichotomyReport {
    bool disjoint = false;        // W^xi reductions avoid G
    bool inside_star_minus = false;  // G reductions lie in (W^xi)^* minus W^xi
    std::optional<WordSeq> disjoint_failure;
    std::optional<WordSeq> star_failure;
    bool agree() const { return disjoint == inside_star_minus; }
};
DichotomyReport tree_dichotomy_check(const Family& g, const Ordinal& xi, const VarWordStream& u, std::size_t positions,
                                     const SchreierConfig& cfg = {});

// Prefix-closed random family inside the universe.
Family random_tree(const Universe& u, Side side, std::uint64_t seed, double density);

}  // namespace families

namespace fixtures {

// Constant-side G of the two pointwise-closed examples built from
// F = {t : |t| = 2k+2, min d(t) = k} and F = {t : |t| = k+1, min d(t) = 2k}.
bool nw_one_member(const WordSeq& s);
bool nw_two_member(const WordSeq& s);
// The variable families F themselves (before closure), as predicates.
bool nw_one_generator(const WordSeq& t);
bool nw_two_generator(const WordSeq& t);

// All sequences with at most k+1 words, i.e. the closure of W^k.
bool wk_closure_member(const WordSeq& s, std::size_t k);

}  // namespace fixtures

}  // namespace srw
