#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "srw/words.hpp"

namespace srw {

struct WxiQuery {
    Ordinal xi;
    Alphabet alphabet;
    Side side = Side::Constant;
    std::optional<VarWordStream> base;  // absent: complexity is the plain d-map
    SchreierConfig cfg;
};

struct CanonicalRep {
    std::vector<std::size_t> boundaries;  // m_1 < m_2 < ... (1-based word indices)
    std::vector<FinSet> block_d;          // the A_xi member behind each block
    bool residual = false;
};

namespace wxi {

// Complexity set of u: d(u), or d relative to q.base. Throws when u is not a
// reduction of the base on the requested side.
FinSet complexity(const WxiQuery& q, const WordSeq& u);

bool in_wxi(const WxiQuery& q, const WordSeq& u);
// u lies in (W^xi)^* minus W^xi: no initial segment of u (u included) is a member.
bool in_star_minus(const WxiQuery& q, const WordSeq& u);

CanonicalRep canonical_rep(const WxiQuery& q, const WordSeq& s);

// Words of exactly `len` letters on the requested side, in canonical order.
std::vector<Word> words_of_length(const Alphabet& a, std::size_t len, Side side);

// W^xi (absolute d) with total letters <= letter_budget, sorted.
std::vector<WordSeq> enumerate(const Ordinal& xi, const Alphabet& a, Side side, std::size_t letter_budget,
                               const SchreierConfig& cfg = {}, std::size_t budget = 4'000'000);

// RW^xi(w) / VRW^xi(w) with at most `positions` stream entries consumed.
std::vector<Reduction> enumerate_relative(const Ordinal& xi, const VarWordStream& w, const Alphabet& a, Side side,
                                          std::size_t positions, const SchreierConfig& cfg = {});

struct TransferReport {
    Ordinal xi_n;
    std::size_t lhs_size = 0;
    std::size_t rhs_size = 0;
    bool equal = false;
    std::optional<WordSeq> counterexample;
};
// W^xi(s) versus W^{xi_n} restricted to sequences whose first word extends s.
TransferReport transfer_check(const Ordinal& xi, const Word& s, const Alphabet& a, std::size_t letter_budget,
                              const SchreierConfig& cfg = {});

std::set<Word> subspace_points(const WordSeq& generator, const Alphabet& a);
bool is_xi_subspace(const WordSeq& generator, const Ordinal& xi, const Alphabet& a,
                    const std::optional<VarWordStream>& base = std::nullopt, const SchreierConfig& cfg = {});
// All constant substitution instances (t_1(a_1), ..., t_m(a_m)); the empty sequence spans itself.
std::set<WordSeq> span(const WordSeq& t, const Alphabet& a);

struct ShadowReport {
    bool containment = false;     // W^xi  meets the reductions only inside G
    bool initial_spans = false;   // every variable W^xi reduction spans inside G
    std::optional<WordSeq> containment_failure;
    std::optional<WordSeq> span_failure;
};
// Both conditions evaluated on reductions of u using at most `positions` entries.
ShadowReport shadow_equivalence(const std::set<WordSeq>& g, const Ordinal& xi, const VarWordStream& u,
                                const Alphabet& a, std::size_t positions, const SchreierConfig& cfg = {});

}  // namespace wxi
}  // namespace srw
