#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "srw/families.hpp"

namespace srw {

// r-coloring given either by a named rule or by an explicit table keyed by the
// text form of the colored object. Colors run from 1 to `colors`.
struct Coloring {
    std::string rule = "constant";
    unsigned colors = 2;
    std::map<std::string, unsigned> table;  // rule == "table"
};

// Rules on finite sets: constant, size-parity, min-parity, sum-parity, table.
unsigned color_of(const Coloring& c, const FinSet& s);
// Rules on word sequences: constant, first-letter, parity (of |s_1|), min-of-d, table.
unsigned color_of(const Coloring& c, const WordSeq& s, const Alphabet& a);
// Rules on point sets of subspaces: constant, moving-first, first-letter, table.
unsigned color_of_points(const Coloring& c, const std::set<Word>& points, const Alphabet& a);
std::string format_points(const std::set<Word>& points, const Alphabet& a);

struct CertEntry {
    std::string item;
    unsigned color = 0;
    auto operator<=>(const CertEntry&) const = default;
};

namespace verify {

// ---- Ramsey on Schreier sets

struct RamseyResult {
    bool found = false;
    FinSet L;
    unsigned color = 0;
    std::vector<CertEntry> certificate;  // every member of A_xi inside L
    std::uint64_t candidates_checked = 0;
    std::uint64_t space = 0;             // C(N, target)
};
RamseyResult ramsey_schreier_search(const Ordinal& xi, std::uint32_t N, const Coloring& chi, std::uint32_t target,
                                    const SchreierConfig& cfg = {});

struct ExhaustReport {
    std::vector<std::string> domain;       // colored objects, in digit order
    std::uint64_t colorings = 0;           // r^|domain|
    std::uint64_t visited = 0;
    std::uint64_t defeated = 0;            // colorings with no witness
    std::optional<std::vector<unsigned>> first_defeating;
    bool every_coloring_has_witness() const { return defeated == 0; }
};
ExhaustReport ramsey_exhaust(const Ordinal& xi, std::uint32_t N, unsigned r, std::uint32_t target,
                             const SchreierConfig& cfg = {}, unsigned threads = 1, std::uint64_t budget = 1ull << 26);

// ---- Carlson-type search over reductions of a stream

enum class DMode { Relative, Absolute };

using SeqColor = std::function<unsigned(const WordSeq&)>;

struct CarlsonParams {
    Ordinal xi;
    Alphabet alphabet;
    VarWordStream w;
    std::size_t depth = 1;
    DMode dmode = DMode::Relative;
    SeqColor chi1;  // constant members; empty function: side ignored
    SeqColor chi2;  // variable members; empty function: side ignored
    SchreierConfig cfg;
    std::uint64_t node_budget = 50'000'000;
    unsigned threads = 1;
};

struct CarlsonResult {
    bool found = false;
    WordSeq t;  // the chosen variable words, u = w[t]
    WordSeq u;
    unsigned color1 = 0, color2 = 0;
    std::vector<CertEntry> cert_constant, cert_variable;
    std::uint64_t space = 0;    // number of depth-long t within the horizon
    std::uint64_t covered = 0;  // leaves accounted for (visited or pruned)
    std::uint64_t nodes = 0;
};
CarlsonResult carlson_search(const CarlsonParams& p);
// Size of the space of depth-long t using at most `positions` stream entries.
std::uint64_t carlson_space(std::size_t alphabet_size, std::size_t depth, std::size_t positions);

CarlsonResult carlson_witness_search(const Ordinal& xi, const Alphabet& a, const Coloring& chi1, const Coloring& chi2,
                                     const VarWordStream& w, std::size_t depth, const SchreierConfig& cfg = {},
                                     unsigned threads = 1);

// Colors variable generators s through the point set of their subspace.
CarlsonResult subspace_search(const Ordinal& xi, const Alphabet& a, const Coloring& chi, const VarWordStream& base,
                              std::size_t depth, const SchreierConfig& cfg = {}, unsigned threads = 1);

// ---- Hales-Jewett with Schreier constraints

struct HjLevel {
    std::size_t M = 0;
    std::size_t domain = 0;
    std::size_t candidates = 0;
    ExhaustReport exhaust;
    bool works = false;
};
struct HjReport {
    std::optional<std::size_t> M;
    std::vector<HjLevel> levels;
    bool budget_exceeded = false;
    std::size_t frontier = 0;  // last M examined
};
// scan_all keeps going past the least M so monotonicity can be inspected.
HjReport hales_jewett_M(unsigned r, std::size_t n, std::size_t k, const Ordinal& xi, std::size_t M_max,
                        const SchreierConfig& cfg = {}, unsigned threads = 1, std::uint64_t budget = 1ull << 24,
                        bool scan_all = false);

struct HjWitness {
    bool found = false;
    WordSeq w;
    unsigned color = 0;
    std::vector<CertEntry> certificate;
    std::uint64_t candidates_checked = 0;
};
HjWitness hj_line_search(const Coloring& chi, std::size_t M, std::size_t n, const Ordinal& xi, const Alphabet& a,
                         const SchreierConfig& cfg = {});

// The k-letter alphabet a, b, c, ...
Alphabet first_letters(std::size_t k);

// ---- Fixtures from the non-pointwise-closed examples

struct NwParams {
    std::string fixture = "1";  // "1", "2" or "empty"
    Ordinal xi_probe = Ordinal::omega();
    VarWordStream stream = VarWordStream::identity(12);
    std::size_t positions = 8;  // stream entries a probed reduction may use
    Universe universe{Alphabet{}, 5, 5};
    std::size_t horizon = 3;    // closedness chain length
    std::size_t levels = 3;     // derivative passes in the profile
    SchreierConfig cfg;
};
struct NwReport {
    std::string horn;  // inside | complement | mixed | vacuous
    std::size_t probed = 0, inside = 0, outside = 0;
    std::optional<WordSeq> first_inside, first_outside;
    bool open_at_horizon = false;
    WordSeq chain;
    std::size_t family_size = 0;
    std::vector<std::size_t> profile;
    std::string profile_note;
};
NwReport nw_fixture_check(const NwParams& p);

}  // namespace verify

// Independent re-verification of witnesses. Membership goes through
// check::mem_direct and reductions are rebuilt from scratch here.
namespace check {

struct CheckResult {
    bool ok = false;
    std::string message;
};

CheckResult ramsey_witness(const Ordinal& xi, const Coloring& chi, const verify::RamseyResult& w,
                           const SchreierConfig& cfg = {});
CheckResult carlson_witness(const verify::CarlsonParams& p, const verify::CarlsonResult& w);
CheckResult hj_witness(const Coloring& chi, std::size_t M, const Ordinal& xi, const Alphabet& a,
                       const verify::HjWitness& w, const SchreierConfig& cfg = {});

}  // namespace check

}  // namespace srw
