#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "srw/families.hpp"

namespace srw {

struct ChainOracle {
    enum class Mode { Exact, Horizon };
    Mode mode = Mode::Horizon;
    std::string rule = "length-bound";  // exact mode only
    std::size_t H = 4;                  // horizon mode only
};

ChainOracle parse_oracle(std::string_view text);  // "exact:length-bound" | "horizon:<H>"
std::string describe(const ChainOracle& o);

struct DerivativeState {
    std::set<WordSeq> survivors;
    std::size_t level = 0;  // derivatives applied so far
};

namespace cb {

// Members of the family that are reductions of u (on the family's side).
DerivativeState start(const Family& f, const VarWordStream& u);

DerivativeState derivative(const Family& f, const DerivativeState& st, const VarWordStream& u, const ChainOracle& o,
                           unsigned threads = 1);

struct SoReport {
    std::optional<std::size_t> index;   // set when the family empties within budget
    std::size_t initial_size = 0;
    std::vector<std::size_t> level_sizes;  // survivors after each derivative
    bool budget_exceeded = false;
};
SoReport so_index(const Family& f, const VarWordStream& u, const ChainOracle& o, std::size_t budget, unsigned threads = 1);

struct MonotonicityReport {
    std::size_t so_small = 0, so_large = 0;   // f1, f2 on u
    std::size_t so_restricted = 0;            // f2 on u1
    bool inclusion_holds = false;             // so_small <= so_large
    bool restriction_holds = false;           // so_restricted >= so_large
};
// f1 inside f2, u1 a variable reduction of u. Each stream gets its own oracle
// because the window needed depends on how much of the stream a member uses.
MonotonicityReport monotonicity_check(const Family& f1, const Family& f2, const VarWordStream& u, const ChainOracle& ou,
                                      const VarWordStream& u1, const ChainOracle& ou1, std::size_t budget,
                                      unsigned threads = 1);

}  // namespace cb
}  // namespace srw
