#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "srw/ordinal.hpp"

namespace srw {

// Finite strictly increasing set of positive naturals.
class FinSet {
public:
    FinSet() = default;
    explicit FinSet(std::vector<std::uint32_t> elems);

    const std::vector<std::uint32_t>& elems() const { return elems_; }
    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }
    std::uint32_t min() const { return elems_.front(); }
    std::uint32_t max() const { return elems_.back(); }

    // True when *this is a strict initial segment of other.
    bool is_proper_prefix_of(const FinSet& other) const;

    auto operator<=>(const FinSet&) const = default;

private:
    std::vector<std::uint32_t> elems_;
};

FinSet parse_finset(std::string_view text);
std::string format(const FinSet& s);

struct SchreierConfig {
    LimitRule limit_rule = LimitRule::FixedSeq;
};

namespace schreier {

// Length of the unique prefix of `stream` lying in A_xi, or nullopt when the
// stream ends before any prefix qualifies.
std::optional<std::size_t> segment_length(const Ordinal& xi, std::span<const std::uint32_t> stream,
                                          const SchreierConfig& cfg = {});

bool mem(const Ordinal& xi, const FinSet& s, const SchreierConfig& cfg = {});
FinSet initial_segment(const Ordinal& xi, std::span<const std::uint32_t> stream, const SchreierConfig& cfg = {});

// Members of A_xi with every element in [1, N], lexicographically sorted.
std::vector<FinSet> enumerate(const Ordinal& xi, std::uint32_t N, const SchreierConfig& cfg = {},
                              std::size_t budget = 5'000'000);

// Members restricted to elements in [lo, N].
std::vector<FinSet> enumerate_from(const Ordinal& xi, std::uint32_t lo, std::uint32_t N,
                                   const SchreierConfig& cfg = {}, std::size_t budget = 5'000'000);

// xi_n with A_xi(n) = A_{xi_n} restricted above n.
Ordinal transfer_index(const Ordinal& xi, std::uint64_t n, const SchreierConfig& cfg = {});

// Blocks used by the greedy decomposition of s (empty vector when s is not a member).
std::vector<FinSet> decompose(const Ordinal& xi, const FinSet& s, const SchreierConfig& cfg = {});

// Generic block order for a CNF term list: last (smallest) term first, each repeated coeff times.
std::vector<Ordinal> block_order(const Ordinal& xi);

}  // namespace schreier

namespace check {

// Direct recursive reading of the Schreier definition: every admissible split is
// tried rather than taking the greedy cut. Kept separate from schreier::mem so
// that witnesses can be certified by an independent code path.
bool mem_direct(const Ordinal& xi, std::span<const std::uint32_t> s, const SchreierConfig& cfg = {});

}  // namespace check

}  // namespace srw
