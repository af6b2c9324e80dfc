#pragma once

// Reference implementations used only by the tests. They work on plain
// vectors and strings ('_' is the variable, every other char a letter) and
// never call into the library, so agreement with it means something.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <functional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "srw/ordinal.hpp"

namespace oracle {

// Schreier families for ordinals below omega^omega plus omega^omega itself.
// The ordinal is a list of powers p (meaning omega^p), smallest first; a set
// belongs when it splits into consecutive blocks, one per power, with an
// omega^p block read as: p == 0 a singleton, otherwise min(block) consecutive
// omega^(p-1) blocks. kOmegaOmega selects the power omega^min(block).
inline constexpr int kOmegaOmega = -1;

inline bool power_mem(int p, std::span<const std::uint32_t> s);

inline bool split_mem(const std::vector<int>& parts, std::size_t idx, std::span<const std::uint32_t> s) {
    if (idx == parts.size()) return s.empty();
    for (std::size_t cut = 1; cut <= s.size(); ++cut)
        if (power_mem(parts[idx], s.first(cut)) && split_mem(parts, idx + 1, s.subspan(cut))) return true;
    return false;
}

inline bool power_mem(int p, std::span<const std::uint32_t> s) {
    if (s.empty()) return false;
    if (p == kOmegaOmega) return power_mem(static_cast<int>(s[0]), s);
    if (p == 0) return s.size() == 1;
    return split_mem(std::vector<int>(s[0], p - 1), 0, s);
}

class SchreierOracle {
public:
    // Only the sample ordinals used by the tests are understood.
    SchreierOracle(const srw::Ordinal& xi, srw::LimitRule) {
        const std::string t = srw::format(xi);
        if (t == "0") parts_ = {};
        else if (t == "1") parts_ = {0};
        else if (t == "2") parts_ = {0, 0};
        else if (t == "3") parts_ = {0, 0, 0};
        else if (t == "w") parts_ = {1};
        else if (t == "w + 1") parts_ = {0, 1};
        else if (t == "w + 2") parts_ = {0, 0, 1};
        else if (t == "w*2") parts_ = {1, 1};
        else if (t == "w*3") parts_ = {1, 1, 1};
        else if (t == "w^2") parts_ = {2};
        else if (t == "w^2 + w") parts_ = {1, 2};
        else if (t == "w^w") parts_ = {kOmegaOmega};
        else throw std::logic_error("oracle does not know " + t);
    }
    bool mem(std::span<const std::uint32_t> s) const { return split_mem(parts_, 0, s); }

private:
    std::vector<int> parts_;
};

// ---- words as strings

inline std::string subst(const std::string& w, char alpha) {
    std::string out = w;
    for (char& c : out)
        if (c == '_') c = alpha;
    return out;
}

inline std::vector<std::uint32_t> d_map(const std::vector<std::string>& seq) {
    std::vector<std::uint32_t> out;
    std::uint32_t pos = 1;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i) out.push_back(pos);
        pos += static_cast<std::uint32_t>(seq[i].size());
    }
    return out;
}

// w[t]: t_i's j-th letter picks the substitution for the next stream word.
inline std::vector<std::string> reduce(const std::vector<std::string>& stream, const std::vector<std::string>& t) {
    std::vector<std::string> out;
    std::size_t k = 0;
    for (const auto& ti : t) {
        std::string u;
        for (char c : ti) u += subst(stream.at(k++), c);
        out.push_back(u);
    }
    return out;
}

// Complexity of u relative to a stream, found by trying every block split
// and substitution. Empty when u is not a reduction.
inline std::optional<std::vector<std::uint32_t>> relative_d(const std::vector<std::string>& stream,
                                                            const std::vector<std::string>& u, const std::string& letters) {
    std::vector<std::uint32_t> starts;
    std::function<bool(std::size_t, std::size_t)> go = [&](std::size_t i, std::size_t k) -> bool {
        if (i == u.size()) return true;
        const std::string& target = u[i];
        // grow a block of stream words matching target
        std::function<bool(std::size_t, std::size_t)> block = [&](std::size_t used, std::size_t kk) -> bool {
            if (used == target.size()) return go(i + 1, kk);
            if (kk >= stream.size()) return false;
            for (char c : letters + "_") {
                const std::string piece = subst(stream[kk], c);
                if (target.compare(used, piece.size(), piece) == 0 && used + piece.size() <= target.size())
                    if (block(used + piece.size(), kk + 1)) return true;
            }
            return false;
        };
        if (i) starts.push_back(static_cast<std::uint32_t>(k + 1));
        if (block(0, k)) return true;
        if (i) starts.pop_back();
        return false;
    };
    if (!go(0, 0)) return std::nullopt;
    return starts;
}

// ---- brute-force Ramsey and Hales-Jewett counts

// Number of 2-colorings of the pairs of {1..N} without a monochromatic triangle.
inline std::uint64_t triangle_free_colorings(unsigned N) {
    std::vector<std::pair<unsigned, unsigned>> edges;
    for (unsigned i = 0; i < N; ++i)
        for (unsigned j = i + 1; j < N; ++j) edges.emplace_back(i, j);
    auto idx = [&](unsigned i, unsigned j) {
        for (std::size_t e = 0; e < edges.size(); ++e)
            if (edges[e] == std::pair{i, j}) return e;
        return edges.size();
    };
    std::uint64_t count = 0;
    for (std::uint64_t c = 0; c < (1ull << edges.size()); ++c) {
        bool mono = false;
        for (unsigned i = 0; i < N && !mono; ++i)
            for (unsigned j = i + 1; j < N && !mono; ++j)
                for (unsigned k = j + 1; k < N && !mono; ++k) {
                    const auto a = c >> idx(i, j) & 1, b = c >> idx(i, k) & 1, d = c >> idx(j, k) & 1;
                    mono = a == b && b == d;
                }
        if (!mono) ++count;
    }
    return count;
}

// 2-colorings of the words of length M over {a,b} with no monochromatic
// combinatorial line {v(a), v(b)}.
inline std::uint64_t line_free_colorings(unsigned M) {
    const unsigned n = 1u << M;
    std::vector<std::pair<unsigned, unsigned>> lines;
    unsigned words3 = 1;
    for (unsigned i = 0; i < M; ++i) words3 *= 3;
    for (unsigned v = 0; v < words3; ++v) {
        unsigned x = v, wa = 0, wb = 0;
        bool has_var = false;
        for (unsigned i = 0; i < M; ++i, x /= 3) {
            const unsigned digit = x % 3;
            wa <<= 1;
            wb <<= 1;
            if (digit == 2) {
                has_var = true;
                wb |= 1;
            } else {
                wa |= digit;
                wb |= digit;
            }
        }
        if (has_var) lines.emplace_back(wa, wb);
    }
    std::uint64_t count = 0;
    for (std::uint64_t c = 0; c < (1ull << n); ++c) {
        bool mono = false;
        for (auto [p, q] : lines) mono = mono || ((c >> p & 1) == (c >> q & 1));
        if (!mono) ++count;
    }
    return count;
}

}  // namespace oracle
