#include "srw/schreier.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "srw/error.hpp"

namespace srw {

FinSet::FinSet(std::vector<std::uint32_t> elems) : elems_(std::move(elems)) {
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (elems_[i] == 0) fail(ErrorCode::Invalid, "set elements must be positive");
        if (i > 0 && elems_[i] <= elems_[i - 1]) fail(ErrorCode::Invalid, "set elements must be strictly increasing");
    }
}

bool FinSet::is_proper_prefix_of(const FinSet& other) const {
    return elems_.size() < other.elems_.size() && std::equal(elems_.begin(), elems_.end(), other.elems_.begin());
}

FinSet parse_finset(std::string_view text) {
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip();
    if (pos >= text.size() || text[pos] != '{') throw ParseError(pos, "expected '{'");
    ++pos;
    std::vector<std::uint32_t> out;
    skip();
    if (pos < text.size() && text[pos] == '}') {
        ++pos;
    } else {
        for (;;) {
            skip();
            const std::size_t start = pos;
            std::uint64_t v = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                v = v * 10 + static_cast<std::uint64_t>(text[pos] - '0');
                if (v > 0xFFFFFFFFu) throw ParseError(start, "element too large");
                ++pos;
            }
            if (pos == start) throw ParseError(start, "expected a natural number");
            if (v == 0) throw ParseError(start, "elements must be positive");
            if (!out.empty() && v <= out.back()) throw ParseError(start, "elements must be strictly increasing");
            out.push_back(static_cast<std::uint32_t>(v));
            skip();
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                continue;
            }
            if (pos < text.size() && text[pos] == '}') {
                ++pos;
                break;
            }
            throw ParseError(pos, "expected ',' or '}'");
        }
    }
    skip();
    if (pos != text.size()) throw ParseError(pos, "trailing characters");
    return FinSet(std::move(out));
}

std::string format(const FinSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(s.elems()[i]);
    }
    return out + "}";
}

namespace schreier {

namespace {

bool is_pure_power(const Ordinal& xi) { return xi.terms().size() == 1 && xi.terms()[0].coeff == 1; }

// Returns consumed length, or nullopt when the stream runs out.
std::optional<std::size_t> consume(const Ordinal& xi, std::span<const std::uint32_t> s, const SchreierConfig& cfg);

std::optional<std::size_t> consume_blocks(const std::vector<Ordinal>& blocks, std::span<const std::uint32_t> s,
                                          const SchreierConfig& cfg) {
    std::size_t used = 0;
    for (const auto& b : blocks) {
        auto k = consume(b, s.subspan(used), cfg);
        if (!k) return std::nullopt;
        used += *k;
    }
    return used;
}

std::optional<std::size_t> consume(const Ordinal& xi, std::span<const std::uint32_t> s, const SchreierConfig& cfg) {
    Classification c = classify(xi);
    if (c.kind == OrdinalKind::Zero) return 0;
    if (s.empty()) return std::nullopt;
    if (c.kind == OrdinalKind::Successor) {
        auto k = consume(c.pred, s.subspan(1), cfg);
        if (!k) return std::nullopt;
        return *k + 1;
    }
    if (!is_pure_power(xi)) return consume_blocks(block_order(xi), s, cfg);

    const Ordinal& e = xi.terms()[0].exponent;
    const std::uint64_t n = s[0];
    Classification ce = classify(e);
    if (ce.kind == OrdinalKind::Successor) {
        const Ordinal inner = omega_pow(ce.pred);
        std::size_t used = 0;
        for (std::uint64_t i = 0; i < n; ++i) {
            auto k = consume(inner, s.subspan(used), cfg);
            if (!k) return std::nullopt;
            used += *k;
        }
        return used;
    }
    return consume(omega_pow(limit_step(e, n, cfg.limit_rule)), s, cfg);
}

}  // namespace

std::vector<Ordinal> block_order(const Ordinal& xi) {
    std::vector<Ordinal> out;
    const auto& ts = xi.terms();
    for (auto it = ts.rbegin(); it != ts.rend(); ++it) {
        const Ordinal p = omega_pow(it->exponent);
        for (std::uint64_t i = 0; i < it->coeff; ++i) out.push_back(p);
    }
    return out;
}

std::optional<std::size_t> segment_length(const Ordinal& xi, std::span<const std::uint32_t> stream,
                                          const SchreierConfig& cfg) {
    return consume(xi, stream, cfg);
}

bool mem(const Ordinal& xi, const FinSet& s, const SchreierConfig& cfg) {
    auto k = consume(xi, s.elems(), cfg);
    return k && *k == s.size();
}

FinSet initial_segment(const Ordinal& xi, std::span<const std::uint32_t> stream, const SchreierConfig& cfg) {
    auto k = consume(xi, stream, cfg);
    if (!k) fail(ErrorCode::Horizon, "stream prefix too short for an initial segment of A_" + format(xi));
    return FinSet(std::vector<std::uint32_t>(stream.begin(), stream.begin() + static_cast<std::ptrdiff_t>(*k)));
}

std::vector<FinSet> decompose(const Ordinal& xi, const FinSet& s, const SchreierConfig& cfg) {
    if (!mem(xi, s, cfg)) return {};
    std::span<const std::uint32_t> rest(s.elems());
    auto take = [&](std::size_t k) {
        FinSet b(std::vector<std::uint32_t>(rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(k)));
        rest = rest.subspan(k);
        return b;
    };
    std::vector<FinSet> out;
    Classification c = classify(xi);
    if (c.kind == OrdinalKind::Zero) return {FinSet{}};
    if (c.kind == OrdinalKind::Successor) {
        out.push_back(take(1));
        if (!rest.empty()) out.push_back(take(rest.size()));
        return out;
    }
    std::vector<Ordinal> blocks;
    if (!is_pure_power(xi)) {
        blocks = block_order(xi);
    } else {
        Classification ce = classify(xi.terms()[0].exponent);
        if (ce.kind != OrdinalKind::Successor) return {s};
        blocks.assign(s.min(), omega_pow(ce.pred));
    }
    for (const auto& b : blocks) out.push_back(take(*consume(b, rest, cfg)));
    return out;
}

// ---------------------------------------------------------------- enumeration

namespace {

class Enumerator {
public:
    Enumerator(std::uint32_t N, const SchreierConfig& cfg, std::size_t budget) : N_(N), cfg_(cfg), budget_(budget) {}

    using Seqs = std::vector<std::vector<std::uint32_t>>;

    const Seqs& gen(const Ordinal& xi, std::uint32_t lo) {
        auto key = std::make_pair(xi, lo);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        Seqs out = compute(xi, lo);
        produced_ += out.size();
        if (produced_ > budget_) fail(ErrorCode::Budget, "Schreier enumeration budget exceeded");
        return memo_.emplace(std::move(key), std::move(out)).first->second;
    }

private:
    std::uint32_t N_;
    SchreierConfig cfg_;
    std::size_t budget_;
    std::size_t produced_ = 0;
    std::map<std::pair<Ordinal, std::uint32_t>, Seqs> memo_;

    // Concatenations b_1 < b_2 < ... with b_i in A_{blocks[i]} and everything >= lo.
    void chain(const std::vector<Ordinal>& blocks, std::size_t i, std::uint32_t lo, std::vector<std::uint32_t>& acc,
               Seqs& out) {
        if (i == blocks.size()) {
            out.push_back(acc);
            return;
        }
        if (lo > N_) return;
        const Seqs& firsts = gen(blocks[i], lo);
        for (std::size_t j = 0; j < firsts.size(); ++j) {
            const auto b = firsts[j];  // copy: recursion may grow the memo
            const std::size_t mark = acc.size();
            acc.insert(acc.end(), b.begin(), b.end());
            chain(blocks, i + 1, b.empty() ? lo : b.back() + 1, acc, out);
            acc.resize(mark);
        }
    }

    Seqs compute(const Ordinal& xi, std::uint32_t lo) {
        Seqs out;
        Classification c = classify(xi);
        if (c.kind == OrdinalKind::Zero) return {{}};
        if (lo > N_) return out;
        if (c.kind == OrdinalKind::Successor) {
            for (std::uint32_t n = lo; n <= N_; ++n) {
                const Seqs rest = gen(c.pred, n + 1);
                for (const auto& r : rest) {
                    std::vector<std::uint32_t> s{n};
                    s.insert(s.end(), r.begin(), r.end());
                    out.push_back(std::move(s));
                }
            }
            return out;
        }
        if (!is_pure_power(xi)) {
            std::vector<std::uint32_t> acc;
            chain(block_order(xi), 0, lo, acc, out);
            return out;
        }
        const Ordinal& e = xi.terms()[0].exponent;
        Classification ce = classify(e);
        for (std::uint32_t n = lo; n <= N_; ++n) {
            if (ce.kind == OrdinalKind::Successor) {
                const Ordinal inner = omega_pow(ce.pred);
                const Seqs firsts = gen(inner, n);
                std::vector<Ordinal> tail(n - 1, inner);
                for (const auto& b : firsts) {
                    if (b.front() != n) break;  // sorted by first element, so once past n we are done
                    std::vector<std::uint32_t> acc = b;
                    chain(tail, 0, b.back() + 1, acc, out);
                }
            } else {
                const Seqs cands = gen(omega_pow(limit_step(e, n, cfg_.limit_rule)), n);
                for (const auto& b : cands) {
                    if (b.front() != n) break;
                    out.push_back(b);
                }
            }
        }
        return out;
    }
};

}  // namespace

std::vector<FinSet> enumerate_from(const Ordinal& xi, std::uint32_t lo, std::uint32_t N, const SchreierConfig& cfg,
                                   std::size_t budget) {
    if (lo == 0) lo = 1;
    Enumerator en(N, cfg, budget);
    auto seqs = en.gen(xi, lo);
    std::sort(seqs.begin(), seqs.end());
    std::vector<FinSet> out;
    out.reserve(seqs.size());
    for (auto& s : seqs) out.emplace_back(std::move(s));
    return out;
}

std::vector<FinSet> enumerate(const Ordinal& xi, std::uint32_t N, const SchreierConfig& cfg, std::size_t budget) {
    return enumerate_from(xi, 1, N, cfg, budget);
}

Ordinal transfer_index(const Ordinal& xi, std::uint64_t n, const SchreierConfig& cfg) {
    if (n == 0) fail(ErrorCode::Invalid, "transfer index needs n >= 1");
    Classification c = classify(xi);
    if (c.kind == OrdinalKind::Zero) fail(ErrorCode::Invalid, "transfer index needs xi >= 1");
    if (c.kind == OrdinalKind::Successor) return c.pred;

    const auto& ts = xi.terms();
    if (!is_pure_power(xi)) {
        std::vector<Term> head(ts.begin(), ts.end() - 1);
        const Term last = ts.back();
        if (last.coeff > 1) head.push_back(Term{last.exponent, last.coeff - 1});
        return add(Ordinal::from_terms(std::move(head)), transfer_index(omega_pow(last.exponent), n, cfg));
    }
    const Ordinal& e = ts[0].exponent;
    Classification ce = classify(e);
    if (ce.kind == OrdinalKind::Successor) {
        const Ordinal inner = omega_pow(ce.pred);
        return add(nat_mul(inner, n - 1), transfer_index(inner, n, cfg));
    }
    return transfer_index(omega_pow(limit_step(e, n, cfg.limit_rule)), n, cfg);
}

}  // namespace schreier
}  // namespace srw
