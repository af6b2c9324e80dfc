#include "srw/schreier.hpp"

namespace srw::check {

namespace {

bool split_into(const std::vector<Ordinal>& parts, std::size_t idx, std::span<const std::uint32_t> s,
                const SchreierConfig& cfg) {
    if (idx == parts.size()) return s.empty();
    // every Schreier block for a nonzero index is non-empty, so cut >= 1
    for (std::size_t cut = 1; cut <= s.size(); ++cut) {
        if (mem_direct(parts[idx], s.first(cut), cfg) && split_into(parts, idx + 1, s.subspan(cut), cfg)) return true;
    }
    return false;
}

}  // namespace

bool mem_direct(const Ordinal& xi, std::span<const std::uint32_t> s, const SchreierConfig& cfg) {
    if (xi.is_zero()) return s.empty();
    if (s.empty()) return false;

    const auto& ts = xi.terms();
    const Term& last = ts.back();
    if (last.exponent.is_zero()) {
        // xi = zeta + 1
        std::vector<Term> pred = ts;
        if (--pred.back().coeff == 0) pred.pop_back();
        return mem_direct(Ordinal::from_terms(std::move(pred)), s.subspan(1), cfg);
    }

    if (ts.size() > 1 || ts[0].coeff > 1) {
        // smallest powers take the lowest elements
        std::vector<Ordinal> parts;
        for (auto it = ts.rbegin(); it != ts.rend(); ++it)
            parts.insert(parts.end(), it->coeff, omega_pow(it->exponent));
        return split_into(parts, 0, s, cfg);
    }

    const Ordinal& e = ts[0].exponent;
    const std::uint32_t n = s[0];
    if (e.terms().back().exponent.is_zero()) {
        std::vector<Term> beta = e.terms();
        if (--beta.back().coeff == 0) beta.pop_back();
        std::vector<Ordinal> parts(n, omega_pow(Ordinal::from_terms(std::move(beta))));
        if (parts.size() > s.size()) return false;
        return split_into(parts, 0, s, cfg);
    }
    const Ordinal step = cfg.limit_rule == LimitRule::FixedSeq ? fixed_seq(e, n) : fixed_seq_succ(e, n);
    return mem_direct(omega_pow(step), s, cfg);
}

}  // namespace srw::check
