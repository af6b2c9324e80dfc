// Witness re-verification. Nothing here calls schreier::mem, the reduction
// walkers or the search code: reductions are rebuilt by brute force over cut
// masks and substitution counters, and membership uses check::mem_direct.

#include <algorithm>

#include "srw/verify.hpp"

namespace srw::check {

namespace {

struct Rebuilt {
    WordSeq words;
    std::vector<std::uint32_t> block_first;  // index (0-based) of the first source word of each block
};

// Every reduction of src that uses all of it, on one side.
std::vector<Rebuilt> all_reductions(const WordSeq& src, const Alphabet& a, bool variable) {
    std::vector<Rebuilt> out;
    const std::size_t n = src.size();
    if (n == 0) return out;
    std::vector<Letter> subs = a.letters(false);
    if (variable) subs.push_back(kVar);
    const std::size_t base = subs.size();

    for (std::uint64_t cuts = 0; cuts < (std::uint64_t{1} << (n - 1)); ++cuts) {
        std::vector<std::uint32_t> firsts{0};
        for (std::size_t i = 1; i < n; ++i)
            if (cuts >> (i - 1) & 1) firsts.push_back(static_cast<std::uint32_t>(i));
        std::vector<std::size_t> digit(n, 0);
        for (;;) {
            Rebuilt r;
            r.block_first = firsts;
            bool ok = true;
            for (std::size_t b = 0; b < firsts.size() && ok; ++b) {
                const std::size_t lo = firsts[b], hi = b + 1 < firsts.size() ? firsts[b + 1] : n;
                std::vector<Letter> letters;
                bool saw_var = false;
                for (std::size_t i = lo; i < hi; ++i) {
                    const Letter l = subs[digit[i]];
                    saw_var = saw_var || l == kVar;
                    for (Letter x : src[i].letters()) letters.push_back(x == kVar ? l : x);
                }
                if (variable && !saw_var) ok = false;
                r.words.emplace_back(std::move(letters));
            }
            if (ok) out.push_back(std::move(r));
            std::size_t i = 0;
            while (i < n && ++digit[i] == base) digit[i++] = 0;
            if (i == n) break;
        }
    }
    return out;
}

std::vector<std::uint32_t> absolute_d(const WordSeq& s) {
    std::vector<std::uint32_t> d;
    std::uint32_t pos = 1;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        pos += static_cast<std::uint32_t>(s[i].size());
        d.push_back(pos);
    }
    return d;
}

bool in_family(const Ordinal& xi, std::size_t words, const std::vector<std::uint32_t>& d, const SchreierConfig& cfg) {
    if (words == 0) return false;
    if (xi.is_zero()) return words == 1;
    return mem_direct(xi, d, cfg);
}

CheckResult compare(std::vector<CertEntry> claimed, std::vector<CertEntry> found, const char* what) {
    std::sort(claimed.begin(), claimed.end());
    std::sort(found.begin(), found.end());
    if (found.empty()) return {false, std::string(what) + ": no members, witness is vacuous"};
    if (claimed != found) return {false, std::string(what) + ": certificate does not match recomputed members"};
    for (const auto& e : found)
        if (e.color != found.front().color) return {false, std::string(what) + ": not monochromatic"};
    return {true, ""};
}

}  // namespace

CheckResult ramsey_witness(const Ordinal& xi, const Coloring& chi, const verify::RamseyResult& w,
                           const SchreierConfig& cfg) {
    if (!w.found) return {false, "no witness to check"};
    const auto& L = w.L.elems();
    if (L.size() > 30) return {false, "witness set too large to re-check"};
    std::vector<CertEntry> found;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << L.size()); ++mask) {
        std::vector<std::uint32_t> s;
        for (std::size_t i = 0; i < L.size(); ++i)
            if (mask >> i & 1) s.push_back(L[i]);
        if (!mem_direct(xi, s, cfg)) continue;
        const FinSet fs(s);
        found.push_back({format(fs), color_of(chi, fs)});
    }
    if (mem_direct(xi, std::vector<std::uint32_t>{}, cfg)) {
        const FinSet empty;
        found.push_back({format(empty), color_of(chi, empty)});
    }
    auto r = compare(w.certificate, found, "ramsey");
    if (r.ok && found.front().color != w.color) return {false, "ramsey: reported color differs"};
    return r;
}

CheckResult carlson_witness(const verify::CarlsonParams& p, const verify::CarlsonResult& w) {
    if (!w.found) return {false, "no witness to check"};
    if (w.t.size() != p.depth) return {false, "carlson: witness has the wrong depth"};

    // u_i = w[t_i]: letter j of t_i is substituted into the next stream entry.
    WordSeq u;
    std::vector<std::uint32_t> starts;
    std::size_t pos = 0;
    for (const auto& ti : w.t) {
        if (!ti.is_variable()) return {false, "carlson: t contains a constant word"};
        starts.push_back(static_cast<std::uint32_t>(pos + 1));
        std::vector<Letter> letters;
        for (std::size_t j = 0; j < ti.size(); ++j, ++pos) {
            if (pos >= p.w.horizon()) return {false, "carlson: t runs past the stream horizon"};
            for (Letter x : p.w.prefix()[pos].letters()) letters.push_back(x == kVar ? ti[j] : x);
        }
        u.emplace_back(std::move(letters));
    }
    if (u != w.u) return {false, "carlson: u does not equal w[t]"};

    auto collect = [&](bool variable, const verify::SeqColor& chi) {
        std::vector<CertEntry> found;
        for (std::size_t j = 1; j <= u.size(); ++j) {
            const WordSeq prefix(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(j));
            for (const auto& r : all_reductions(prefix, p.alphabet, variable)) {
                std::vector<std::uint32_t> d;
                if (p.dmode == verify::DMode::Absolute) {
                    d = absolute_d(r.words);
                } else {
                    for (std::size_t b = 1; b < r.block_first.size(); ++b) d.push_back(starts[r.block_first[b]]);
                }
                if (in_family(p.xi, r.words.size(), d, p.cfg)) found.push_back({format(r.words, p.alphabet), chi(r.words)});
            }
        }
        return found;
    };
    if (p.chi1) {
        auto r = compare(w.cert_constant, collect(false, p.chi1), "carlson constant side");
        if (!r.ok) return r;
    }
    if (p.chi2) {
        auto r = compare(w.cert_variable, collect(true, p.chi2), "carlson variable side");
        if (!r.ok) return r;
    }
    return {true, ""};
}

CheckResult hj_witness(const Coloring& chi, std::size_t M, const Ordinal& xi, const Alphabet& a,
                       const verify::HjWitness& w, const SchreierConfig& cfg) {
    if (!w.found) return {false, "no witness to check"};
    std::size_t total = 0;
    for (const auto& x : w.w) {
        if (!x.is_variable()) return {false, "hj: witness words must be variable"};
        total += x.size();
    }
    if (total != M) return {false, "hj: witness length differs from M"};
    std::vector<CertEntry> found;
    for (const auto& r : all_reductions(w.w, a, false)) {
        if (!in_family(xi, r.words.size(), absolute_d(r.words), cfg)) continue;
        const unsigned col = color_of(chi, r.words, a);
        if (col != w.color) return {false, "hj: " + format(r.words, a) + " has color " + std::to_string(col)};
        found.push_back({format(r.words, a), col});
    }
    return compare(w.certificate, found, "hj");
}

}  // namespace srw::check
