#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace srw {

struct Term;

// Cantor normal form below epsilon_0. Terms are kept with strictly decreasing
// exponents and positive coefficients, so structural equality is ordinal equality.
class Ordinal {
public:
    static constexpr int kMaxHeight = 24;

    Ordinal() = default;  // zero
    static Ordinal nat(std::uint64_t n);
    static Ordinal omega();

    // Builds from raw terms; validates ordering, coefficients and height.
    static Ordinal from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_natural() const;
    std::uint64_t as_natural() const;  // requires is_natural()
    int height() const;

    std::strong_ordering operator<=>(const Ordinal& other) const;
    bool operator==(const Ordinal& other) const;

private:
    std::vector<Term> terms_;
};

struct Term {
    Ordinal exponent;
    std::uint64_t coeff = 1;
    bool operator==(const Term&) const = default;
};

enum class OrdinalKind { Zero, Successor, Limit };

struct Classification {
    OrdinalKind kind;
    Ordinal pred;  // only meaningful for Successor
};

enum class LimitRule { FixedSeq, FixedSeqSucc };

std::strong_ordering compare(const Ordinal& a, const Ordinal& b);
Ordinal add(const Ordinal& a, const Ordinal& b);
Ordinal nat_mul(const Ordinal& a, std::uint64_t n);
Ordinal omega_pow(const Ordinal& a);
Classification classify(const Ordinal& a);
Ordinal succ(const Ordinal& a);

// (lambda)_n and the successor-valued variant.
Ordinal fixed_seq(const Ordinal& lambda, std::uint64_t n);
Ordinal fixed_seq_succ(const Ordinal& lambda, std::uint64_t n);
std::vector<Ordinal> fixed_seq_succ_trace(const Ordinal& lambda, std::uint64_t n);
Ordinal limit_step(const Ordinal& lambda, std::uint64_t n, LimitRule rule);

Ordinal parse_ordinal(std::string_view text);
std::string format(const Ordinal& a);

std::string to_string(LimitRule rule);
LimitRule parse_limit_rule(std::string_view text);

}  // namespace srw
