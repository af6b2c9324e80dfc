#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "srw/schreier.hpp"

namespace srw {

using Letter = std::uint8_t;
inline constexpr Letter kVar = 0xFF;  // the variable; sorts after every symbol

class Alphabet {
public:
    Alphabet();  // {a, b}
    explicit Alphabet(std::vector<std::string> symbols);

    std::size_t size() const { return symbols_.size(); }
    const std::vector<std::string>& symbols() const { return symbols_; }
    const std::string& name(Letter l) const;
    // Symbols in declared order, optionally followed by the variable.
    std::vector<Letter> letters(bool with_var) const;

    bool operator==(const Alphabet&) const = default;

private:
    std::vector<std::string> symbols_;
};

class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters);

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    bool is_variable() const;
    Letter operator[](std::size_t i) const { return letters_[i]; }

    auto operator<=>(const Word&) const = default;

private:
    std::vector<Letter> letters_;
};

using WordSeq = std::vector<Word>;

enum class Side { Constant, Variable };
std::string to_string(Side s);
Side parse_side(std::string_view text);

Word parse_word(std::string_view text, const Alphabet& a);
std::string format(const Word& w, const Alphabet& a);
WordSeq parse_wordseq(std::string_view text, const Alphabet& a);
std::string format(const WordSeq& s, const Alphabet& a);

std::size_t total_letters(const WordSeq& s);
bool all_variable(const WordSeq& s);
bool all_constant(const WordSeq& s);
// Strict initial segment of sequences.
bool is_seq_prefix(const WordSeq& a, const WordSeq& b);

namespace words {

Word concat(const Word& a, const Word& b);
Word concat_all(const WordSeq& s);
Word substitute(const Word& w, Letter alpha);
// Strict prefix; in variable mode the remainder must contain the variable.
bool is_prefix(const Word& w1, const Word& w2, Side mode);
Word diff(const Word& w2, const Word& w1, Side mode = Side::Constant);
FinSet d_map(const WordSeq& s);

}  // namespace words

// Finite prefix of an infinite sequence of variable words.
class VarWordStream {
public:
    VarWordStream() = default;
    VarWordStream(std::vector<Word> prefix, std::string tag);

    static VarWordStream identity(std::size_t horizon);  // e = (v, v, v, ...)
    static VarWordStream periodic(const WordSeq& pattern, std::size_t horizon);

    std::size_t horizon() const { return prefix_.size(); }
    const Word& at(std::size_t i) const;  // 0-based; throws past the horizon
    const std::vector<Word>& prefix() const { return prefix_; }
    const std::string& tag() const { return tag_; }

private:
    std::vector<Word> prefix_;
    std::string tag_;
};

// "e:<N>", "periodic:<seq>:<N>", "list:<seq>"
VarWordStream parse_stream(std::string_view desc, const Alphabet& a);
std::string describe(const VarWordStream& s, const Alphabet& a);

// A reduced sequence together with its complexity relative to the source.
struct Reduction {
    WordSeq words;
    FinSet d;
    std::size_t consumed = 0;  // source positions used
    auto operator<=>(const Reduction&) const = default;
};

namespace words {

Word reduce_word(const VarWordStream& w, const Word& t);
Reduction reduce_seq(const VarWordStream& w, const WordSeq& t);

// Whole blocks of t that fit in the horizon; throws if not even one fits.
Reduction reduce_stream(const VarWordStream& w, const WordSeq& t_prefix);
VarWordStream as_stream(const Reduction& r, std::string tag);

struct ReducedWords {
    std::set<Word> rw;
    std::set<Word> vrw;
};
ReducedWords reduced_words(const WordSeq& w, const Alphabet& a);

struct FiniteReductions {
    std::vector<Reduction> rw;   // includes the empty sequence
    std::vector<Reduction> vrw;  // includes the empty sequence
};
// Reductions of the finite sequence w covering all of it.
FiniteReductions finite_reductions(const WordSeq& w, const Alphabet& a, std::size_t budget = 2'000'000);

// All reductions of the stream with at most max_letters source positions and
// at most max_words words (both sides, empty sequence included).
std::vector<Reduction> stream_reductions(const VarWordStream& w, const Alphabet& a, Side side, std::size_t max_positions,
                                         std::size_t max_words, std::size_t budget = 4'000'000);

// The preimage t with w[t] = u, if any.
struct Preimage {
    WordSeq t;
    std::size_t consumed = 0;
};
std::optional<Preimage> find_reduction(const VarWordStream& w, const WordSeq& u, Side side);
// Reduced word of (w_1..w_k) matching x, with k recovered from |x|.
std::optional<Preimage> find_word_reduction(const VarWordStream& w, const Word& x, Side side);

std::set<WordSeq> family_shift(const std::set<WordSeq>& g, const Word& s, Side mode);
std::set<WordSeq> family_minus(const std::set<WordSeq>& g, const Word& s, Side mode);

VarWordStream stream_minus(const VarWordStream& w, const Word& t);
VarWordStream stream_drop(const VarWordStream& w, const Word& t);

}  // namespace words

}  // namespace srw
