#include "srw/words.hpp"

#include <algorithm>

#include "srw/error.hpp"

namespace srw {

Alphabet::Alphabet() : Alphabet(std::vector<std::string>{"a", "b"}) {}

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
    if (symbols_.empty()) fail(ErrorCode::Invalid, "alphabet must be non-empty");
    if (symbols_.size() >= kVar) fail(ErrorCode::Invalid, "alphabet too large");
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        const auto& s = symbols_[i];
        if (s.empty()) fail(ErrorCode::Invalid, "empty symbol name");
        if (s.find_first_of("_,(){}: \t") != std::string::npos)
            fail(ErrorCode::Invalid, "symbol '" + s + "' contains a reserved character");
        for (std::size_t j = 0; j < i; ++j)
            if (symbols_[j] == s) fail(ErrorCode::Invalid, "duplicate symbol '" + s + "'");
    }
}

const std::string& Alphabet::name(Letter l) const {
    static const std::string var = "_";
    if (l == kVar) return var;
    if (l >= symbols_.size()) fail(ErrorCode::Invalid, "letter outside the alphabet");
    return symbols_[l];
}

std::vector<Letter> Alphabet::letters(bool with_var) const {
    std::vector<Letter> out;
    for (std::size_t i = 0; i < symbols_.size(); ++i) out.push_back(static_cast<Letter>(i));
    if (with_var) out.push_back(kVar);
    return out;
}

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

bool Word::is_variable() const { return std::find(letters_.begin(), letters_.end(), kVar) != letters_.end(); }

std::string to_string(Side s) { return s == Side::Constant ? "constant" : "variable"; }

Side parse_side(std::string_view text) {
    if (text == "c" || text == "constant") return Side::Constant;
    if (text == "v" || text == "variable") return Side::Variable;
    fail(ErrorCode::Invalid, "side must be c|v, got '" + std::string(text) + "'");
}

namespace {

Word parse_word_at(std::string_view text, std::size_t offset, const Alphabet& a) {
    std::vector<Letter> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] == '_') {
            out.push_back(kVar);
            ++pos;
            continue;
        }
        std::size_t best = 0;
        Letter which = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            const auto& sym = a.symbols()[i];
            if (sym.size() > best && text.substr(pos, sym.size()) == sym) {
                best = sym.size();
                which = static_cast<Letter>(i);
            }
        }
        if (best == 0) throw ParseError(offset + pos, "unknown symbol");
        out.push_back(which);
        pos += best;
    }
    if (out.empty()) throw ParseError(offset, "words must be non-empty");
    return Word(std::move(out));
}

std::string_view trim(std::string_view s, std::size_t& lead) {
    lead = 0;
    while (lead < s.size() && (s[lead] == ' ' || s[lead] == '\t')) ++lead;
    std::size_t end = s.size();
    while (end > lead && (s[end - 1] == ' ' || s[end - 1] == '\t')) --end;
    return s.substr(lead, end - lead);
}

}  // namespace

Word parse_word(std::string_view text, const Alphabet& a) {
    std::size_t lead = 0;
    return parse_word_at(trim(text, lead), lead, a);
}

std::string format(const Word& w, const Alphabet& a) {
    std::string out;
    for (Letter l : w.letters()) out += a.name(l);
    return out;
}

WordSeq parse_wordseq(std::string_view text, const Alphabet& a) {
    std::size_t lead = 0;
    std::string_view t = trim(text, lead);
    if (t.size() < 2 || t.front() != '(' || t.back() != ')') throw ParseError(lead, "word sequences are written (w1,w2,...)");
    std::string_view body = t.substr(1, t.size() - 2);
    WordSeq out;
    std::size_t inner_lead = 0;
    if (trim(body, inner_lead).empty()) return out;
    std::size_t start = 0;
    for (;;) {
        std::size_t comma = body.find(',', start);
        std::string_view piece = body.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        std::size_t pl = 0;
        std::string_view tp = trim(piece, pl);
        if (tp.empty()) throw ParseError(lead + 1 + start + pl, "empty word in sequence");
        out.push_back(parse_word_at(tp, lead + 1 + start + pl, a));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string format(const WordSeq& s, const Alphabet& a) {
    std::string out = "(";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ',';
        out += format(s[i], a);
    }
    return out + ")";
}

std::size_t total_letters(const WordSeq& s) {
    std::size_t n = 0;
    for (const auto& w : s) n += w.size();
    return n;
}

bool all_variable(const WordSeq& s) {
    return std::all_of(s.begin(), s.end(), [](const Word& w) { return w.is_variable(); });
}

bool all_constant(const WordSeq& s) {
    return std::none_of(s.begin(), s.end(), [](const Word& w) { return w.is_variable(); });
}

bool is_seq_prefix(const WordSeq& a, const WordSeq& b) {
    return a.size() < b.size() && std::equal(a.begin(), a.end(), b.begin());
}

namespace words {

Word concat(const Word& a, const Word& b) {
    std::vector<Letter> out = a.letters();
    out.insert(out.end(), b.letters().begin(), b.letters().end());
    return Word(std::move(out));
}

Word concat_all(const WordSeq& s) {
    std::vector<Letter> out;
    for (const auto& w : s) out.insert(out.end(), w.letters().begin(), w.letters().end());
    return Word(std::move(out));
}

Word substitute(const Word& w, Letter alpha) {
    if (!w.is_variable()) fail(ErrorCode::Invalid, "substitution needs a variable word");
    std::vector<Letter> out = w.letters();
    std::replace(out.begin(), out.end(), kVar, alpha);
    return Word(std::move(out));
}

bool is_prefix(const Word& w1, const Word& w2, Side mode) {
    if (w1.size() >= w2.size()) return false;
    if (!std::equal(w1.letters().begin(), w1.letters().end(), w2.letters().begin())) return false;
    if (mode == Side::Constant) return true;
    return std::find(w2.letters().begin() + static_cast<std::ptrdiff_t>(w1.size()), w2.letters().end(), kVar) !=
           w2.letters().end();
}

Word diff(const Word& w2, const Word& w1, Side mode) {
    if (!is_prefix(w1, w2, mode)) fail(ErrorCode::Invalid, "diff needs a strict prefix");
    return Word(std::vector<Letter>(w2.letters().begin() + static_cast<std::ptrdiff_t>(w1.size()), w2.letters().end()));
}

FinSet d_map(const WordSeq& s) {
    if (s.empty()) fail(ErrorCode::Invalid, "d is undefined on the empty sequence");
    std::vector<std::uint32_t> out;
    std::uint32_t k = 1;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        k += static_cast<std::uint32_t>(s[i].size());
        out.push_back(k);
    }
    return FinSet(std::move(out));
}

}  // namespace words

// ---------------------------------------------------------------- streams

VarWordStream::VarWordStream(std::vector<Word> prefix, std::string tag) : prefix_(std::move(prefix)), tag_(std::move(tag)) {
    if (prefix_.empty()) fail(ErrorCode::Invalid, "stream horizon must be at least 1");
    for (const auto& w : prefix_)
        if (!w.is_variable()) fail(ErrorCode::Invalid, "stream entries must be variable words");
}

VarWordStream VarWordStream::identity(std::size_t horizon) {
    return VarWordStream(std::vector<Word>(horizon, Word({kVar})), "e");
}

VarWordStream VarWordStream::periodic(const WordSeq& pattern, std::size_t horizon) {
    if (pattern.empty()) fail(ErrorCode::Invalid, "periodic pattern must be non-empty");
    std::vector<Word> out;
    for (std::size_t i = 0; i < horizon; ++i) out.push_back(pattern[i % pattern.size()]);
    return VarWordStream(std::move(out), "periodic");
}

const Word& VarWordStream::at(std::size_t i) const {
    if (i >= prefix_.size())
        fail(ErrorCode::Horizon, "stream read at position " + std::to_string(i + 1) + " beyond horizon " +
                                     std::to_string(prefix_.size()));
    return prefix_[i];
}

VarWordStream parse_stream(std::string_view desc, const Alphabet& a) {
    auto number = [&](std::string_view t) {
        if (t.empty() || t.find_first_not_of("0123456789") != std::string_view::npos)
            fail(ErrorCode::Invalid, "bad stream horizon '" + std::string(t) + "'");
        return static_cast<std::size_t>(std::stoull(std::string(t)));
    };
    if (desc.rfind("e:", 0) == 0) return VarWordStream::identity(number(desc.substr(2)));
    if (desc.rfind("list:", 0) == 0) return VarWordStream(parse_wordseq(desc.substr(5), a), "list");
    if (desc.rfind("periodic:", 0) == 0) {
        std::string_view rest = desc.substr(9);
        const auto colon = rest.rfind(':');
        if (colon == std::string_view::npos) fail(ErrorCode::Invalid, "periodic stream needs ':<horizon>'");
        return VarWordStream::periodic(parse_wordseq(rest.substr(0, colon), a), number(rest.substr(colon + 1)));
    }
    fail(ErrorCode::Invalid, "unknown stream description '" + std::string(desc) + "'");
}

std::string describe(const VarWordStream& s, const Alphabet& a) {
    return s.tag() + ":" + format(WordSeq(s.prefix()), a);
}

namespace words {

Word reduce_word(const VarWordStream& w, const Word& t) {
    if (t.size() > w.horizon())
        fail(ErrorCode::Horizon, "reduction needs " + std::to_string(t.size()) + " stream entries, horizon is " +
                                     std::to_string(w.horizon()));
    std::vector<Letter> out;
    for (std::size_t i = 0; i < t.size(); ++i) {
        const Word piece = substitute(w.at(i), t[i]);
        out.insert(out.end(), piece.letters().begin(), piece.letters().end());
    }
    return Word(std::move(out));
}

namespace {

// Reduces t as consecutive blocks starting at stream position `from`.
WordSeq reduce_blocks(const VarWordStream& w, const WordSeq& t, std::size_t from) {
    WordSeq out;
    std::size_t pos = from;
    for (const auto& block : t) {
        std::vector<Letter> u;
        for (Letter l : block.letters()) {
            const Word piece = substitute(w.at(pos++), l);
            u.insert(u.end(), piece.letters().begin(), piece.letters().end());
        }
        out.emplace_back(std::move(u));
    }
    return out;
}

}  // namespace

Reduction reduce_seq(const VarWordStream& w, const WordSeq& t) {
    Reduction r;
    if (t.empty()) return r;
    const std::size_t need = total_letters(t);
    if (need > w.horizon())
        fail(ErrorCode::Horizon, "reduction needs " + std::to_string(need) + " stream entries, horizon is " +
                                     std::to_string(w.horizon()));
    r.words = reduce_blocks(w, t, 0);
    r.d = d_map(t);
    r.consumed = need;
    return r;
}

Reduction reduce_stream(const VarWordStream& w, const WordSeq& t_prefix) {
    WordSeq fit;
    std::size_t used = 0;
    for (const auto& b : t_prefix) {
        if (used + b.size() > w.horizon()) break;
        used += b.size();
        fit.push_back(b);
    }
    if (fit.empty()) fail(ErrorCode::Horizon, "no whole block of the reducing stream fits in the horizon");
    return reduce_seq(w, fit);
}

VarWordStream as_stream(const Reduction& r, std::string tag) { return VarWordStream(r.words, std::move(tag)); }

ReducedWords reduced_words(const WordSeq& w, const Alphabet& a) {
    if (!all_variable(w)) fail(ErrorCode::Invalid, "reduced words need a sequence of variable words");
    ReducedWords out;
    const auto subs = a.letters(true);
    std::vector<std::size_t> idx(w.size(), 0);
    for (;;) {
        std::vector<Letter> word;
        bool has_var = false;
        for (std::size_t i = 0; i < w.size(); ++i) {
            const Letter l = subs[idx[i]];
            has_var |= l == kVar;
            const Word piece = substitute(w[i], l);
            word.insert(word.end(), piece.letters().begin(), piece.letters().end());
        }
        (has_var ? out.vrw : out.rw).insert(Word(std::move(word)));
        std::size_t i = 0;
        while (i < idx.size() && ++idx[i] == subs.size()) idx[i++] = 0;
        if (i == idx.size()) break;
    }
    return out;
}

namespace {

struct BlockWalker {
    const std::vector<Word>& src;
    const std::vector<Letter>& symbols;  // constant substitutions
    Side side;
    std::size_t limit_positions;
    std::size_t limit_words;
    bool must_cover;  // finite_reductions: blocks must cover all of src
    std::size_t budget;
    std::vector<Reduction>& out;

    WordSeq acc;
    std::vector<std::uint32_t> starts;

    void emit(std::size_t pos) {
        if (out.size() >= budget) fail(ErrorCode::Budget, "reduction enumeration budget exceeded");
        Reduction r;
        r.words = acc;
        r.d = FinSet(std::vector<std::uint32_t>(starts.begin() + (starts.empty() ? 0 : 1), starts.end()));
        r.consumed = pos;
        out.push_back(std::move(r));
    }

    // Fill block letters position by position.
    void block(std::size_t pos, std::size_t start, std::vector<Letter>& word, bool has_var) {
        // close the block here (if non-empty)
        if (pos > start && (side == Side::Constant || has_var)) {
            acc.emplace_back(word);
            starts.push_back(static_cast<std::uint32_t>(start + 1));
            walk(pos);
            starts.pop_back();
            acc.pop_back();
        }
        if (pos >= limit_positions) return;
        const Word& w = src[pos];
        const std::size_t mark = word.size();
        auto extend = [&](Letter l, bool v) {
            for (Letter x : w.letters()) word.push_back(x == kVar ? l : x);
            block(pos + 1, start, word, has_var || v);
            word.resize(mark);
        };
        for (Letter l : symbols) extend(l, false);
        if (side == Side::Variable) extend(kVar, true);
    }

    void walk(std::size_t pos) {
        if (!must_cover || pos == limit_positions) emit(pos);
        if (pos >= limit_positions || acc.size() >= limit_words) return;
        std::vector<Letter> word;
        block(pos, pos, word, false);
    }
};

}  // namespace

FiniteReductions finite_reductions(const WordSeq& w, const Alphabet& a, std::size_t budget) {
    if (!all_variable(w)) fail(ErrorCode::Invalid, "finite reductions need a sequence of variable words");
    FiniteReductions out;
    const auto symbols = a.letters(false);
    for (Side side : {Side::Constant, Side::Variable}) {
        auto& dst = side == Side::Constant ? out.rw : out.vrw;
        dst.push_back(Reduction{});
        if (w.empty()) continue;
        BlockWalker bw{w, symbols, side, w.size(), w.size(), true, budget, dst, {}, {}};
        std::vector<Letter> word;
        bw.block(0, 0, word, false);
        std::sort(dst.begin(), dst.end());
    }
    return out;
}

std::vector<Reduction> stream_reductions(const VarWordStream& w, const Alphabet& a, Side side, std::size_t max_positions,
                                         std::size_t max_words, std::size_t budget) {
    if (max_positions > w.horizon())
        fail(ErrorCode::Horizon, "requested " + std::to_string(max_positions) + " positions beyond horizon " +
                                     std::to_string(w.horizon()));
    std::vector<Reduction> out;
    const auto symbols = a.letters(false);
    BlockWalker bw{w.prefix(), symbols, side, max_positions, max_words, false, budget, out, {}, {}};
    bw.walk(0);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Matches src[pos] against the letters of u starting at offset; returns the
// substituted letter, or nullopt if no single substitution reproduces them.
std::optional<Letter> match_entry(const Word& src, const Word& u, std::size_t offset) {
    if (offset + src.size() > u.size()) return std::nullopt;
    std::optional<Letter> alpha;
    for (std::size_t i = 0; i < src.size(); ++i) {
        const Letter got = u[offset + i];
        if (src[i] == kVar) {
            if (alpha && *alpha != got) return std::nullopt;
            alpha = got;
        } else if (src[i] != got) {
            return std::nullopt;
        }
    }
    return alpha;  // src is variable, so alpha is set
}

}  // namespace

std::optional<Preimage> find_reduction(const VarWordStream& w, const WordSeq& u, Side side) {
    Preimage p;
    std::size_t pos = 0;
    for (const auto& word : u) {
        std::vector<Letter> t;
        std::size_t off = 0;
        bool has_var = false;
        while (off < word.size()) {
            if (pos >= w.horizon()) return std::nullopt;
            auto alpha = match_entry(w.at(pos), word, off);
            if (!alpha) return std::nullopt;
            if (*alpha == kVar) {
                if (side == Side::Constant) return std::nullopt;
                has_var = true;
            }
            t.push_back(*alpha);
            off += w.at(pos).size();
            ++pos;
        }
        if (side == Side::Variable && !has_var) return std::nullopt;
        p.t.emplace_back(std::move(t));
    }
    p.consumed = pos;
    return p;
}

std::optional<Preimage> find_word_reduction(const VarWordStream& w, const Word& x, Side side) {
    return find_reduction(w, WordSeq{x}, side);
}

std::set<WordSeq> family_shift(const std::set<WordSeq>& g, const Word& s, Side mode) {
    std::set<WordSeq> out;
    for (const auto& m : g) {
        if (m.empty() || m[0] != s) continue;
        if (m.size() == 1) {
            out.insert(WordSeq{});
            continue;
        }
        if (mode == Side::Variable && !m[1].is_variable()) continue;
        WordSeq shifted;
        shifted.push_back(concat(s, m[1]));
        shifted.insert(shifted.end(), m.begin() + 2, m.end());
        out.insert(std::move(shifted));
    }
    return out;
}

std::set<WordSeq> family_minus(const std::set<WordSeq>& g, const Word& s, Side mode) {
    std::set<WordSeq> out;
    for (const auto& m : g)
        if (m.empty() || is_prefix(s, m[0], mode)) out.insert(m);
    return out;
}

namespace {

std::size_t realized_prefix(const VarWordStream& w, const Word& t) {
    auto p = find_word_reduction(w, t, t.is_variable() ? Side::Variable : Side::Constant);
    if (!p) fail(ErrorCode::Invalid, "word is not a reduction of any prefix of the stream");
    return p->consumed;
}

}  // namespace

VarWordStream stream_minus(const VarWordStream& w, const Word& t) {
    const std::size_t k = realized_prefix(w, t);
    std::vector<Word> out{concat(t, w.at(k))};
    out.insert(out.end(), w.prefix().begin() + static_cast<std::ptrdiff_t>(k) + 1, w.prefix().end());
    return VarWordStream(std::move(out), w.tag() + "-t");
}

VarWordStream stream_drop(const VarWordStream& w, const Word& t) {
    const std::size_t k = realized_prefix(w, t);
    if (k >= w.horizon()) fail(ErrorCode::Horizon, "nothing of the stream is left inside the horizon");
    return VarWordStream(std::vector<Word>(w.prefix().begin() + static_cast<std::ptrdiff_t>(k), w.prefix().end()),
                         w.tag() + "\\t");
}

}  // namespace words
}  // namespace srw
