// core.hpp -- alphabets, symbols, labels and words shared by all machines.

#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace edist {

using StateId = std::uint32_t;
using Symbol = std::uint32_t;

/// A word is a sequence of symbol ids over some Alphabet.
using Word = std::vector<Symbol>;

/// A transition label: either a symbol of the alphabet or the empty label.
class Label {
public:
    constexpr Label() noexcept : raw_(kEpsilonRaw) {}
    constexpr explicit Label(Symbol s) noexcept : raw_(s) {}

    static constexpr Label epsilon() noexcept { return Label(); }

    constexpr bool is_epsilon() const noexcept { return raw_ == kEpsilonRaw; }
    constexpr Symbol symbol() const noexcept { return raw_; }

    /// Total order used for deterministic serialization: epsilon first,
    /// then symbols in alphabet order.
    constexpr std::uint64_t sort_key() const noexcept {
        return is_epsilon() ? 0 : std::uint64_t{raw_} + 1;
    }

    friend constexpr bool operator==(Label a, Label b) noexcept { return a.raw_ == b.raw_; }
    friend constexpr bool operator!=(Label a, Label b) noexcept { return a.raw_ != b.raw_; }

private:
    static constexpr std::uint32_t kEpsilonRaw = std::numeric_limits<std::uint32_t>::max();
    std::uint32_t raw_;
};

/// An ordered finite set of symbol tokens. Symbols are dense ids (0..size-1)
/// in declaration order; that order is also the tie-break order everywhere a
/// deterministic word order is needed. Tokens may be multi-character.
class Alphabet {
public:
    Alphabet() = default;

    explicit Alphabet(std::vector<std::string> symbols) : tokens_(std::move(symbols)) {
        for (Symbol s = 0; s < tokens_.size(); ++s) {
            const std::string& tok = tokens_[s];
            if (tok.empty())
                throw std::invalid_argument("alphabet symbol token must be nonempty");
            if (tok == "@epsilon")
                throw std::invalid_argument("'@epsilon' is reserved for the empty label");
            if (tok.find_first_of(" \t\r\n") != std::string::npos)
                throw std::invalid_argument("alphabet symbol token contains whitespace: '" + tok + "'");
            if (!index_.emplace(tok, s).second)
                throw std::invalid_argument("duplicate alphabet symbol: '" + tok + "'");
        }
    }

    /// One single-character token per character, e.g. from_chars("ab").
    static Alphabet from_chars(std::string_view chars) {
        std::vector<std::string> toks;
        toks.reserve(chars.size());
        for (char c : chars) toks.emplace_back(1, c);
        return Alphabet(std::move(toks));
    }

    std::size_t size() const noexcept { return tokens_.size(); }

    const std::string& token(Symbol s) const { return tokens_.at(s); }

    std::optional<Symbol> find(std::string_view tok) const {
        auto it = index_.find(std::string(tok));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    Symbol require(std::string_view tok) const {
        auto s = find(tok);
        if (!s) throw std::invalid_argument("unknown alphabet symbol: '" + std::string(tok) + "'");
        return *s;
    }

    /// Convert a character-per-symbol string; valid only when every token is
    /// a single character. Test and diagnostics convenience.
    Word word_from_chars(std::string_view chars) const {
        Word w;
        w.reserve(chars.size());
        for (char c : chars) w.push_back(require(std::string_view(&c, 1)));
        return w;
    }

    /// Tokens joined without separator; unambiguous for single-char tokens.
    std::string format_word(const Word& w) const {
        std::string out;
        for (Symbol s : w) out += token(s);
        return out;
    }

    friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.tokens_ == b.tokens_; }

private:
    std::vector<std::string> tokens_;
    std::unordered_map<std::string, Symbol> index_;
};

/// Length-lexicographic word order (shorter first, then symbol order).
inline bool length_lex_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

}  // namespace edist
