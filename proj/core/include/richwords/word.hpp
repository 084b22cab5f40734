#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace richwords {

using Symbol = std::uint8_t;

/// A finite alphabet {0, ..., q-1}. Symbols print as '0'..'9' then 'a'..'z'.
class Alphabet {
public:
    static constexpr int max_size = 36;

    Alphabet() = default;
    explicit Alphabet(int q);

    [[nodiscard]] int size() const noexcept { return q_; }
    [[nodiscard]] bool contains(Symbol s) const noexcept { return s < q_; }

    [[nodiscard]] static char display(Symbol s);
    [[nodiscard]] static std::optional<Symbol> symbol_of(char c) noexcept;

    friend bool operator==(Alphabet, Alphabet) = default;

private:
    int q_ = 1;
};

/// Immutable finite word over an Alphabet.
class Word {
public:
    Word() = default;
    explicit Word(Alphabet alphabet) : alphabet_(alphabet) {}
    Word(Alphabet alphabet, std::vector<Symbol> symbols);
    Word(Alphabet alphabet, std::span<const Symbol> symbols);

    /// Parses display characters ("-" or "ε" is the empty word); throws InvalidSymbol on
    /// characters outside the alphabet.
    static Word parse(std::string_view text, Alphabet alphabet);

    [[nodiscard]] Alphabet alphabet() const noexcept { return alphabet_; }
    [[nodiscard]] std::size_t size() const noexcept { return symbols_.size(); }
    [[nodiscard]] bool empty() const noexcept { return symbols_.empty(); }
    [[nodiscard]] Symbol operator[](std::size_t i) const noexcept { return symbols_[i]; }
    [[nodiscard]] Symbol front() const noexcept { return symbols_.front(); }
    [[nodiscard]] Symbol back() const noexcept { return symbols_.back(); }
    [[nodiscard]] std::span<const Symbol> symbols() const noexcept { return symbols_; }
    [[nodiscard]] auto begin() const noexcept { return symbols_.begin(); }
    [[nodiscard]] auto end() const noexcept { return symbols_.end(); }

    /// Factor of length `len` starting at `pos`; clamps like std::string::substr.
    [[nodiscard]] Word substr(std::size_t pos, std::size_t len = static_cast<std::size_t>(-1)) const;
    [[nodiscard]] Word prefix(std::size_t len) const { return substr(0, len); }
    [[nodiscard]] Word suffix(std::size_t len) const;
    [[nodiscard]] Word appended(Symbol s) const;

    [[nodiscard]] std::string to_string() const;

    friend Word operator+(const Word& a, const Word& b);

    friend bool operator==(const Word& a, const Word& b) noexcept {
        return a.alphabet_ == b.alphabet_ && a.symbols_ == b.symbols_;
    }
    // Shortlex would be nicer for printing sets, but plain lexicographic order is what
    // candidate orderings in the eliminator rely on.
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) noexcept {
        if (auto c = a.symbols_ <=> b.symbols_; c != 0) return c;
        return a.alphabet_.size() <=> b.alphabet_.size();
    }

private:
    Alphabet alphabet_;
    std::vector<Symbol> symbols_;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept;
};

// Throws AlphabetMismatch unless both words share the alphabet.
void require_same_alphabet(const Word& a, const Word& b);

[[nodiscard]] Word reverse(const Word& w);
[[nodiscard]] Word trim(const Word& w);
[[nodiscard]] Word ltrim(const Word& w);
[[nodiscard]] Word rtrim(const Word& w);

[[nodiscard]] Word lcp(const Word& a, const Word& b);
[[nodiscard]] Word lcs(const Word& a, const Word& b);

[[nodiscard]] bool is_prefix(const Word& w, const Word& p) noexcept;
[[nodiscard]] bool is_suffix(const Word& w, const Word& s) noexcept;
[[nodiscard]] bool is_palindrome(std::span<const Symbol> s) noexcept;
[[nodiscard]] inline bool is_palindrome(const Word& w) noexcept { return is_palindrome(w.symbols()); }

/// Number of (possibly overlapping) occurrences of `pattern` in `text`.
[[nodiscard]] std::size_t occ(const Word& text, const Word& pattern);
/// Start positions of all occurrences, ascending.
[[nodiscard]] std::vector<std::size_t> occurrences(const Word& text, const Word& pattern);
[[nodiscard]] std::optional<std::size_t> find(const Word& text, const Word& pattern, std::size_t from = 0);

[[nodiscard]] bool is_factor(const Word& w, const Word& v);
[[nodiscard]] std::set<Word> factors(const Word& w);

/// Visits every factor occurrence (start, length), including ε once and repeats of
/// equal factors at different positions.
void for_each_factor(const Word& w, const std::function<void(std::size_t, std::size_t)>& visit);

/// Text format: optional header line "q=<n>", then one word per line. Blank lines and
/// lines starting with '#' are skipped. Without a header q = max symbol + 1.
[[nodiscard]] std::vector<Word> read_words(std::istream& in);
void write_words(std::ostream& out, std::span<const Word> words, bool with_header = true);

/// Smallest alphabet containing every character of every text; throws InvalidSymbol.
[[nodiscard]] Alphabet infer_alphabet(std::span<const std::string> texts);

} // namespace richwords
