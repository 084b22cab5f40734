#pragma once

#include "richwords/word.hpp"

#include <cstddef>
#include <cstdint>
#include <set>
#include <vector>

namespace richwords {

/// Append-only palindromic tree over a growing word, with undo of the last append.
///
/// For every prefix p of the indexed word it records |lps(p)| and whether lps(p) occurs
/// only once in p. A word is rich exactly when that flag holds for every prefix, so
/// `is_rich()` is O(1) after each append. `pop_back` restores the previous state, which
/// lets depth-first enumerators share a single index.
class PalIndex {
public:
    explicit PalIndex(Alphabet alphabet);
    explicit PalIndex(const Word& w);

    void push_back(Symbol s);
    void pop_back();
    void clear();

    [[nodiscard]] Alphabet alphabet() const noexcept { return alphabet_; }
    [[nodiscard]] std::size_t size() const noexcept { return text_.size(); }
    [[nodiscard]] std::span<const Symbol> symbols() const noexcept { return text_; }
    [[nodiscard]] Word word() const { return Word(alphabet_, std::span<const Symbol>(text_)); }

    /// |lps| of the prefix of length `prefix_len` (0 for ε).
    [[nodiscard]] std::size_t lps_length(std::size_t prefix_len) const noexcept;
    /// |lpps| of the prefix of length `prefix_len`; 0 when `prefix_len` <= 1.
    [[nodiscard]] std::size_t lpps_length(std::size_t prefix_len) const noexcept;
    /// Whether lps of that prefix is unioccurrent in it (true for ε).
    [[nodiscard]] bool lps_unioccurrent(std::size_t prefix_len) const noexcept;

    /// Distinct palindromic factors, counting ε.
    [[nodiscard]] std::size_t distinct_palindromes() const noexcept { return nodes_.size() - 1; }
    [[nodiscard]] bool is_rich() const noexcept { return repeats_ == 0; }

    /// The letter a with lps(wa) = a·lpps(w)·a for the current word w. For |w| = 1 this is
    /// w itself (lpps taken as ε); undefined for ε.
    [[nodiscard]] Symbol standard_letter() const;

    /// All distinct palindromic factors with the end position (exclusive) of their first
    /// occurrence, ε excluded.
    struct Palindrome {
        std::size_t first_end;
        std::size_t length;
    };
    [[nodiscard]] std::vector<Palindrome> palindromes() const;

private:
    struct Node {
        std::int32_t len;
        std::int32_t link;
        std::size_t first_end;
    };
    struct Step {
        std::int32_t node;    // lps node of the new prefix
        std::int32_t parent;  // node whose edge was added, or -1 when nothing was created
    };

    std::int32_t& edge(std::int32_t node, Symbol s) { return edges_[static_cast<std::size_t>(node) * q_ + s]; }
    [[nodiscard]] std::int32_t edge(std::int32_t node, Symbol s) const {
        return edges_[static_cast<std::size_t>(node) * q_ + s];
    }
    [[nodiscard]] std::int32_t fit(std::int32_t node, std::size_t pos, Symbol s) const;

    Alphabet alphabet_;
    std::size_t q_;
    std::vector<Symbol> text_;
    std::vector<Node> nodes_;
    std::vector<std::int32_t> edges_;
    std::vector<Step> steps_;
    std::size_t repeats_ = 0;
};

[[nodiscard]] Word lps(const Word& w);
[[nodiscard]] Word lpp(const Word& w);
/// Longest proper palindromic suffix/prefix; Length error when |w| < 2.
[[nodiscard]] Word lpps(const Word& w);
[[nodiscard]] Word lppp(const Word& w);

/// Palindromic factors including ε.
[[nodiscard]] std::set<Word> pal_factors(const Word& w);
/// Palindromic factors of w that do not contain r.
[[nodiscard]] std::set<Word> pal_factors_avoiding(const Word& w, const Word& r);

[[nodiscard]] bool is_rich(const Word& w);
[[nodiscard]] Word pal_closure(const Word& w);

/// Factors of w holding exactly two occurrences of u, as prefix and suffix.
/// Throws EmptyPattern for u = ε and NotAFactor when u does not occur in w.
[[nodiscard]] std::set<Word> complete_returns(const Word& w, const Word& u);

} // namespace richwords
