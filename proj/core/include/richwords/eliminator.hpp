#pragma once

#include "richwords/reduction.hpp"
#include "richwords/word.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace richwords {

/// Number of positions where u or uᴿ starts in w (a palindrome is counted once per
/// position). u is reverse-unioccurrent in w when this is exactly 1.
[[nodiscard]] std::size_t reverse_occ(const Word& w, const Word& u);
[[nodiscard]] inline bool reverse_unioccurrent(const Word& w, const Word& u) { return reverse_occ(w, u) == 1; }

/// First factor t of w, ordered by (length, start), such that w1 and w2 are
/// reverse-unioccurrent in t, t starts with w1 or w1ᴿ and ends with w2 or w2ᴿ.
/// w must start with w1 or w1ᴿ and end with w2 or w2ᴿ; the orientation is free because
/// elm feeds back words whose prefix may have been reversed.
/// Throws Precondition when the inputs are invalid or no such factor exists.
[[nodiscard]] Word ruo(const Word& w, const Word& w1, const Word& w2);
/// As ruo, but nullopt instead of throwing when the candidate set is empty.
[[nodiscard]] std::optional<Word> try_ruo(const Word& w, const Word& w1, const Word& w2);

/// Lexicographically first r with (w, r) in Gamma and |r| > n, or ε.
[[nodiscard]] Word mfp(const Word& w, std::size_t n);

struct EliminationStep {
    Word before;
    Word r;
    ReductionTrace reduction;
    Word after_ruo;
};

struct EliminationTrace {
    Word w;
    Word w1;
    Word w2;
    std::size_t m = 0;
    Word initial;  // ruo(w, w1, w2)
    std::vector<EliminationStep> steps;
    Word final_word;
    std::size_t iteration_cap = 0;  // sum of occ(w, r) over flexed r of w

    [[nodiscard]] std::size_t iterations() const noexcept { return steps.size(); }
};

/// Repeatedly removes maximal flexed palindromes longer than m = max(|w1|, |w2|) while
/// keeping w1 (or w1ᴿ) as prefix and w2 (or w2ᴿ) as suffix:
///
///     res := ruo(w, w1, w2)
///     while (r := mfp(res, m)) != ε:
///         res := ruo(rdc_wrd(res, r), w1, w2)
///
/// Requires w, w1, w2 rich, w1 a prefix and w2 a suffix of w. Exceeding the iteration
/// cap raises InternalInconsistency.
[[nodiscard]] EliminationTrace elm(const Word& w, const Word& w1, const Word& w2);

[[nodiscard]] std::string to_json(const EliminationTrace& trace);

} // namespace richwords
