#pragma once

#include "richwords/pal_index.hpp"
#include "richwords/word.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace richwords {

struct EnumConfig {
    int q = 2;
    std::size_t max_length = 0;
    /// Emit one representative per letter-renaming class: letters first appear in the
    /// order 0, 1, 2, ...
    bool canonical = false;
    /// >1 splits the tree by first letter across threads; the visitor is then called
    /// concurrently and in no particular order across subtrees.
    unsigned threads = 1;
};

/// Visits every rich word of length <= max_length (ε included) depth-first: a word
/// before its extensions, letters ascending. The index holds the visited word.
void for_each_rich(const EnumConfig& config, const std::function<void(const PalIndex&)>& visit);

[[nodiscard]] std::vector<Word> enumerate_rich(const EnumConfig& config);
/// counts[n] = number of rich words of length n, for n = 0..max_length.
[[nodiscard]] std::vector<std::uint64_t> count_rich(const EnumConfig& config);

struct SearchBudget {
    std::size_t max_length = 12;
    std::uint64_t max_nodes = 10'000'000;
};

enum class SearchStatus { Witness, ExhaustedBudget };

[[nodiscard]] std::string_view to_string(SearchStatus s);

struct SearchVerdict {
    SearchStatus status = SearchStatus::ExhaustedBudget;
    std::optional<Word> witness;
    std::uint64_t explored = 0;
    SearchBudget budget;
};

/// Looks for a rich word containing both w1 and w2. Iterative deepening over the
/// rich-extension tree (standard child first). A node containing w1 or w1ᴿ and w2 or
/// w2ᴿ counts; when no node holds both words in their given orientation, the palindromic
/// closure of the first such node is returned. ExhaustedBudget means "unknown", not "no".
[[nodiscard]] SearchVerdict find_common_superword(const Word& w1, const Word& w2, const SearchBudget& budget = {});

[[nodiscard]] std::string to_json(const SearchVerdict& verdict);

/// Number of distinct palindromic factors of each length n >= 1 that occurs.
[[nodiscard]] std::map<std::size_t, std::size_t> pal_complexity_profile(const Word& w);

} // namespace richwords
