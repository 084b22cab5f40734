#pragma once

#include "richwords/word.hpp"

#include <cstddef>
#include <vector>

namespace richwords {

/// One rich one-letter extension of `base`.
struct ExtensionStep {
    Word base;
    Symbol letter;
    bool is_standard;
};

/// StdExt(w, 1): w·a where lps(w·a) = a·lpps(w)·a. Requires w rich and |w| >= 2.
[[nodiscard]] Word std_ext1(const Word& w);
/// StdExt(w, j), the j-fold iterate; std_extj(w, 0) = w.
[[nodiscard]] Word std_extj(const Word& w, std::size_t j);
/// Whether u = StdExt(v, |u| - |v|). Requires v rich and |v| >= 2.
[[nodiscard]] bool is_std_ext(const Word& u, const Word& v);
/// Longest prefix of u that is a standard extension of v. v must be a rich prefix of u
/// with |v| >= 2.
[[nodiscard]] Word mse(const Word& u, const Word& v);

/// Letters a with w·a rich, ascending. Requires w rich.
[[nodiscard]] std::vector<Symbol> rich_extensions(const Word& w);
[[nodiscard]] std::vector<ExtensionStep> rich_extension_steps(const Word& w);

} // namespace richwords
