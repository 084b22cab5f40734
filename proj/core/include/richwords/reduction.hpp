#pragma once

#include "richwords/word.hpp"

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace richwords {

/// A flexed palindrome: lps(ub) for a prefix ub of w where ub is not the standard
/// extension of u.
struct FlexRecord {
    Word palindrome;
    std::size_t position;          // |ub|, the prefix length where it first arises
    Word standard_replacement;     // lps(StdExt(u, 1))
};

/// Flexed palindromes of a rich word, one record per distinct palindrome, ordered by
/// first position.
///
/// StdExt(u, 1) needs |u| >= 2, so short prefixes follow a fixed convention: the first
/// letter is never flexed, and for |u| = 1 the step ub is standard iff b = u (the
/// standard replacement is then uu).
[[nodiscard]] std::vector<FlexRecord> flx_pal(const Word& w);
[[nodiscard]] std::set<Word> flexed_palindromes(const Word& w);

/// lps(StdExt(h, 1)) where hx is the prefix of w at which r arises as lps.
[[nodiscard]] Word std_pal_rep(const Word& w, const Word& r);

struct ParseTriple {
    Word v;
    Word z;
    Word t;
};

struct GammaPair {
    Word w;
    Word r;
    ParseTriple parse;
};

struct GammaRejection {
    int condition;  // 1..5, the first failing membership condition
    std::string reason;
};

using GammaCheck = std::variant<GammaPair, GammaRejection>;

/// Whether condition 5 (r is a longest flexed palindrome) is enforced. Waiving it lets
/// the parse and reduced-prefix constructions run on pairs that satisfy conditions 1-4
/// only; none of the reduced-word guarantees hold then.
enum class Maximality { Required, Waived };

/// Checks the five membership conditions in order and builds the parse on success:
///   1 w and r rich, 2 |r| > 2, 3 r flexed in w, 4 r not a factor of lpp(w),
///   5 no flexed palindrome of w longer than r.
[[nodiscard]] GammaCheck gamma_check(const Word& w, const Word& r, Maximality maximality = Maximality::Required);
[[nodiscard]] GammaPair require_gamma(const Word& w, const Word& r, Maximality maximality = Maximality::Required);

/// (v, z, t) with v the shortest prefix holding every occurrence of r and vz = mse(w, v).
[[nodiscard]] ParseTriple parse(const Word& w, const Word& r, Maximality maximality = Maximality::Required);

enum class ReductionCase { Return, Closure };

[[nodiscard]] std::string_view to_string(ReductionCase c);

struct ReductionTrace {
    GammaPair input;
    ReductionCase kind = ReductionCase::Return;
    Word lps_v;
    Word h;                       // w = h·zᴿ·lps(v)·z·t
    std::optional<Word> g;        // return case: complete return to r ending h·zᴿ·r
    std::optional<Word> g_bar;    // return case: g_bar·g = h·zᴿ·r
    std::optional<Word> u_bar;    // closure case: lps(StdExt(h·zᴿ·rtrim(r), 1))
    std::optional<Word> closure;  // closure case: pal_closure(h·zᴿ·rtrim(r))
    std::optional<Word> u_choice; // closure case: shortest prefix of `closure` ending in ltrim(r)·z
    Word rpr;
    Word result;                  // rpr·t
};

/// Reduced prefix with the full audit trail; `result` holds rpr·t.
[[nodiscard]] ReductionTrace rpr(const Word& w, const Word& r, Maximality maximality = Maximality::Required);

struct Reduction {
    Word word;
    ReductionTrace trace;
};

/// Reduced word rpr(w, r)·t. Verifies before returning that the result is rich, adds no
/// flexed palindrome, has fewer occurrences of r, and shares a prefix and a suffix of
/// length >= |r| - 1 with w; throws GuaranteeViolation otherwise.
[[nodiscard]] Reduction rdc_wrd(const Word& w, const Word& r);

/// Line-delimited JSON records.
[[nodiscard]] std::string to_json(const ReductionTrace& trace);
[[nodiscard]] std::string to_json(const GammaRejection& rejection);

} // namespace richwords
