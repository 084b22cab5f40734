#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

namespace richwords {

using BigInt = boost::multiprecision::cpp_int;

/// Smallest e with 2^e >= n (0 for n = 1).
[[nodiscard]] unsigned ceil_log2(std::uint64_t n);

/// (q+1)·n·(4q¹⁰n)^⌈log₂ n⌉, an upper bound on distinct palindromes of length n in a
/// rich word. Rounding the exponent up keeps it an upper bound for every n.
[[nodiscard]] BigInt pal_complexity_bound(std::uint64_t n, std::uint64_t q);

/// k(m) = (q+1)·m²·(4q¹⁰m)^⌈log₂ m⌉, bounding the flexed palindromes of length <= m.
[[nodiscard]] BigInt bound_k(std::uint64_t m, std::uint64_t q);

struct BoundReport {
    std::uint64_t m = 0;
    std::uint64_t q = 0;
    BigInt k;
    std::optional<BigInt> total;       // m·2^(k+2), absent past the digit cap
    std::optional<BigInt> prefix_bound;  // m·2^(k+1)
    double log10_k = 0;      // with the real exponent log₂ m
    double log10_total = 0;  // with the real exponent log₂ m; may be +inf
    std::size_t digit_cap = 0;

    /// Throws Resource when the exact value was not computed.
    [[nodiscard]] const BigInt& exact_total() const;
};

inline constexpr std::size_t default_digit_cap = 100000;

[[nodiscard]] BoundReport bound_total(std::uint64_t m, std::uint64_t q, std::size_t digit_cap = default_digit_cap);

/// Decimal digits up to `digit_cap`, else "≈10^E".
[[nodiscard]] std::string format_bound(const BigInt& value, std::size_t digit_cap);
[[nodiscard]] std::string format_log10(double log10_value);

} // namespace richwords
