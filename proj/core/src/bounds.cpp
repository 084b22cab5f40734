#include "richwords/bounds.hpp"

#include "richwords/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace richwords {

namespace {

BigInt pow_big(BigInt base, unsigned exp) {
    BigInt out = 1;
    while (exp) {
        if (exp & 1u) out *= base;
        base *= base;
        exp >>= 1u;
    }
    return out;
}

BigInt growth_base(std::uint64_t n, std::uint64_t q) {
    return 4 * pow_big(BigInt(q), 10) * n;
}

void require_positive(std::uint64_t n, std::uint64_t q) {
    if (n == 0 || q == 0) throw Error(ErrorKind::Precondition, "bounds need n >= 1 and q >= 1");
}

// Decimal digit count of a positive integer.
std::size_t digits(const BigInt& v) { return v.str().size(); }

} // namespace

unsigned ceil_log2(std::uint64_t n) {
    unsigned e = 0;
    while (e < 64 && (std::uint64_t{1} << e) < n) ++e;
    return e;
}

BigInt pal_complexity_bound(std::uint64_t n, std::uint64_t q) {
    require_positive(n, q);
    return BigInt(q + 1) * n * pow_big(growth_base(n, q), ceil_log2(n));
}

BigInt bound_k(std::uint64_t m, std::uint64_t q) {
    require_positive(m, q);
    return BigInt(q + 1) * m * m * pow_big(growth_base(m, q), ceil_log2(m));
}

const BigInt& BoundReport::exact_total() const {
    if (!total)
        throw Error(ErrorKind::Resource, "m*2^(k+2) has more than " + std::to_string(digit_cap) + " digits; ≈10^" +
                                             std::to_string(log10_total));
    return *total;
}

BoundReport bound_total(std::uint64_t m, std::uint64_t q, std::size_t digit_cap) {
    BoundReport report;
    report.m = m;
    report.q = q;
    report.k = bound_k(m, q);
    report.digit_cap = digit_cap;

    const double lm = std::log10(static_cast<double>(m));
    const double lq = std::log10(static_cast<double>(q));
    report.log10_k = std::log10(static_cast<double>(q + 1)) + 2 * lm + std::log2(static_cast<double>(m)) * (std::log10(4.0) + 10 * lq + lm);
    const double k_real = std::pow(10.0, report.log10_k);
    report.log10_total = lm + (k_real + 2) * std::log10(2.0);

    // Digits of m·2^(k+2) from the exact k, checked before shifting.
    const double k_exact = report.k.convert_to<double>();
    const double est_digits = lm + (k_exact + 2) * std::log10(2.0) + 1;
    if (std::isfinite(est_digits) && est_digits <= static_cast<double>(digit_cap) + 1) {
        const auto shift = report.k.convert_to<std::uint64_t>();
        BigInt total = BigInt(m) << (shift + 2);
        if (digits(total) <= digit_cap) {
            report.prefix_bound = BigInt(m) << (shift + 1);
            report.total = std::move(total);
        }
    }
    return report;
}

std::string format_log10(double log10_value) {
    if (!std::isfinite(log10_value)) return "≈10^inf";
    char buf[64];
    if (log10_value < 1e15)
        std::snprintf(buf, sizeof buf, "≈10^%.3f", log10_value);
    else
        std::snprintf(buf, sizeof buf, "≈10^(%.6e)", log10_value);
    return buf;
}

std::string format_bound(const BigInt& value, std::size_t digit_cap) {
    std::string s = value.str();
    if (s.size() <= digit_cap) return s;
    // log10 from the leading digits and the digit count.
    const std::size_t head = std::min<std::size_t>(15, s.size());
    const double lead = std::stod(s.substr(0, head));
    return format_log10(std::log10(lead) + static_cast<double>(s.size() - head));
}

} // namespace richwords
