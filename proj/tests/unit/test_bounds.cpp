#include <doctest.h>

#include <oracles.hpp>

#include <richwords/bounds.hpp>
#include <richwords/error.hpp>

#include <cmath>

using namespace richwords;

TEST_CASE("ceiling log2") {
    CHECK(ceil_log2(1) == 0);
    CHECK(ceil_log2(2) == 1);
    CHECK(ceil_log2(3) == 2);
    CHECK(ceil_log2(4) == 2);
    CHECK(ceil_log2(5) == 3);
    CHECK(ceil_log2(std::uint64_t{1} << 40) == 40);
}

TEST_CASE("k(m)") {
    CHECK(bound_k(1, 2) == 3);
    CHECK(bound_k(2, 2) == 98304);
    CHECK(bound_k(4, 2) == BigInt("12884901888"));
    for (std::uint64_t q = 1; q <= 5; ++q) CHECK(bound_k(1, q) == q + 1);
    for (std::uint64_t m = 1; m <= 40; ++m)
        for (std::uint32_t q = 1; q <= 4; ++q) CHECK(bound_k(m, q).str() == oracle::bound(m, q, 2).str());
}

TEST_CASE("palindromic complexity bound") {
    CHECK(pal_complexity_bound(1, 7) == 8);
    CHECK(pal_complexity_bound(2, 2) == 49152);
    for (std::uint64_t n = 1; n <= 40; ++n)
        for (std::uint32_t q = 1; q <= 4; ++q)
            CHECK(pal_complexity_bound(n, q).str() == oracle::bound(n, q, 1).str());
}

TEST_CASE("summation stays below k(n)") {
    for (std::uint32_t q = 1; q <= 4; ++q) {
        BigInt sum = 0;
        for (std::uint64_t n = 1; n <= 64; ++n) {
            sum += pal_complexity_bound(n, q);
            CHECK(sum <= bound_k(n, q));
        }
    }
}

TEST_CASE("monotone in m and q") {
    for (std::uint64_t m = 1; m < 30; ++m)
        for (std::uint64_t q = 1; q < 5; ++q) {
            CHECK(bound_k(m, q) <= bound_k(m + 1, q));
            CHECK(bound_k(m, q) <= bound_k(m, q + 1));
        }
}

TEST_CASE("total length bound") {
    const auto r12 = bound_total(1, 2);
    CHECK(r12.k == 3);
    CHECK(r12.exact_total() == 32);
    CHECK(*r12.prefix_bound == 16);
    CHECK(bound_total(1, 1).exact_total() == 16);

    const auto r22 = bound_total(2, 2);
    REQUIRE(r22.total);
    const std::size_t digits = r22.total->str().size();
    CHECK(std::floor(r22.log10_total) + 1 == doctest::Approx(static_cast<double>(digits)));
    CHECK(r22.log10_total == doctest::Approx((98304 + 2) * std::log10(2.0) + std::log10(2.0)));
    CHECK(*r22.total == 2 * *r22.prefix_bound);

    // Non power of two: the real exponent gives a smaller estimate than the exact bound.
    const auto r3 = bound_total(3, 2, 10);
    CHECK_FALSE(r3.total);
    CHECK_THROWS_AS((void)r3.exact_total(), Error);
    CHECK(r3.log10_k < std::log10(static_cast<double>(bound_k(3, 2))));
}

TEST_CASE("formatting") {
    CHECK(format_bound(BigInt(123456), 10) == "123456");
    const std::string approx = format_bound(BigInt("123456789012345678901234567890"), 10);
    CHECK(approx.starts_with("≈10^"));
    CHECK(approx.find("29") != std::string::npos);
}
