#include <doctest.h>

#include <oracles.hpp>
#include <test_words.hpp>

#include <richwords/eliminator.hpp>
#include <richwords/error.hpp>
#include <richwords/pal_index.hpp>

#include <json.hpp>

using namespace richwords;
using testing::S;
using testing::W;

namespace {

std::vector<std::string> rich_corpus(int q, std::size_t max_length) {
    std::vector<std::string> out;
    for (std::size_t n = 1; n <= max_length; ++n)
        for (const auto& s : oracle::all_words(q, n))
            if (oracle::is_rich(s)) out.push_back(s);
    return out;
}

} // namespace

TEST_CASE("reverse occurrence counts") {
    CHECK(reverse_occ(W("0110"), W("01")) == 2);
    CHECK(reverse_occ(W("010"), W("0")) == 2);
    CHECK(reverse_unioccurrent(W("0112"), W("01")));
    CHECK_FALSE(reverse_unioccurrent(W("0110"), W("01")));
    for (std::size_t n = 1; n <= 7; ++n)
        for (const auto& s : oracle::all_words(2, n))
            for (const auto& u : {"0", "01", "10", "010", "0110"})
                CHECK(reverse_occ(W(s, 2), W(u, 2)) == oracle::reverse_occ(s, u));
}

TEST_CASE("reverse-unioccurrent factor") {
    CHECK(S(ruo(W("010"), W("0"), W("0"))) == "0");
    CHECK(S(ruo(W("0112"), W("0112"), W("0112"))) == "0112");
    CHECK(S(ruo(W("12145656547745656545656547874"), W("121"), W("874"))) == "121456565477456565456565478");
    // Every factor starting with 0 and ending with 00 holds 0 twice.
    CHECK_FALSE(try_ruo(W("000"), W("0"), W("00")));
    CHECK_THROWS_AS((void)ruo(W("000"), W("0"), W("00")), Error);
    CHECK_THROWS_AS((void)ruo(W("0110"), W("1"), W("0")), Error);
    CHECK_THROWS_AS((void)ruo(W("0120"), W("0"), W("0")), Error);
    CHECK_THROWS_AS((void)ruo(W("01"), W("-"), W("1")), Error);
}

TEST_CASE("ruo picks the first candidate by length then start") {
    for (const auto& s : rich_corpus(2, 9))
        for (std::size_t a = 1; a <= std::min<std::size_t>(3, s.size()); ++a)
            for (std::size_t b = 1; b <= std::min<std::size_t>(3, s.size()); ++b) {
                const std::string w1 = s.substr(0, a), w2 = s.substr(s.size() - b);
                const auto expected = oracle::ruo_candidates(s, w1, w2);
                const auto got = try_ruo(W(s, 2), W(w1, 2), W(w2, 2));
                REQUIRE(got.has_value() == !expected.empty());
                if (got) CHECK(S(*got) == expected.front());
            }
}

TEST_CASE("maximal flexed palindrome selection") {
    const Word w = W("12145656547745656545656547874");
    // 545 and 656 are the longest flexed palindromes; ties break lexicographically.
    CHECK(S(mfp(w, 2)) == "545");
    CHECK(std::holds_alternative<GammaPair>(gamma_check(w, W("656"))));
    CHECK(mfp(w, 3).empty());
    CHECK(mfp(W("0000"), 1).empty());

    for (const auto& s : rich_corpus(3, 7)) {
        const Word x = W(s, 3);
        for (std::size_t n = 1; n <= 4; ++n) {
            const Word r = mfp(x, n);
            std::set<std::string> eligible;
            for (const auto& f : oracle::flx_pal(s, 3))
                if (f.size() > n && std::holds_alternative<GammaPair>(gamma_check(x, W(f, 3)))) eligible.insert(f);
            if (eligible.empty()) {
                CHECK(r.empty());
            } else {
                CHECK(S(r) == *eligible.begin());
                CHECK(r.size() > n);
            }
        }
    }
}

TEST_CASE("elimination on the two-step example word") {
    const Word w = W("12145656547745656545656547874");
    const auto trace = elm(w, W("12"), W("74"));
    CHECK(S(trace.initial) == "2145656547");
    REQUIRE(trace.iterations() == 1);
    CHECK(S(trace.steps[0].r) == "656");
    CHECK(S(trace.final_word) == "21456547");
    CHECK(trace.iterations() <= trace.iteration_cap);

    const auto j = nlohmann::json::parse(to_json(trace));
    CHECK(j["final"] == "21456547");
    CHECK(j["steps"][0]["reduction"]["case"] == "closure");
    CHECK(j["steps"][0]["reduction"]["rpr"] == "2145654");

    // m = 3 leaves nothing longer to remove.
    const auto idle = elm(w, W("121"), W("874"));
    CHECK(idle.iterations() == 0);
    CHECK(idle.final_word == idle.initial);
    CHECK(idle.initial == ruo(w, W("121"), W("874")));
}

TEST_CASE("elimination preconditions") {
    CHECK_THROWS_AS((void)elm(W("0110"), W("1"), W("0")), Error);
    CHECK_THROWS_AS((void)elm(W("0110"), W("0"), W("1")), Error);
}

TEST_CASE("length-two flexed palindromes survive for m = 1") {
    // 22 arises flexed at 022 (the standard letter there is 0), but Gamma only admits
    // |r| > 2, so nothing removes it.
    const auto trace = elm(W("00000221", 3), W("0", 3), W("1", 3));
    CHECK(S(trace.final_word) == "0221");
    CHECK(flexed_palindromes(trace.final_word).count(W("22", 3)) == 1);
}

TEST_CASE("elimination guarantees over small binary words") {
    std::size_t runs = 0;
    for (const auto& s : rich_corpus(2, 11)) {
        const Word w = W(s, 2);
        for (std::size_t a = 1; a <= std::min<std::size_t>(4, s.size()); ++a)
            for (std::size_t b = 1; b <= std::min<std::size_t>(4, s.size()); ++b) {
                const std::string w1 = s.substr(0, a), w2 = s.substr(s.size() - b);
                if (!try_ruo(w, W(w1, 2), W(w2, 2))) continue;
                ++runs;
                const auto trace = elm(w, W(w1, 2), W(w2, 2));
                const std::string t = S(trace.final_word);
                CHECK(oracle::is_rich(t));
                CHECK(oracle::starts_oriented(t, w1));
                CHECK(oracle::ends_oriented(t, w2));
                for (const auto& f : oracle::flx_pal(t, 2)) CHECK(f.size() <= std::max(a, b));
                CHECK(trace.iterations() <= trace.iteration_cap);
            }
    }
    CHECK(runs > 1000);
}
