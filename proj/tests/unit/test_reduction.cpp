#include <doctest.h>

#include <oracles.hpp>
#include <test_words.hpp>

#include <richwords/error.hpp>
#include <richwords/extension.hpp>
#include <richwords/pal_index.hpp>
#include <richwords/reduction.hpp>

#include <json.hpp>

#include <array>

using namespace richwords;
using testing::S;
using testing::W;

namespace {

std::vector<std::string> rich_corpus(int q, std::size_t max_length) {
    std::vector<std::string> out;
    for (std::size_t n = 0; n <= max_length; ++n)
        for (const auto& s : oracle::all_words(q, n))
            if (oracle::is_rich(s)) out.push_back(s);
    return out;
}

std::string oracle_mse(const std::string& w, std::string v, int q) {
    while (v.size() < w.size() && oracle::std_letter(v, q) == w[v.size()]) v += w[v.size()];
    return v;
}

// Every (v, z, t) with v·z·t = w meeting the parse clauses, by exhaustive split.
std::vector<std::array<std::string, 3>> oracle_parses(const std::string& w, const std::string& r, int q) {
    std::vector<std::array<std::string, 3>> out;
    for (std::size_t i = r.size(); i <= w.size(); ++i) {
        const std::string v = w.substr(0, i);
        if (v.compare(v.size() - r.size(), r.size(), r) != 0 || oracle::occ(v, r) != oracle::occ(w, r)) continue;
        for (std::size_t j = i; j <= w.size(); ++j) {
            const std::string vz = w.substr(0, j);
            if (oracle_mse(w, v, q) == vz) out.push_back({v, w.substr(i, j - i), w.substr(j)});
        }
    }
    return out;
}

int rejected_condition(const GammaCheck& c) {
    const auto* rej = std::get_if<GammaRejection>(&c);
    return rej ? rej->condition : 0;
}

} // namespace

TEST_CASE("flexed palindromes of the sample binary word") {
    const Word w = W("110101100110011");
    const auto flexed = flexed_palindromes(w);
    CHECK(flexed.count(W("001100")) == 1);
    CHECK(S(std_pal_rep(w, W("001100"))) == "1011001101");

    std::set<std::string> expected = oracle::flx_pal("110101100110011", 10);
    std::set<std::string> got;
    for (const auto& f : flexed) got.insert(S(f));
    CHECK(got == expected);
}

TEST_CASE("flexed palindromes of unary and example words") {
    for (std::size_t n = 1; n <= 12; ++n) CHECK(flx_pal(W(std::string(n, '0'), 1)).empty());

    const std::string s = "12145656547874";
    std::set<std::string> got;
    for (const auto& f : flexed_palindromes(W(s))) got.insert(S(f));
    CHECK(got == oracle::flx_pal(s, 10));
    CHECK(got.count("656") == 1);
    CHECK_THROWS_AS((void)flx_pal(W("0120")), Error);
}

TEST_CASE("standard palindromic replacement") {
    CHECK(S(std_pal_rep(W("123999"), W("999"))) == "3993");
    try {
        (void)std_pal_rep(W("0110"), W("0110"));
        FAIL("expected NotFlexed");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotFlexed);
    }
}

TEST_CASE("flex records agree with the definition scan") {
    for (int q : {2, 3}) {
        for (const auto& s : rich_corpus(q, q == 2 ? 11 : 7)) {
            const Word w = W(s, q);
            const auto records = flx_pal(w);
            std::set<std::string> got;
            for (const auto& rec : records) {
                got.insert(S(rec.palindrome));
                const Word ub = w.prefix(rec.position);
                CHECK(is_palindrome(rec.palindrome));
                CHECK(is_suffix(ub, rec.palindrome));
                CHECK(S(rec.palindrome) == oracle::lps(S(ub)));
                CHECK_FALSE(is_prefix(w, rec.palindrome));
                CHECK(rec.standard_replacement.size() > rec.palindrome.size());
                CHECK(std_pal_rep(w, rec.palindrome) == rec.standard_replacement);
            }
            CHECK(got.size() == records.size());
            CHECK(got == oracle::flx_pal(s, q));
        }
    }
}

TEST_CASE("a later ypy after ypx is flexed") {
    for (int q : {2, 3}) {
        for (const auto& s : rich_corpus(q, q == 2 ? 11 : 7)) {
            const auto flexed = oracle::flx_pal(s, q);
            for (std::size_t k = 3; k <= s.size(); ++k) {
                const std::string v = s.substr(0, k);
                for (std::size_t len = 2; len <= k; ++len) {
                    const std::string ypx = v.substr(k - len);
                    const char y = ypx.front(), x = ypx.back();
                    const std::string p = ypx.substr(1, len - 2);
                    if (x == y || !oracle::is_pal(p) || s.compare(0, p.size(), p) == 0) continue;
                    const std::string ypy = y + p + y;
                    if (oracle::has_factor(v, ypy) || !oracle::has_factor(s, ypy)) continue;
                    CHECK_MESSAGE(flexed.count(ypy) == 1, s << " " << ypy);
                }
            }
        }
    }
}

TEST_CASE("membership in Gamma") {
    const Word w2 = W("123999599932239949");
    const auto accepted = gamma_check(w2, W("999"));
    REQUIRE(std::holds_alternative<GammaPair>(accepted));
    const auto& pair = std::get<GammaPair>(accepted);
    CHECK(S(pair.parse.v) == "1239995999");
    CHECK(S(pair.parse.z) == "32");
    CHECK(S(pair.parse.t) == "239949");

    // 3993 arises flexed at the final letter and is longer than 999, so the pair fails
    // the maximality condition; every other condition holds.
    const Word w1 = W("123999322399932442399932255223993");
    CHECK(flexed_palindromes(w1).count(W("3993")) == 1);
    CHECK(rejected_condition(gamma_check(w1, W("999"))) == 5);
    const auto waived = gamma_check(w1, W("999"), Maximality::Waived);
    REQUIRE(std::holds_alternative<GammaPair>(waived));
    CHECK(S(std::get<GammaPair>(waived).parse.v) == "1239993223999324423999");
    CHECK(S(std::get<GammaPair>(waived).parse.z) == "322");
    CHECK(S(std::get<GammaPair>(waived).parse.t) == "55223993");

    CHECK(rejected_condition(gamma_check(W("0120"), W("1"))) == 1);
    CHECK(rejected_condition(gamma_check(w2, W("9"))) == 2);
    CHECK(rejected_condition(gamma_check(w2, W("323"))) == 3);  // not even a factor
    // A prefix palindrome is never flexed.
    CHECK(rejected_condition(gamma_check(W("0110110100"), W("0110"))) == 3);
    // Flexed and maximal, but inside lpp(w).
    CHECK(rejected_condition(gamma_check(W("00100"), W("00100"))) == 3);

    CHECK_THROWS_AS((void)require_gamma(w1, W("999")), Error);
    CHECK_THROWS_AS((void)parse(w1, W("999")), Error);
}

TEST_CASE("rejection reasons name condition 4") {
    // Search a small corpus for a pair failing only the lpp condition.
    bool seen = false;
    for (const auto& s : rich_corpus(2, 12)) {
        const Word w = W(s, 2);
        for (const auto& r : flexed_palindromes(w))
            if (r.size() > 2 && rejected_condition(gamma_check(w, r)) == 4) {
                CHECK(is_factor(lpp(w), r));
                seen = true;
            }
    }
    CHECK(seen);
}

TEST_CASE("parse is the unique split") {
    for (int q : {2, 3}) {
        for (const auto& s : rich_corpus(q, q == 2 ? 12 : 8)) {
            const Word w = W(s, q);
            for (const auto& r : pal_factors(w)) {
                if (r.size() <= 2) continue;
                const auto check = gamma_check(w, r);
                if (!std::holds_alternative<GammaPair>(check)) continue;
                const auto& p = std::get<GammaPair>(check).parse;
                const auto splits = oracle_parses(s, S(r), q);
                REQUIRE(splits.size() == 1);
                CHECK(S(p.v) == splits[0][0]);
                CHECK(S(p.z) == splits[0][1]);
                CHECK(S(p.t) == splits[0][2]);
                CHECK(p.v + p.z + p.t == w);
                CHECK(is_rich(p.v));
                CHECK(is_rich(p.z));
                CHECK(is_rich(p.t));
            }
        }
    }
}

TEST_CASE("reduced prefix, return case") {
    const auto trace = rpr(W("123999322399932442399932255223993"), W("999"), Maximality::Waived);
    CHECK(trace.kind == ReductionCase::Return);
    CHECK(S(trace.lps_v) == "999324423999");
    CHECK(S(*trace.g) == "9993223999");
    CHECK(S(*trace.g_bar) == "123");
    CHECK(S(trace.rpr) == "123999322");
    CHECK(is_suffix(trace.rpr, W("99322")));
    CHECK(S(trace.result) == "12399932255223993");
}

TEST_CASE("reduced prefix, closure case") {
    const auto trace = rpr(W("123999599932239949"), W("999"));
    CHECK(trace.kind == ReductionCase::Closure);
    CHECK(S(trace.lps_v) == "9995999");
    CHECK(S(trace.h) == "1");
    CHECK(S(*trace.u_bar) == "3993");
    CHECK(S(*trace.closure) == "12399321");
    CHECK(S(*trace.u_choice) == "1239932");
    CHECK(S(trace.rpr) == "1239932");
    CHECK(is_suffix(trace.rpr, W("9932")));
    CHECK_FALSE(is_factor(trace.rpr, W("999")));

    const auto j = nlohmann::json::parse(to_json(trace));
    CHECK(j["case"] == "closure");
    CHECK(j["rpr"] == "1239932");
    CHECK(j["g"].is_null());
}

TEST_CASE("closure case may cut below h z^R rtrim(r)") {
    // x = 0000110, Pal(x) = 0000110000, and 01 already ends the prefix 00001.
    const auto trace = rpr(W("00001101", 2), W("101", 2));
    CHECK(trace.kind == ReductionCase::Closure);
    CHECK(S(*trace.closure) == "0000110000");
    CHECK(S(trace.rpr) == "00001");
    const Word x = W("0000110", 2);
    CHECK(flexed_palindromes(trace.rpr).size() < flexed_palindromes(x).size());
    CHECK(S(rdc_wrd(W("00001101", 2), W("101", 2)).word) == "00001");
}

TEST_CASE("reduced words") {
    const Word a = W("12145656547745656545656547874");
    const auto first = rdc_wrd(a, W("656"));
    CHECK(S(first.word) == "12145656547874");
    const auto second = rdc_wrd(first.word, W("656"));
    CHECK(S(second.word) == "121456547874");
    CHECK(occ(first.word, W("656")) < occ(a, W("656")));
    CHECK(occ(second.word, W("656")) < occ(first.word, W("656")));
    CHECK_THROWS_AS((void)rdc_wrd(W("123999322399932442399932255223993"), W("999")), Error);
}

TEST_CASE("reduction guarantees over small rich words") {
    std::size_t pairs = 0;
    for (int q : {2, 3}) {
        for (const auto& s : rich_corpus(q, q == 2 ? 12 : 8)) {
            const Word w = W(s, q);
            const auto flexed_w = oracle::flx_pal(s, q);
            for (const auto& r : pal_factors(w)) {
                if (r.size() <= 2 || !std::holds_alternative<GammaPair>(gamma_check(w, r))) continue;
                ++pairs;
                const std::string rs = S(r);
                const auto red = rdc_wrd(w, r);
                const std::string out = S(red.word);
                CHECK(oracle::is_rich(out));
                for (const auto& f : oracle::flx_pal(out, q)) CHECK(flexed_w.count(f) == 1);
                CHECK(oracle::occ(out, rs) < oracle::occ(s, rs));
                CHECK(oracle::lcp(out, s).size() + 1 >= rs.size());
                CHECK(oracle::lcs(out, s).size() + 1 >= rs.size());

                // Trace shape.
                const auto& tr = red.trace;
                const std::string z = S(tr.input.parse.z);
                CHECK(S(tr.rpr).ends_with(rs.substr(1) + z));
                CHECK(oracle::lcp(S(tr.rpr), s).size() + 1 >= rs.size());
                CHECK(red.word == tr.rpr + tr.input.parse.t);
                if (tr.kind == ReductionCase::Return) {
                    CHECK(is_prefix(w, tr.rpr));
                    CHECK(*tr.g_bar + *tr.g == tr.h + reverse(tr.input.parse.z) + r);
                } else {
                    CHECK_FALSE(oracle::has_factor(S(tr.rpr), rs));
                }

                // Palindromes of rpr outside the common prefix all contain ū, which w avoids.
                const Word u_bar = std_pal_rep(w, r);
                const auto g_pals = oracle::pal_factors(oracle::lcp(s, S(tr.rpr)));
                for (const auto& p : pal_factors_avoiding(tr.rpr, u_bar)) CHECK(g_pals.count(S(p)) == 1);
                CHECK_FALSE(oracle::has_factor(s, S(u_bar)));
            }
        }
    }
    CHECK(pairs > 100);
}
