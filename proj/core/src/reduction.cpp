#include "richwords/reduction.hpp"

#include "richwords/error.hpp"
#include "richwords/extension.hpp"
#include "richwords/pal_index.hpp"

#include <json.hpp>

#include <algorithm>

namespace richwords {

namespace {

Word repeat_letter(Alphabet a, Symbol s, std::size_t n) { return Word(a, std::vector<Symbol>(n, s)); }

std::size_t max_length(const std::vector<FlexRecord>& records) {
    std::size_t m = 0;
    for (const auto& f : records) m = std::max(m, f.palindrome.size());
    return m;
}

bool contains(const std::vector<FlexRecord>& records, const Word& r) {
    return std::any_of(records.begin(), records.end(), [&](const FlexRecord& f) { return f.palindrome == r; });
}

[[noreturn]] void inconsistent(const std::string& what) { throw Error(ErrorKind::InternalInconsistency, what); }

} // namespace

std::string_view to_string(ReductionCase c) { return c == ReductionCase::Return ? "return" : "closure"; }

std::vector<FlexRecord> flx_pal(const Word& w) {
    PalIndex index(w);
    if (!index.is_rich()) throw Error(ErrorKind::NotRich, w.to_string());
    std::vector<FlexRecord> out;
    std::set<Word> seen;
    for (std::size_t len = 2; len <= w.size(); ++len) {
        const std::size_t u = len - 1;
        Symbol standard;
        Word replacement;
        if (u == 1) {
            standard = w[0];
            replacement = repeat_letter(w.alphabet(), standard, 2);
        } else {
            const std::size_t p = index.lpps_length(u);
            standard = w[u - p - 1];
            replacement = w.substr(u - p - 1, p + 1).appended(standard);
        }
        if (w[u] == standard) continue;
        Word pal = w.substr(len - index.lps_length(len), index.lps_length(len));
        if (seen.insert(pal).second) out.push_back({std::move(pal), len, std::move(replacement)});
    }
    return out;
}

std::set<Word> flexed_palindromes(const Word& w) {
    std::set<Word> out;
    for (auto& f : flx_pal(w)) out.insert(std::move(f.palindrome));
    return out;
}

Word std_pal_rep(const Word& w, const Word& r) {
    require_same_alphabet(w, r);
    if (!is_rich(r)) throw Error(ErrorKind::NotRich, r.to_string());
    for (auto& f : flx_pal(w))
        if (f.palindrome == r) return std::move(f.standard_replacement);
    throw Error(ErrorKind::NotFlexed, r.to_string() + " in " + w.to_string());
}

ParseTriple parse(const Word& w, const Word& r, Maximality maximality) {
    return require_gamma(w, r, maximality).parse;
}

GammaCheck gamma_check(const Word& w, const Word& r, Maximality maximality) {
    require_same_alphabet(w, r);
    if (!is_rich(w)) return GammaRejection{1, "w is not rich"};
    if (!is_rich(r)) return GammaRejection{1, "r is not rich"};
    if (r.size() <= 2) return GammaRejection{2, "|r| must exceed 2"};
    const auto flexed = flx_pal(w);
    if (!contains(flexed, r)) return GammaRejection{3, "r is not a flexed palindrome of w"};
    if (is_factor(lpp(w), r)) return GammaRejection{4, "r is a factor of lpp(w)"};
    if (maximality == Maximality::Required && max_length(flexed) > r.size())
        return GammaRejection{5, "w has a longer flexed palindrome"};

    const auto last = occurrences(w, r).back();
    const Word v = w.prefix(last + r.size());
    const Word vz = mse(w, v);
    return GammaPair{w, r, {v, vz.substr(v.size()), w.substr(vz.size())}};
}

GammaPair require_gamma(const Word& w, const Word& r, Maximality maximality) {
    auto check = gamma_check(w, r, maximality);
    if (auto* rej = std::get_if<GammaRejection>(&check))
        throw Error(ErrorKind::GammaViolation, "condition " + std::to_string(rej->condition) + ": " + rej->reason);
    return std::get<GammaPair>(std::move(check));
}

ReductionTrace rpr(const Word& w, const Word& r, Maximality maximality) {
    ReductionTrace trace;
    trace.input = require_gamma(w, r, maximality);
    const auto& [v, z, t] = trace.input.parse;

    trace.lps_v = lps(v);
    if (trace.lps_v.size() == v.size()) inconsistent("lps(v) = v although r is flexed");
    if (v.size() < trace.lps_v.size() + z.size()) inconsistent("no room for z^R before lps(v)");
    const std::size_t h_len = v.size() - trace.lps_v.size() - z.size();
    trace.h = w.prefix(h_len);
    if (w.substr(h_len, z.size()) != reverse(z)) inconsistent("w != h z^R lps(v) z t");

    const std::size_t r_start = h_len + z.size();  // h·zᴿ·r is a prefix of w
    const Word x = w.prefix(r_start + r.size() - 1);
    if (auto prev = occurrences(x, r); !prev.empty()) {
        trace.kind = ReductionCase::Return;
        const std::size_t g_start = prev.back();
        trace.g = w.substr(g_start, r_start + r.size() - g_start);
        trace.g_bar = w.prefix(g_start);
        trace.rpr = *trace.g_bar + r + z;
    } else {
        trace.kind = ReductionCase::Closure;
        trace.u_bar = lps(std_ext1(x));
        trace.closure = pal_closure(x);
        const Word tail = ltrim(r) + z;
        auto pos = find(*trace.closure, tail);
        if (!pos) inconsistent("U is empty");
        trace.u_choice = trace.closure->prefix(*pos + tail.size());
        trace.rpr = *trace.u_choice;
        if (is_factor(trace.rpr, r)) inconsistent("r occurs in the reduced prefix");
        // rpr is a prefix of a standard extension of x, so it can only lose flexed
        // palindromes, and only when it is shorter than x.
        const auto fx = flexed_palindromes(x);
        const auto fu = flexed_palindromes(trace.rpr);
        if (!std::includes(fx.begin(), fx.end(), fu.begin(), fu.end()))
            inconsistent("FlxPal(rpr) is not contained in FlxPal(h z^R rtrim(r))");
        if (trace.rpr.size() >= x.size() && fx.size() != fu.size())
            inconsistent("|FlxPal(h z^R rtrim(r))| != |FlxPal(rpr)|");
    }
    trace.result = trace.rpr + t;
    return trace;
}

Reduction rdc_wrd(const Word& w, const Word& r) {
    ReductionTrace trace = rpr(w, r);
    const Word& out = trace.result;
    const std::size_t keep = r.size() - 1;
    std::vector<std::string> failed;
    if (!is_rich(out)) {
        failed.emplace_back("result not rich");
    } else {
        const auto before = flexed_palindromes(w);
        for (const auto& f : flexed_palindromes(out))
            if (!before.contains(f)) {
                failed.push_back("new flexed palindrome " + f.to_string());
                break;
            }
    }
    if (occ(out, r) >= occ(w, r)) failed.emplace_back("occurrences of r did not decrease");
    if (lcp(out, w).size() < keep) failed.emplace_back("common prefix shorter than |r|-1");
    if (lcs(out, w).size() < keep) failed.emplace_back("common suffix shorter than |r|-1");
    if (!failed.empty()) {
        std::string msg = "rdcWrd(" + w.to_string() + ", " + r.to_string() + ") = " + out.to_string();
        for (const auto& f : failed) msg += "; " + f;
        throw Error(ErrorKind::GuaranteeViolation, msg);
    }
    Word word = out;
    return {std::move(word), std::move(trace)};
}

namespace {

nlohmann::ordered_json word_or_null(const std::optional<Word>& w) {
    return w ? nlohmann::ordered_json(w->to_string()) : nlohmann::ordered_json(nullptr);
}

} // namespace

std::string to_json(const ReductionTrace& trace) {
    nlohmann::ordered_json j;
    j["record"] = "reduction";
    j["w"] = trace.input.w.to_string();
    j["r"] = trace.input.r.to_string();
    j["v"] = trace.input.parse.v.to_string();
    j["z"] = trace.input.parse.z.to_string();
    j["t"] = trace.input.parse.t.to_string();
    j["case"] = std::string(to_string(trace.kind));
    j["lps_v"] = trace.lps_v.to_string();
    j["h"] = trace.h.to_string();
    j["g"] = word_or_null(trace.g);
    j["g_bar"] = word_or_null(trace.g_bar);
    j["u_bar"] = word_or_null(trace.u_bar);
    j["closure"] = word_or_null(trace.closure);
    j["u_choice"] = word_or_null(trace.u_choice);
    j["rpr"] = trace.rpr.to_string();
    j["result"] = trace.result.to_string();
    return j.dump();
}

std::string to_json(const GammaRejection& rejection) {
    nlohmann::ordered_json j;
    j["record"] = "gamma_rejection";
    j["condition"] = rejection.condition;
    j["reason"] = rejection.reason;
    return j.dump();
}

} // namespace richwords
