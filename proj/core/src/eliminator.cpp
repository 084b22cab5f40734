#include "richwords/eliminator.hpp"

#include "richwords/error.hpp"
#include "richwords/pal_index.hpp"

#include <json.hpp>

#include <algorithm>

namespace richwords {

namespace {

// starts[i] = 1 when u or uᴿ starts at i.
std::vector<std::size_t> start_marks(const Word& w, const Word& u) {
    std::vector<std::size_t> marks(w.size() + 1, 0);
    const Word ur = reverse(u);
    for (auto p : occurrences(w, u)) marks[p] = 1;
    if (ur != u)
        for (auto p : occurrences(w, ur)) marks[p] = 1;
    return marks;
}

std::vector<std::size_t> prefix_sums(const std::vector<std::size_t>& marks) {
    std::vector<std::size_t> sums(marks.size() + 1, 0);
    for (std::size_t i = 0; i < marks.size(); ++i) sums[i + 1] = sums[i] + marks[i];
    return sums;
}

bool starts_with_either(const Word& w, const Word& u) { return is_prefix(w, u) || is_prefix(w, reverse(u)); }
bool ends_with_either(const Word& w, const Word& u) { return is_suffix(w, u) || is_suffix(w, reverse(u)); }

void require_ruo_inputs(const Word& w, const Word& w1, const Word& w2) {
    require_same_alphabet(w, w1);
    require_same_alphabet(w, w2);
    if (w1.empty() || w2.empty()) throw Error(ErrorKind::Precondition, "w1 and w2 must be nonempty");
    if (!is_rich(w) || !is_rich(w1) || !is_rich(w2)) throw Error(ErrorKind::Precondition, "w, w1, w2 must be rich");
    if (!starts_with_either(w, w1)) throw Error(ErrorKind::Precondition, "w does not start with w1 or its reversal");
    if (!ends_with_either(w, w2)) throw Error(ErrorKind::Precondition, "w does not end with w2 or its reversal");
}

} // namespace

std::size_t reverse_occ(const Word& w, const Word& u) {
    const auto marks = start_marks(w, u);
    std::size_t n = 0;
    for (auto m : marks) n += m;
    return n;
}

std::optional<Word> try_ruo(const Word& w, const Word& w1, const Word& w2) {
    require_ruo_inputs(w, w1, w2);
    const auto a = start_marks(w, w1);
    const auto b = start_marks(w, w2);
    const auto sa = prefix_sums(a);
    const auto sb = prefix_sums(b);
    const std::size_t n = w.size();
    // Occurrences of w1-type fully inside [i, i+len) start in [i, i+len-|w1|].
    for (std::size_t len = std::max(w1.size(), w2.size()); len <= n; ++len)
        for (std::size_t i = 0; i + len <= n; ++i) {
            const std::size_t last2 = i + len - w2.size();
            if (!a[i] || !b[last2]) continue;
            if (sa[i + len - w1.size() + 1] - sa[i] != 1) continue;
            if (sb[last2 + 1] - sb[i] != 1) continue;
            return w.substr(i, len);
        }
    return std::nullopt;
}

Word ruo(const Word& w, const Word& w1, const Word& w2) {
    auto t = try_ruo(w, w1, w2);
    if (!t)
        throw Error(ErrorKind::Precondition, "no factor of " + w.to_string() + " has " + w1.to_string() + " and " +
                                                 w2.to_string() + " reverse-unioccurrent at its ends");
    return *std::move(t);
}

Word mfp(const Word& w, std::size_t n) {
    const auto flexed = flexed_palindromes(w);
    std::size_t longest = 0;
    for (const auto& f : flexed) longest = std::max(longest, f.size());
    if (longest <= 2 || longest <= n) return Word(w.alphabet());
    const Word prefix_pal = lpp(w);
    // std::set iterates lexicographically, so the first eligible word wins.
    for (const auto& f : flexed)
        if (f.size() == longest && !is_factor(prefix_pal, f)) return f;
    return Word(w.alphabet());
}

EliminationTrace elm(const Word& w, const Word& w1, const Word& w2) {
    require_same_alphabet(w, w1);
    require_same_alphabet(w, w2);
    if (!is_prefix(w, w1)) throw Error(ErrorKind::Precondition, "w1 is not a prefix of w");
    if (!is_suffix(w, w2)) throw Error(ErrorKind::Precondition, "w2 is not a suffix of w");

    EliminationTrace trace;
    trace.w = w;
    trace.w1 = w1;
    trace.w2 = w2;
    trace.m = std::max(w1.size(), w2.size());
    trace.initial = ruo(w, w1, w2);
    for (const auto& f : flexed_palindromes(w)) trace.iteration_cap += occ(w, f);

    Word res = trace.initial;
    for (Word r = mfp(res, trace.m); !r.empty(); r = mfp(res, trace.m)) {
        if (trace.steps.size() >= trace.iteration_cap)
            throw Error(ErrorKind::InternalInconsistency,
                        "elm exceeded " + std::to_string(trace.iteration_cap) + " iterations on " + w.to_string());
        auto reduced = rdc_wrd(res, r);
        Word next = ruo(reduced.word, w1, w2);
        if (!starts_with_either(next, w1) || !ends_with_either(next, w2))
            throw Error(ErrorKind::InternalInconsistency, "ruo lost the w1/w2 ends");
        trace.steps.push_back({res, r, std::move(reduced.trace), next});
        res = std::move(next);
    }
    trace.final_word = std::move(res);
    return trace;
}

std::string to_json(const EliminationTrace& trace) {
    nlohmann::ordered_json j;
    j["record"] = "elimination";
    j["w"] = trace.w.to_string();
    j["w1"] = trace.w1.to_string();
    j["w2"] = trace.w2.to_string();
    j["m"] = trace.m;
    j["initial"] = trace.initial.to_string();
    auto steps = nlohmann::ordered_json::array();
    for (const auto& s : trace.steps) {
        nlohmann::ordered_json step;
        step["before"] = s.before.to_string();
        step["r"] = s.r.to_string();
        step["reduction"] = nlohmann::ordered_json::parse(to_json(s.reduction));
        step["after_ruo"] = s.after_ruo.to_string();
        steps.push_back(std::move(step));
    }
    j["steps"] = std::move(steps);
    j["final"] = trace.final_word.to_string();
    j["iterations"] = trace.iterations();
    j["iteration_cap"] = trace.iteration_cap;
    return j.dump();
}

} // namespace richwords
