#include "richwords/pal_index.hpp"

#include "richwords/error.hpp"

#include <algorithm>

namespace richwords {

PalIndex::PalIndex(Alphabet alphabet) : alphabet_(alphabet), q_(static_cast<std::size_t>(alphabet.size())) {
    clear();
}

PalIndex::PalIndex(const Word& w) : PalIndex(w.alphabet()) {
    text_.reserve(w.size());
    steps_.reserve(w.size());
    for (Symbol s : w) push_back(s);
}

void PalIndex::clear() {
    text_.clear();
    steps_.clear();
    repeats_ = 0;
    // Node 0 is the imaginary root of length -1, node 1 the empty palindrome.
    nodes_ = {Node{-1, 0, 0}, Node{0, 0, 0}};
    edges_.assign(2 * q_, -1);
}

std::int32_t PalIndex::fit(std::int32_t node, std::size_t pos, Symbol s) const {
    for (;;) {
        auto back = static_cast<std::ptrdiff_t>(pos) - 1 - nodes_[static_cast<std::size_t>(node)].len;
        if (back >= 0 && text_[static_cast<std::size_t>(back)] == s) return node;
        node = nodes_[static_cast<std::size_t>(node)].link;
    }
}

void PalIndex::push_back(Symbol s) {
    if (!alphabet_.contains(s)) throw Error(ErrorKind::InvalidSymbol, "symbol outside alphabet");
    const std::size_t pos = text_.size();
    text_.push_back(s);
    const std::int32_t prev = steps_.empty() ? 1 : steps_.back().node;
    const std::int32_t cur = fit(prev, pos, s);
    if (std::int32_t existing = edge(cur, s); existing != -1) {
        steps_.push_back({existing, -1});
        ++repeats_;
        return;
    }
    const std::int32_t len = nodes_[static_cast<std::size_t>(cur)].len + 2;
    const std::int32_t link = len == 1 ? 1 : edge(fit(nodes_[static_cast<std::size_t>(cur)].link, pos, s), s);
    const auto id = static_cast<std::int32_t>(nodes_.size());
    nodes_.push_back({len, link, pos + 1});
    edges_.resize(edges_.size() + q_, -1);
    edge(cur, s) = id;
    steps_.push_back({id, cur});
}

void PalIndex::pop_back() {
    if (text_.empty()) throw Error(ErrorKind::Length, "pop_back on empty index");
    const Step step = steps_.back();
    if (step.parent == -1) {
        --repeats_;
    } else {
        edge(step.parent, text_.back()) = -1;
        nodes_.pop_back();
        edges_.resize(edges_.size() - q_);
    }
    steps_.pop_back();
    text_.pop_back();
}

std::size_t PalIndex::lps_length(std::size_t prefix_len) const noexcept {
    if (prefix_len == 0) return 0;
    return static_cast<std::size_t>(nodes_[static_cast<std::size_t>(steps_[prefix_len - 1].node)].len);
}

std::size_t PalIndex::lpps_length(std::size_t prefix_len) const noexcept {
    if (prefix_len <= 1) return 0;
    const Node& n = nodes_[static_cast<std::size_t>(steps_[prefix_len - 1].node)];
    if (static_cast<std::size_t>(n.len) < prefix_len) return static_cast<std::size_t>(n.len);
    return static_cast<std::size_t>(nodes_[static_cast<std::size_t>(n.link)].len);
}

bool PalIndex::lps_unioccurrent(std::size_t prefix_len) const noexcept {
    return prefix_len == 0 || steps_[prefix_len - 1].parent != -1;
}

Symbol PalIndex::standard_letter() const {
    const std::size_t n = text_.size();
    if (n == 0) throw Error(ErrorKind::Length, "standard letter of the empty word");
    if (n == 1) return text_[0];
    return text_[n - lpps_length(n) - 1];
}

std::vector<PalIndex::Palindrome> PalIndex::palindromes() const {
    std::vector<Palindrome> out;
    out.reserve(nodes_.size() - 2);
    for (std::size_t i = 2; i < nodes_.size(); ++i)
        out.push_back({nodes_[i].first_end, static_cast<std::size_t>(nodes_[i].len)});
    return out;
}

Word lps(const Word& w) {
    if (w.empty()) return w;
    PalIndex index(w);
    return w.suffix(index.lps_length(w.size()));
}

Word lpp(const Word& w) { return reverse(lps(reverse(w))); }

Word lpps(const Word& w) {
    if (w.size() < 2) throw Error(ErrorKind::Length, "lpps needs |w| >= 2");
    PalIndex index(w);
    return w.suffix(index.lpps_length(w.size()));
}

Word lppp(const Word& w) {
    if (w.size() < 2) throw Error(ErrorKind::Length, "lppp needs |w| >= 2");
    return reverse(lpps(reverse(w)));
}

std::set<Word> pal_factors(const Word& w) {
    std::set<Word> out{Word(w.alphabet())};
    PalIndex index(w);
    for (auto p : index.palindromes()) out.insert(w.substr(p.first_end - p.length, p.length));
    return out;
}

std::set<Word> pal_factors_avoiding(const Word& w, const Word& r) {
    require_same_alphabet(w, r);
    std::set<Word> out;
    for (auto& p : pal_factors(w))
        if (!is_factor(p, r)) out.insert(p);
    return out;
}

bool is_rich(const Word& w) { return PalIndex(w).is_rich(); }

Word pal_closure(const Word& w) {
    const Word head = w.prefix(w.size() - lps(w).size());
    return w + reverse(head);
}

std::set<Word> complete_returns(const Word& w, const Word& u) {
    require_same_alphabet(w, u);
    if (u.empty()) throw Error(ErrorKind::EmptyPattern, "complete return to ε");
    const auto pos = occurrences(w, u);
    if (pos.empty()) throw Error(ErrorKind::NotAFactor, u.to_string() + " does not occur in " + w.to_string());
    std::set<Word> out;
    for (std::size_t i = 0; i + 1 < pos.size(); ++i) out.insert(w.substr(pos[i], pos[i + 1] + u.size() - pos[i]));
    return out;
}

} // namespace richwords
