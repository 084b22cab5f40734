#include "richwords/word.hpp"

#include "richwords/error.hpp"

#include <algorithm>
#include <istream>
#include <ostream>

namespace richwords {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::Length: return "length violation";
    case ErrorKind::AlphabetMismatch: return "alphabet mismatch";
    case ErrorKind::InvalidSymbol: return "invalid symbol";
    case ErrorKind::EmptyPattern: return "empty pattern";
    case ErrorKind::NotRich: return "input not rich";
    case ErrorKind::NotAPrefix: return "not a prefix";
    case ErrorKind::NotAFactor: return "pattern not a factor";
    case ErrorKind::NotFlexed: return "not a flexed palindrome";
    case ErrorKind::GammaViolation: return "gamma violation";
    case ErrorKind::GuaranteeViolation: return "guarantee violation";
    case ErrorKind::InternalInconsistency: return "internal inconsistency";
    case ErrorKind::Precondition: return "precondition violation";
    case ErrorKind::Resource: return "resource limit";
    }
    return "error";
}

Alphabet::Alphabet(int q) : q_(q) {
    if (q < 1 || q > max_size)
        throw Error(ErrorKind::InvalidSymbol, "alphabet size must be in 1..36, got " + std::to_string(q));
}

char Alphabet::display(Symbol s) {
    if (s < 10) return static_cast<char>('0' + s);
    if (s < max_size) return static_cast<char>('a' + (s - 10));
    throw Error(ErrorKind::InvalidSymbol, "symbol index " + std::to_string(s) + " has no display character");
}

std::optional<Symbol> Alphabet::symbol_of(char c) noexcept {
    if (c >= '0' && c <= '9') return static_cast<Symbol>(c - '0');
    if (c >= 'a' && c <= 'z') return static_cast<Symbol>(c - 'a' + 10);
    return std::nullopt;
}

Word::Word(Alphabet alphabet, std::vector<Symbol> symbols)
    : alphabet_(alphabet), symbols_(std::move(symbols)) {
    for (Symbol s : symbols_)
        if (!alphabet_.contains(s))
            throw Error(ErrorKind::InvalidSymbol, "symbol " + std::to_string(s) + " outside alphabet of size " +
                                                      std::to_string(alphabet_.size()));
}

Word::Word(Alphabet alphabet, std::span<const Symbol> symbols)
    : Word(alphabet, std::vector<Symbol>(symbols.begin(), symbols.end())) {}

Word Word::parse(std::string_view text, Alphabet alphabet) {
    if (text == "-" || text == "ε") return Word(alphabet);
    std::vector<Symbol> symbols;
    symbols.reserve(text.size());
    for (char c : text) {
        auto s = Alphabet::symbol_of(c);
        if (!s || !alphabet.contains(*s))
            throw Error(ErrorKind::InvalidSymbol, std::string("character '") + c + "' not in alphabet of size " +
                                                      std::to_string(alphabet.size()));
        symbols.push_back(*s);
    }
    Word w(alphabet);
    w.symbols_ = std::move(symbols);
    return w;
}

Word Word::substr(std::size_t pos, std::size_t len) const {
    Word w(alphabet_);
    if (pos >= symbols_.size()) return w;
    len = std::min(len, symbols_.size() - pos);
    w.symbols_.assign(symbols_.begin() + static_cast<std::ptrdiff_t>(pos),
                      symbols_.begin() + static_cast<std::ptrdiff_t>(pos + len));
    return w;
}

Word Word::suffix(std::size_t len) const {
    len = std::min(len, symbols_.size());
    return substr(symbols_.size() - len, len);
}

Word Word::appended(Symbol s) const {
    if (!alphabet_.contains(s))
        throw Error(ErrorKind::InvalidSymbol, "symbol " + std::to_string(s) + " outside alphabet");
    Word w = *this;
    w.symbols_.push_back(s);
    return w;
}

std::string Word::to_string() const {
    std::string out;
    out.reserve(symbols_.size());
    for (Symbol s : symbols_) out.push_back(Alphabet::display(s));
    return out;
}

Word operator+(const Word& a, const Word& b) {
    require_same_alphabet(a, b);
    Word w = a;
    w.symbols_.insert(w.symbols_.end(), b.symbols_.begin(), b.symbols_.end());
    return w;
}

std::ostream& operator<<(std::ostream& os, const Word& w) {
    return os << (w.empty() ? std::string("ε") : w.to_string());
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
    // FNV-1a over the symbols and alphabet size.
    std::size_t h = 1469598103934665603ull;
    for (Symbol s : w) {
        h ^= s;
        h *= 1099511628211ull;
    }
    h ^= static_cast<std::size_t>(w.alphabet().size()) << 8;
    return h;
}

void require_same_alphabet(const Word& a, const Word& b) {
    if (a.alphabet() != b.alphabet())
        throw Error(ErrorKind::AlphabetMismatch, "q=" + std::to_string(a.alphabet().size()) + " vs q=" +
                                                     std::to_string(b.alphabet().size()));
}

Word reverse(const Word& w) {
    std::vector<Symbol> s(w.begin(), w.end());
    std::reverse(s.begin(), s.end());
    return Word(w.alphabet(), std::move(s));
}

Word trim(const Word& w) {
    if (w.size() < 2) throw Error(ErrorKind::Length, "trim needs |w| >= 2");
    return w.substr(1, w.size() - 2);
}

Word ltrim(const Word& w) {
    if (w.empty()) throw Error(ErrorKind::Length, "ltrim needs |w| >= 1");
    return w.substr(1);
}

Word rtrim(const Word& w) {
    if (w.empty()) throw Error(ErrorKind::Length, "rtrim needs |w| >= 1");
    return w.substr(0, w.size() - 1);
}

Word lcp(const Word& a, const Word& b) {
    require_same_alphabet(a, b);
    auto [ia, ib] = std::mismatch(a.begin(), a.end(), b.begin(), b.end());
    return a.prefix(static_cast<std::size_t>(ia - a.begin()));
}

Word lcs(const Word& a, const Word& b) {
    require_same_alphabet(a, b);
    std::size_t n = 0;
    while (n < a.size() && n < b.size() && a[a.size() - 1 - n] == b[b.size() - 1 - n]) ++n;
    return a.suffix(n);
}

bool is_prefix(const Word& w, const Word& p) noexcept {
    return p.size() <= w.size() && std::equal(p.begin(), p.end(), w.begin());
}

bool is_suffix(const Word& w, const Word& s) noexcept {
    return s.size() <= w.size() && std::equal(s.begin(), s.end(), w.end() - static_cast<std::ptrdiff_t>(s.size()));
}

bool is_palindrome(std::span<const Symbol> s) noexcept {
    for (std::size_t i = 0, j = s.size(); i + 1 < j; ++i, --j)
        if (s[i] != s[j - 1]) return false;
    return true;
}

std::optional<std::size_t> find(const Word& text, const Word& pattern, std::size_t from) {
    require_same_alphabet(text, pattern);
    if (pattern.empty()) throw Error(ErrorKind::EmptyPattern, "pattern must be nonempty");
    if (from > text.size()) return std::nullopt;
    auto it = std::search(text.begin() + static_cast<std::ptrdiff_t>(from), text.end(), pattern.begin(), pattern.end());
    if (it == text.end()) return std::nullopt;
    return static_cast<std::size_t>(it - text.begin());
}

std::vector<std::size_t> occurrences(const Word& text, const Word& pattern) {
    std::vector<std::size_t> out;
    for (auto pos = find(text, pattern, 0); pos; pos = find(text, pattern, *pos + 1)) out.push_back(*pos);
    return out;
}

std::size_t occ(const Word& text, const Word& pattern) { return occurrences(text, pattern).size(); }

bool is_factor(const Word& w, const Word& v) {
    require_same_alphabet(w, v);
    return v.empty() || find(w, v).has_value();
}

std::set<Word> factors(const Word& w) {
    std::set<Word> out;
    out.insert(Word(w.alphabet()));
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t len = 1; i + len <= w.size(); ++len) out.insert(w.substr(i, len));
    return out;
}

void for_each_factor(const Word& w, const std::function<void(std::size_t, std::size_t)>& visit) {
    visit(0, 0);
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t len = 1; i + len <= w.size(); ++len) visit(i, len);
}

namespace {

std::string_view strip(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

} // namespace

Alphabet infer_alphabet(std::span<const std::string> texts) {
    int q = 1;
    for (const auto& text : texts)
        for (char c : text) {
            if (text == "-" || text == "ε") break;
            auto s = Alphabet::symbol_of(c);
            if (!s) throw Error(ErrorKind::InvalidSymbol, std::string("character '") + c + "' has no symbol index");
            q = std::max(q, *s + 1);
        }
    return Alphabet(q);
}

std::vector<Word> read_words(std::istream& in) {
    std::optional<Alphabet> declared;
    std::vector<std::string> lines;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        auto s = strip(line);
        if (first && s.starts_with("q=")) {
            declared = Alphabet(std::stoi(std::string(s.substr(2))));
            first = false;
            continue;
        }
        if (s.empty() || s.front() == '#') continue;
        first = false;
        lines.emplace_back(s);
    }
    Alphabet alphabet = declared ? *declared : infer_alphabet(lines);
    std::vector<Word> words;
    words.reserve(lines.size());
    for (const auto& l : lines) words.push_back(Word::parse(l, alphabet));
    return words;
}

void write_words(std::ostream& out, std::span<const Word> words, bool with_header) {
    if (with_header && !words.empty()) out << "q=" << words.front().alphabet().size() << '\n';
    for (const auto& w : words) out << (w.empty() ? std::string("-") : w.to_string()) << '\n';
}

} // namespace richwords
