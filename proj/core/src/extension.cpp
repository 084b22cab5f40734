#include "richwords/extension.hpp"

#include "richwords/error.hpp"
#include "richwords/pal_index.hpp"

namespace richwords {

namespace {

void require_extensible(const PalIndex& index) {
    if (index.size() < 2) throw Error(ErrorKind::Length, "standard extension needs |w| >= 2");
    if (!index.is_rich()) throw Error(ErrorKind::NotRich, index.word().to_string());
}

} // namespace

Word std_ext1(const Word& w) { return std_extj(w, 1); }

Word std_extj(const Word& w, std::size_t j) {
    PalIndex index(w);
    require_extensible(index);
    for (std::size_t i = 0; i < j; ++i) index.push_back(index.standard_letter());
    return index.word();
}

bool is_std_ext(const Word& u, const Word& v) {
    require_same_alphabet(u, v);
    PalIndex index(v);
    require_extensible(index);
    if (!is_prefix(u, v)) return false;
    for (std::size_t i = v.size(); i < u.size(); ++i) {
        if (u[i] != index.standard_letter()) return false;
        index.push_back(u[i]);
    }
    return true;
}

Word mse(const Word& u, const Word& v) {
    require_same_alphabet(u, v);
    if (!is_prefix(u, v)) throw Error(ErrorKind::NotAPrefix, v.to_string() + " is not a prefix of " + u.to_string());
    PalIndex index(v);
    require_extensible(index);
    std::size_t end = v.size();
    while (end < u.size() && u[end] == index.standard_letter()) index.push_back(u[end++]);
    return u.prefix(end);
}

std::vector<Symbol> rich_extensions(const Word& w) {
    PalIndex index(w);
    if (!index.is_rich()) throw Error(ErrorKind::NotRich, w.to_string());
    std::vector<Symbol> out;
    for (int a = 0; a < w.alphabet().size(); ++a) {
        index.push_back(static_cast<Symbol>(a));
        if (index.is_rich()) out.push_back(static_cast<Symbol>(a));
        index.pop_back();
    }
    return out;
}

std::vector<ExtensionStep> rich_extension_steps(const Word& w) {
    const auto letters = rich_extensions(w);
    std::vector<ExtensionStep> out;
    if (letters.empty()) return out;
    const bool has_standard = w.size() >= 2;
    const Symbol standard = has_standard ? PalIndex(w).standard_letter() : Symbol{0};
    for (Symbol a : letters) out.push_back({w, a, has_standard && a == standard});
    return out;
}

} // namespace richwords
