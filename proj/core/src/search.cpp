#include "richwords/search.hpp"

#include "richwords/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <mutex>
#include <thread>

namespace richwords {

namespace {

class RichWalker {
public:
    RichWalker(const EnumConfig& config, const std::function<void(const PalIndex&)>& visit)
        : config_(config), visit_(visit), index_(Alphabet(config.q)) {}

    void run_from(std::optional<Symbol> first) {
        if (!first) {
            walk(0);
            return;
        }
        index_.push_back(*first);
        walk(*first + 1);
        index_.pop_back();
    }

private:
    // `fresh` is the smallest letter not yet used (only meaningful when canonical).
    void walk(int fresh) {
        visit_(index_);
        if (index_.size() == config_.max_length) return;
        const int limit = config_.canonical ? std::min(config_.q, fresh + 1) : config_.q;
        for (int a = 0; a < limit; ++a) {
            index_.push_back(static_cast<Symbol>(a));
            if (index_.is_rich()) walk(std::max(fresh, a + 1));
            index_.pop_back();
        }
    }

    const EnumConfig& config_;
    const std::function<void(const PalIndex&)>& visit_;
    PalIndex index_;
};

} // namespace

void for_each_rich(const EnumConfig& config, const std::function<void(const PalIndex&)>& visit) {
    (void)Alphabet(config.q);
    if (config.threads <= 1 || config.max_length == 0) {
        RichWalker(config, visit).run_from(std::nullopt);
        return;
    }
    // ε on the calling thread, then one subtree per first letter.
    visit(PalIndex(Alphabet(config.q)));
    const int roots = config.canonical ? 1 : config.q;
    const unsigned workers = std::min<unsigned>(config.threads, static_cast<unsigned>(roots));
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t)
        pool.emplace_back([&, t] {
            for (int a = static_cast<int>(t); a < roots; a += static_cast<int>(workers))
                RichWalker(config, visit).run_from(static_cast<Symbol>(a));
        });
}

std::vector<Word> enumerate_rich(const EnumConfig& config) {
    std::vector<Word> out;
    std::mutex mu;
    for_each_rich(config, [&](const PalIndex& index) {
        std::lock_guard lock(mu);
        out.push_back(index.word());
    });
    return out;
}

std::vector<std::uint64_t> count_rich(const EnumConfig& config) {
    std::vector<std::uint64_t> counts(config.max_length + 1, 0);
    std::mutex mu;
    for_each_rich(config, [&](const PalIndex& index) {
        std::lock_guard lock(mu);
        ++counts[index.size()];
    });
    return counts;
}

std::string_view to_string(SearchStatus s) { return s == SearchStatus::Witness ? "witness" : "exhausted_budget"; }

namespace {

class SuperwordSearch {
public:
    SuperwordSearch(const Word& w1, const Word& w2, const SearchBudget& budget)
        : w1_(w1), w2_(w2), w1r_(reverse(w1)), w2r_(reverse(w2)), budget_(budget), index_(w1.alphabet()) {}

    SearchVerdict run() {
        SearchVerdict verdict;
        verdict.budget = budget_;
        for (std::size_t depth = 1; depth <= budget_.max_length && !out_of_nodes_ && !direct_; ++depth) {
            target_ = depth;
            dfs();
        }
        verdict.explored = explored_;
        if (direct_) {
            verdict.witness = direct_;
        } else if (oriented_) {
            verdict.witness = pal_closure(*oriented_);
        }
        if (verdict.witness) {
            if (!is_rich(*verdict.witness) || !is_factor(*verdict.witness, w1_) || !is_factor(*verdict.witness, w2_))
                throw Error(ErrorKind::InternalInconsistency, "witness failed re-validation");
            verdict.status = SearchStatus::Witness;
        }
        return verdict;
    }

private:
    // Returns true to stop the whole search.
    bool dfs() {
        if (index_.size() == target_) {
            const Word w = index_.word();
            const bool has1 = is_factor(w, w1_), has2 = is_factor(w, w2_);
            if (has1 && has2) {
                direct_ = w;
                return true;
            }
            if (!oriented_ && (has1 || is_factor(w, w1r_)) && (has2 || is_factor(w, w2r_))) oriented_ = w;
            return false;
        }
        std::vector<Symbol> order;
        order.reserve(static_cast<std::size_t>(w1_.alphabet().size()));
        if (index_.size() > 0) order.push_back(index_.standard_letter());
        for (int a = 0; a < w1_.alphabet().size(); ++a)
            if (order.empty() || order.front() != a) order.push_back(static_cast<Symbol>(a));
        for (Symbol a : order) {
            if (explored_ >= budget_.max_nodes) {
                out_of_nodes_ = true;
                return true;
            }
            index_.push_back(a);
            ++explored_;
            const bool stop = index_.is_rich() && dfs();
            index_.pop_back();
            if (stop) return true;
        }
        return false;
    }

    Word w1_, w2_, w1r_, w2r_;
    SearchBudget budget_;
    PalIndex index_;
    std::size_t target_ = 0;
    std::uint64_t explored_ = 0;
    bool out_of_nodes_ = false;
    std::optional<Word> direct_;
    std::optional<Word> oriented_;
};

} // namespace

SearchVerdict find_common_superword(const Word& w1, const Word& w2, const SearchBudget& budget) {
    require_same_alphabet(w1, w2);
    if (!is_rich(w1)) throw Error(ErrorKind::NotRich, w1.to_string());
    if (!is_rich(w2)) throw Error(ErrorKind::NotRich, w2.to_string());
    if (is_factor(w1, w2) || is_factor(w2, w1)) {
        SearchVerdict v;
        v.status = SearchStatus::Witness;
        v.witness = w1.size() >= w2.size() ? w1 : w2;
        v.budget = budget;
        return v;
    }
    return SuperwordSearch(w1, w2, budget).run();
}

std::string to_json(const SearchVerdict& verdict) {
    nlohmann::ordered_json j;
    j["record"] = "search";
    j["status"] = std::string(to_string(verdict.status));
    j["witness"] = verdict.witness ? nlohmann::ordered_json(verdict.witness->to_string()) : nlohmann::ordered_json(nullptr);
    j["explored"] = verdict.explored;
    j["max_length"] = verdict.budget.max_length;
    j["max_nodes"] = verdict.budget.max_nodes;
    return j.dump();
}

std::map<std::size_t, std::size_t> pal_complexity_profile(const Word& w) {
    std::map<std::size_t, std::size_t> out;
    for (auto p : PalIndex(w).palindromes()) ++out[p.length];
    return out;
}

} // namespace richwords
