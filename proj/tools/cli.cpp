#include "cli.hpp"

#include "richwords/bounds.hpp"
#include "richwords/eliminator.hpp"
#include "richwords/error.hpp"
#include "richwords/extension.hpp"
#include "richwords/pal_index.hpp"
#include "richwords/reduction.hpp"
#include "richwords/search.hpp"
#include "richwords/word.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <ostream>

namespace richwords::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { Plain, Json, Csv };

struct Options {
    std::vector<std::string> words;
    int q = 0;  // 0 = infer
    Format format = Format::Plain;
    bool trace = false;
    bool waive_maximality = false;

    // factors
    bool palindromic = false;
    std::string avoid;
    // extend
    std::size_t j = 1;
    bool all = false;
    // bound
    std::uint64_t m = 0;
    std::size_t digit_cap = default_digit_cap;
    // enumerate / search
    std::size_t max_length = 12;
    std::uint64_t max_nodes = 10'000'000;
    bool canonical = false;
    bool list = false;
    unsigned threads = 1;
};

std::string show(const Word& w) { return w.empty() ? "-" : w.to_string(); }

class Session {
public:
    Session(const Options& opt, std::ostream& out, std::ostream& err) : opt_(opt), out_(out), err_(err) {}

    Alphabet alphabet() const {
        if (opt_.q > 0) return Alphabet(opt_.q);
        auto texts = opt_.words;
        if (!opt_.avoid.empty()) texts.push_back(opt_.avoid);
        std::erase_if(texts, [](const std::string& s) { return s == "-" || s == "ε"; });
        return infer_alphabet(texts);
    }

    Word word(std::size_t i) const { return Word::parse(opt_.words.at(i), alphabet()); }

    bool json() const { return opt_.format == Format::Json; }

    Maximality maximality() const { return opt_.waive_maximality ? Maximality::Waived : Maximality::Required; }

    void emit(const Json& record) { out_ << record.dump() << '\n'; }

    int check() {
        const Word w = word(0);
        PalIndex index(w);
        if (json())
            emit({{"record", "check"}, {"word", show(w)}, {"rich", index.is_rich()},
                  {"palindromes", index.distinct_palindromes()}});
        else
            out_ << (index.is_rich() ? "rich" : "not rich") << '\n';
        return exit_ok;
    }

    int factors() {
        const Word w = word(0);
        std::set<Word> set;
        if (!opt_.avoid.empty())
            set = pal_factors_avoiding(w, Word::parse(opt_.avoid, alphabet()));
        else
            set = opt_.palindromic ? pal_factors(w) : richwords::factors(w);
        std::vector<Word> sorted(set.begin(), set.end());
        std::stable_sort(sorted.begin(), sorted.end(), [](const Word& a, const Word& b) { return a.size() < b.size(); });
        if (json()) {
            Json arr = Json::array();
            for (const auto& f : sorted) arr.push_back(show(f));
            emit({{"record", "factors"}, {"word", show(w)}, {"count", sorted.size()}, {"factors", arr}});
        } else {
            for (const auto& f : sorted) out_ << show(f) << '\n';
        }
        return exit_ok;
    }

    int flexed() {
        const Word w = word(0);
        for (const auto& f : flx_pal(w)) {
            if (json())
                emit({{"record", "flexed"}, {"palindrome", show(f.palindrome)}, {"position", f.position},
                      {"standard_replacement", show(f.standard_replacement)}});
            else
                out_ << show(f.palindrome) << ' ' << f.position << ' ' << show(f.standard_replacement) << '\n';
        }
        return exit_ok;
    }

    int closure() {
        const Word c = pal_closure(word(0));
        if (json())
            emit({{"record", "closure"}, {"word", opt_.words[0]}, {"closure", show(c)}});
        else
            out_ << show(c) << '\n';
        return exit_ok;
    }

    int extend() {
        const Word w = word(0);
        if (opt_.all) {
            for (const auto& step : rich_extension_steps(w)) {
                const std::string letter(1, Alphabet::display(step.letter));
                if (json())
                    emit({{"record", "extension"}, {"letter", letter}, {"standard", step.is_standard}});
                else
                    out_ << letter << ' ' << (step.is_standard ? "standard" : "flexed") << '\n';
            }
            return exit_ok;
        }
        const Word e = std_extj(w, opt_.j);
        if (json())
            emit({{"record", "extend"}, {"word", show(w)}, {"j", opt_.j}, {"extension", show(e)}});
        else
            out_ << show(e) << '\n';
        return exit_ok;
    }

    int gamma() {
        const Word w = word(0), r = word(1);
        auto check = gamma_check(w, r, maximality());
        if (auto* rej = std::get_if<GammaRejection>(&check)) {
            if (json()) out_ << to_json(*rej) << '\n';
            err_ << "rejected: condition " << rej->condition << ": " << rej->reason << '\n';
            return exit_rejected;
        }
        const auto& p = std::get<GammaPair>(check).parse;
        if (json())
            emit({{"record", "gamma"}, {"accepted", true}, {"v", show(p.v)}, {"z", show(p.z)}, {"t", show(p.t)}});
        else
            out_ << "accepted v=" << show(p.v) << " z=" << show(p.z) << " t=" << show(p.t) << '\n';
        return exit_ok;
    }

    int parse_cmd() {
        const auto p = parse(word(0), word(1), maximality());
        if (json())
            emit({{"record", "parse"}, {"v", show(p.v)}, {"z", show(p.z)}, {"t", show(p.t)}});
        else
            out_ << "v=" << show(p.v) << " z=" << show(p.z) << " t=" << show(p.t) << '\n';
        return exit_ok;
    }

    int reduce() {
        // Without the maximality condition only the construction runs; nothing is asserted.
        const auto red = opt_.waive_maximality ? [&] {
            auto trace = rpr(word(0), word(1), Maximality::Waived);
            Word result = trace.result;
            return Reduction{std::move(result), std::move(trace)};
        }()
                                               : rdc_wrd(word(0), word(1));
        if (json() && !opt_.trace)
            emit({{"record", "reduce"}, {"result", show(red.word)}, {"rpr", show(red.trace.rpr)},
                  {"case", std::string(to_string(red.trace.kind))}});
        else if (!json())
            out_ << show(red.word) << '\n';
        if (opt_.trace) out_ << to_json(red.trace) << '\n';
        return exit_ok;
    }

    int eliminate() {
        const auto trace = elm(word(0), word(1), word(2));
        if (json() && !opt_.trace)
            emit({{"record", "eliminate"}, {"final", show(trace.final_word)}, {"iterations", trace.iterations()}});
        else if (!json())
            out_ << show(trace.final_word) << '\n';
        if (opt_.trace) out_ << to_json(trace) << '\n';
        return exit_ok;
    }

    int ruo_cmd() {
        const Word t = ruo(word(0), word(1), word(2));
        if (json())
            emit({{"record", "ruo"}, {"result", show(t)}});
        else
            out_ << show(t) << '\n';
        return exit_ok;
    }

    int bound() {
        if (opt_.m == 0 || opt_.q == 0) {
            err_ << "bound requires --m >= 1 and --q >= 1\n";
            return exit_usage;
        }
        const auto q = static_cast<std::uint64_t>(opt_.q);
        const auto rep = bound_total(opt_.m, q, opt_.digit_cap);
        const std::string k = format_bound(rep.k, opt_.digit_cap);
        const std::string total = rep.total ? format_bound(*rep.total, opt_.digit_cap) : format_log10(rep.log10_total);
        const std::string prefix =
            rep.prefix_bound ? format_bound(*rep.prefix_bound, opt_.digit_cap) : format_log10(rep.log10_total - std::log10(2.0));
        if (json()) {
            emit({{"record", "bound"}, {"m", rep.m}, {"q", rep.q}, {"k", k}, {"total", total},
                  {"prefix_bound", prefix}, {"log10_k", rep.log10_k}, {"log10_total", rep.log10_total},
                  {"exact", rep.total.has_value()}});
        } else {
            out_ << "k=" << k << '\n'
                 << "total=" << total << '\n'
                 << "prefix_bound=" << prefix << '\n'
                 << "log10_k=" << rep.log10_k << '\n'
                 << "log10_total=" << rep.log10_total << '\n';
        }
        return exit_ok;
    }

    int enumerate() {
        if (opt_.q <= 0) {
            err_ << "enumerate requires --q\n";
            return exit_usage;
        }
        EnumConfig config{opt_.q, opt_.max_length, opt_.canonical, opt_.threads};
        if (opt_.list) {
            for (const auto& w : enumerate_rich(config)) out_ << show(w) << '\n';
            return exit_ok;
        }
        const auto counts = count_rich(config);
        if (json()) {
            for (std::size_t n = 0; n < counts.size(); ++n) emit({{"record", "count"}, {"length", n}, {"count", counts[n]}});
        } else {
            out_ << "length,count\n";
            for (std::size_t n = 0; n < counts.size(); ++n) out_ << n << ',' << counts[n] << '\n';
        }
        return exit_ok;
    }

    int search() {
        const auto verdict = find_common_superword(word(0), word(1), SearchBudget{opt_.max_length, opt_.max_nodes});
        if (json())
            out_ << to_json(verdict) << '\n';
        else
            out_ << to_string(verdict.status) << (verdict.witness ? " " + show(*verdict.witness) : std::string())
                 << " explored=" << verdict.explored << '\n';
        return exit_ok;
    }

    int profile() {
        const auto prof = pal_complexity_profile(word(0));
        if (json()) {
            for (auto [n, c] : prof) emit({{"record", "profile"}, {"length", n}, {"count", c}});
        } else {
            out_ << "length,count\n";
            for (auto [n, c] : prof) out_ << n << ',' << c << '\n';
        }
        return exit_ok;
    }

private:
    const Options& opt_;
    std::ostream& out_;
    std::ostream& err_;
};

void add_common(CLI::App* sub, Options& opt) {
    sub->add_option("--q", opt.q, "alphabet size (default: inferred from the words)")->check(CLI::Range(1, 36));
    sub->add_option("--format", opt.format, "output format")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, Format>{{"plain", Format::Plain}, {"json", Format::Json}, {"csv", Format::Csv}}));
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Palindromic richness toolkit", "richwords"};
    app.require_subcommand(1);
    Options opt;
    std::map<CLI::App*, std::function<int(Session&)>> handlers;

    auto sub = [&](const char* name, const char* help, std::vector<const char*> positional, auto handler) {
        CLI::App* s = app.add_subcommand(name, help);
        add_common(s, opt);
        if (!positional.empty()) {
            auto* o = s->add_option("words", opt.words, std::string("word arguments: ") + [&] {
                std::string names;
                for (auto* p : positional) names += std::string(names.empty() ? "" : " ") + p;
                return names;
            }());
            o->required()->expected(static_cast<int>(positional.size()));
        }
        handlers[s] = handler;
        return s;
    };

    sub("check", "test whether a word is rich", {"W"}, [](Session& s) { return s.check(); });
    auto* fac = sub("factors", "list distinct factors", {"W"}, [](Session& s) { return s.factors(); });
    fac->add_flag("--palindromic", opt.palindromic, "only palindromic factors");
    fac->add_option("--avoid", opt.avoid, "palindromic factors not containing this word");
    sub("flexed", "flexed palindromes: palindrome, position, standard replacement", {"W"},
        [](Session& s) { return s.flexed(); });
    sub("closure", "palindromic closure", {"W"}, [](Session& s) { return s.closure(); });
    auto* ext = sub("extend", "standard extension StdExt(W, j)", {"W"}, [](Session& s) { return s.extend(); });
    ext->add_option("--j", opt.j, "number of standard steps")->capture_default_str();
    ext->add_flag("--all", opt.all, "list every rich one-letter extension instead");
    const char* waive_help = "skip the longest-flexed-palindrome condition (no guarantees on the result)";
    auto* gam = sub("gamma", "check membership of (W, R) in Gamma", {"W", "R"}, [](Session& s) { return s.gamma(); });
    gam->add_flag("--waive-maximality", opt.waive_maximality, waive_help);
    auto* par = sub("parse", "parse (W, R) into v z t", {"W", "R"}, [](Session& s) { return s.parse_cmd(); });
    par->add_flag("--waive-maximality", opt.waive_maximality, waive_help);
    auto* red = sub("reduce", "reduced word rdcWrd(W, R)", {"W", "R"}, [](Session& s) { return s.reduce(); });
    red->add_flag("--trace", opt.trace, "emit the reduction trace as a JSON line");
    red->add_flag("--waive-maximality", opt.waive_maximality, waive_help);
    auto* el = sub("eliminate", "eliminated word elm(W, W1, W2)", {"W", "W1", "W2"},
                   [](Session& s) { return s.eliminate(); });
    el->add_flag("--trace", opt.trace, "emit the elimination trace as a JSON line");
    sub("ruo", "reverse unioccurrence ruo(W, W1, W2)", {"W", "W1", "W2"}, [](Session& s) { return s.ruo_cmd(); });
    auto* bnd = sub("bound", "length bounds k(m) and m*2^(k(m)+2)", {}, [](Session& s) { return s.bound(); });
    bnd->add_option("--m", opt.m, "max(|w1|, |w2|)")->required();
    bnd->add_option("--digit-cap", opt.digit_cap, "largest exact integer printed, in digits")->capture_default_str();
    auto* en = sub("enumerate", "count (or list) rich words by length", {}, [](Session& s) { return s.enumerate(); });
    en->add_option("--max-length", opt.max_length, "maximum word length")->capture_default_str();
    en->add_flag("--canonical", opt.canonical, "one word per letter-renaming class");
    en->add_flag("--list", opt.list, "print the words instead of counts");
    en->add_option("--threads", opt.threads, "worker threads")->capture_default_str();
    auto* se = sub("search", "look for a rich word containing W1 and W2", {"W1", "W2"},
                   [](Session& s) { return s.search(); });
    se->add_option("--max-length", opt.max_length, "longest candidate explored")->capture_default_str();
    se->add_option("--max-nodes", opt.max_nodes, "node budget")->capture_default_str();
    sub("profile", "palindromic complexity profile as length,count", {"W"}, [](Session& s) { return s.profile(); });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, err, err);
        return exit_usage;
    }

    Session session(opt, out, err);
    try {
        for (auto& [s, handler] : handlers)
            if (s->parsed()) return handler(session);
    } catch (const Error& e) {
        err << e.what() << '\n';
        return e.kind() == ErrorKind::InvalidSymbol ? exit_usage : exit_rejected;
    }
    return exit_usage;
}

} // namespace richwords::cli
