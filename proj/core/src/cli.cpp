#include "rsp/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "rsp/automaton.hpp"
#include "rsp/language.hpp"
#include "rsp/numerals.hpp"
#include "rsp/oracle.hpp"
#include "rsp/participation.hpp"
#include "rsp/serialize.hpp"

namespace rsp::cli {

namespace {

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

// a or a digit argument: alphanumeric (base alphabet) unless --decimal;
// plain decimal is the fallback when the alphabet reading fails.
long long parse_a_arg(const std::string& text, int base, bool decimal) {
    bool plain = !text.empty() && std::all_of(text.begin(), text.end(),
                                              [](unsigned char c) { return std::isdigit(c); });
    auto as_decimal = [&text] {
        try {
            return std::stoll(text);
        } catch (const std::out_of_range&) {
            throw std::invalid_argument("number out of range: '" + text + "'");
        }
    };
    if (decimal) {
        if (!plain) throw std::invalid_argument("--decimal expects a base-10 integer, got '" + text + "'");
        return as_decimal();
    }
    long long candidate = -1;
    try {
        Value v = from_digits(parse(text, base), base);
        if (v <= static_cast<Value>(std::numeric_limits<long long>::max()))
            candidate = static_cast<long long>(v);
    } catch (const std::exception&) {
        candidate = -1;
    }
    // the alphabet reading wins whenever it is usable as a multiplier; a
    // multi-digit decimal string reads as >= base, so falling back to base
    // 10 can never shadow a valid alphabet value
    if (candidate >= 1 && candidate < base) return candidate;
    if (plain) return as_decimal();
    if (candidate >= 0) return candidate;
    throw std::invalid_argument("invalid multiplier '" + text + "' for base " + std::to_string(base));
}

int default_jobs() {
    if (const char* env = std::getenv("RSP_JOBS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

// Deterministic data-parallel sweep: results land in a per-index slot, so
// the merge order never depends on scheduling.
template <typename F>
void parallel_for(int count, int jobs, F&& body) {
    if (jobs <= 1 || count <= 1) {
        for (int i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<int> next{0};
    auto worker = [&] {
        while (true) {
            int i = next.fetch_add(1);
            if (i >= count) break;
            body(i);
        }
    };
    std::vector<std::thread> pool;
    int n = std::min(jobs, count);
    pool.reserve(static_cast<size_t>(n));
    for (int t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

int deliver(const std::string& text, const std::string& out_file, std::ostream& out, std::ostream& err) {
    if (out_file.empty()) {
        out << text;
        return 0;
    }
    std::ofstream f(out_file);
    if (!f) {
        err << "error: cannot open '" << out_file << "' for writing\n";
        return 1;
    }
    f << text;
    if (!f.good()) {
        err << "error: failed while writing '" << out_file << "'\n";
        return 1;
    }
    return 0;
}

std::string render_value(Value v, int base) { return render(to_digits(v, base), base); }

struct PairsOptions {
    int base = 0;
    std::string a_text;
    int max_digits = 6;
    bool decimal = false;
    std::string format = "text";
    std::string out_file;
};

std::string run_pairs(const PairsOptions& opt) {
    std::ostringstream text;
    if (!opt.a_text.empty()) {
        long long a = parse_a_arg(opt.a_text, opt.base, opt.decimal);
        if (a < 1 || a >= opt.base) throw std::invalid_argument("a must satisfy 1 <= a < base");
        RspAutomaton automaton = RspAutomaton::build(static_cast<int>(a), opt.base);
        std::vector<std::string> values = b_values(automaton, opt.max_digits);
        if (opt.format == "json") {
            nlohmann::json doc;
            doc["base"] = opt.base;
            doc["a"] = a;
            doc["max_digits"] = opt.max_digits;
            doc["b_values"] = values;
            text << doc.dump(2) << "\n";
        } else {
            for (const std::string& v : values) text << v << "\n";
        }
        return text.str();
    }

    struct Entry {
        int a;
        Digits b;
    };
    std::vector<Entry> entries;
    for (int a = 1; a < opt.base; ++a) {
        RspAutomaton automaton = RspAutomaton::build(a, opt.base);
        for (const LabelString& s : accepted_strings(automaton, opt.max_digits))
            entries.push_back(Entry{a, b_from_string(s)});
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& l, const Entry& r) {
        if (l.a != r.a) return l.a < r.a;
        if (l.b.size() != r.b.size()) return l.b.size() < r.b.size();
        return l.b < r.b;
    });
    entries.erase(std::unique(entries.begin(), entries.end(),
                              [](const Entry& l, const Entry& r) { return l.a == r.a && l.b == r.b; }),
                  entries.end());
    if (opt.format == "json") {
        nlohmann::json doc;
        doc["base"] = opt.base;
        doc["max_digits"] = opt.max_digits;
        doc["pairs"] = nlohmann::json::array();
        for (const Entry& e : entries) {
            nlohmann::json jp;
            jp["a"] = e.a;
            jp["a_str"] = render_value(static_cast<Value>(e.a), opt.base);
            jp["b_str"] = render(e.b, opt.base);
            jp["digits"] = e.b.size();
            doc["pairs"].push_back(std::move(jp));
        }
        text << doc.dump(2) << "\n";
    } else {
        for (const Entry& e : entries)
            text << "(" << render_value(static_cast<Value>(e.a), opt.base) << "," << render(e.b, opt.base)
                 << ")\n";
    }
    return text.str();
}

struct AutomatonOptions {
    int base = 0;
    std::string a_text;
    bool trim_it = false;
    bool decimal = false;
    std::string format = "text";
    std::string out_file;
};

std::string run_automaton(const AutomatonOptions& opt) {
    long long a = parse_a_arg(opt.a_text, opt.base, opt.decimal);
    if (a < 1 || a >= opt.base) throw std::invalid_argument("a must satisfy 1 <= a < base");
    RspAutomaton automaton = RspAutomaton::build(static_cast<int>(a), opt.base);
    if (opt.trim_it) automaton = trim(automaton);
    if (opt.format == "json") return automaton_to_json(automaton) + "\n";
    if (opt.format == "dot") return automaton_to_dot(automaton);
    AutomatonStats s = automaton.stats();
    std::ostringstream text;
    text << "RspAutomaton with base = " << opt.base << " and a = "
         << render_value(static_cast<Value>(a), opt.base) << "\n";
    text << "  States: " << s.states << "\n";
    text << "  Transitions: " << s.transitions << "\n";
    text << "  Accepting: " << s.accepting << "\n";
    text << "  Trimmed: " << (s.trimmed ? "true" : "false") << "\n";
    return text.str();
}

struct RegexOptions {
    int base = 0;
    std::string a_text;
    bool decimal = false;
    std::string out_file;
};

std::string run_regex(const RegexOptions& opt) {
    long long a = parse_a_arg(opt.a_text, opt.base, opt.decimal);
    if (a < 1 || a >= opt.base) throw std::invalid_argument("a must satisfy 1 <= a < base");
    RspAutomaton automaton = RspAutomaton::build(static_cast<int>(a), opt.base);
    return render_regex(to_regex(automaton), opt.base) + "\n";
}

struct ParticipationOptions {
    int a = 0;
    std::string format = "text";
    std::string out_file;
};

std::string run_participation(const ParticipationOptions& opt) {
    ParticipationProfile profile = participation_residues(opt.a);
    Ratio o{static_cast<long long>(profile.residues.size()), profile.modulus};
    if (opt.format == "json") {
        nlohmann::json doc;
        doc["a"] = profile.a;
        doc["modulus"] = profile.modulus;
        doc["threshold"] = profile.threshold;
        doc["omega"] = {{"num", o.num}, {"den", o.den}};
        doc["residues"] = nlohmann::json::array();
        for (int v : profile.residues)
            doc["residues"].push_back({{"residue", v}, {"min_base", profile.min_base.at(v)}});
        return doc.dump(2) + "\n";
    }
    std::ostringstream text;
    text << "a = " << profile.a << "\n";
    text << "modulus = " << profile.modulus << "\n";
    text << "threshold = " << profile.threshold << "\n";
    text << "omega = " << o.num << "/" << o.den << " ~ " << fixed6(o.approx()) << "\n";
    text << "residue min_base\n";
    for (int v : profile.residues) text << v << " " << profile.min_base.at(v) << "\n";
    return text.str();
}

struct OmegaOptions {
    int a_max = 0;
    std::string format = "text";
    std::string out_file;
};

std::string run_omega(const OmegaOptions& opt) {
    std::ostringstream text;
    nlohmann::json rows = nlohmann::json::array();
    for (int a = 2; a <= opt.a_max; ++a) {
        Ratio o = omega(a);
        if (opt.format == "json")
            rows.push_back({{"a", a}, {"num", o.num}, {"den", o.den}, {"approx", o.approx()}});
        else
            text << a << " " << o.num << "/" << o.den << " " << fixed6(o.approx()) << "\n";
    }
    if (opt.format == "json") {
        nlohmann::json doc;
        doc["omega"] = std::move(rows);
        return doc.dump(2) + "\n";
    }
    return text.str();
}

struct SweepOptions {
    int max_base = 0;
    int jobs = 1;
    std::string format = "text";
    std::string out_file;
};

std::string run_ratio(const SweepOptions& opt) {
    const int count = opt.max_base - 1;  // bases 2..max_base
    std::vector<Ratio> ratios(static_cast<size_t>(count));
    parallel_for(count, opt.jobs, [&](int i) { ratios[static_cast<size_t>(i)] = r_ratio(i + 2); });

    double mean = 0.0;
    for (const Ratio& r : ratios) mean += r.approx();
    mean /= count;
    double variance = 0.0;
    for (const Ratio& r : ratios) {
        double d = r.approx() - mean;
        variance += d * d;
    }
    variance /= count;

    if (opt.format == "json") {
        nlohmann::json doc;
        doc["max_base"] = opt.max_base;
        doc["ratios"] = nlohmann::json::array();
        for (int i = 0; i < count; ++i) {
            const Ratio& r = ratios[static_cast<size_t>(i)];
            doc["ratios"].push_back(
                {{"base", i + 2}, {"num", r.num}, {"den", r.den}, {"value", r.approx()}});
        }
        doc["mean"] = mean;
        doc["variance"] = variance;
        return doc.dump(2) + "\n";
    }
    std::ostringstream text;
    for (int i = 0; i < count; ++i) {
        const Ratio& r = ratios[static_cast<size_t>(i)];
        text << (i + 2) << " " << r.num << "/" << r.den << " " << fixed6(r.approx()) << "\n";
    }
    text << "mean " << fixed6(mean) << "\n";
    text << "variance " << fixed6(variance) << "\n";
    return text.str();
}

std::string run_conjecture(const SweepOptions& opt) {
    const int count = opt.max_base - 1;
    std::vector<uint8_t> has(static_cast<size_t>(count), 0);
    parallel_for(count, opt.jobs, [&](int i) { has[static_cast<size_t>(i)] = any_participant(i + 2) ? 1 : 0; });
    std::vector<int> exceptions;
    for (int i = 0; i < count; ++i)
        if (!has[static_cast<size_t>(i)]) exceptions.push_back(i + 2);
    if (opt.format == "json") {
        nlohmann::json doc;
        doc["max_base"] = opt.max_base;
        doc["exceptions"] = exceptions;
        return doc.dump(2) + "\n";
    }
    std::ostringstream text;
    for (size_t i = 0; i < exceptions.size(); ++i) {
        if (i > 0) text << " ";
        text << exceptions[i];
    }
    text << "\n";
    return text.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Reversed sum-product pairs: automata, enumeration and base scans"};
    app.require_subcommand(1);

    PairsOptions pairs_opt;
    auto* pairs = app.add_subcommand("pairs", "List pairs for a base, or b values for one multiplier");
    pairs->add_option("--base", pairs_opt.base, "Base (>= 2)")->required()->check(CLI::Range(2, 2000000));
    pairs->add_option("--a", pairs_opt.a_text, "Multiplier (base alphabet, or decimal with --decimal)");
    pairs->add_option("--max-digits", pairs_opt.max_digits, "Largest digit count of b (default 6)")
        ->check(CLI::Range(1, 4096));
    pairs->add_flag("--decimal", pairs_opt.decimal, "Read --a as base 10");
    pairs->add_option("--format", pairs_opt.format)->check(CLI::IsMember({"text", "json"}));
    pairs->add_option("--out", pairs_opt.out_file, "Write output to a file instead of stdout");

    AutomatonOptions auto_opt;
    auto* automaton = app.add_subcommand("automaton", "Build the DFA for (base, a) and serialize it");
    automaton->add_option("--base", auto_opt.base, "Base (>= 2)")->required()->check(CLI::Range(2, 2000000));
    automaton->add_option("--a", auto_opt.a_text, "Multiplier")->required();
    automaton->add_flag("--trim", auto_opt.trim_it, "Remove states on no accepting path");
    automaton->add_flag("--decimal", auto_opt.decimal, "Read --a as base 10");
    automaton->add_option("--format", auto_opt.format)->check(CLI::IsMember({"text", "json", "dot"}));
    automaton->add_option("--out", auto_opt.out_file, "Write output to a file instead of stdout");

    RegexOptions regex_opt;
    auto* regex = app.add_subcommand("regex", "Regular expression equivalent to the DFA");
    regex->add_option("--base", regex_opt.base, "Base (>= 2)")->required()->check(CLI::Range(2, 2000000));
    regex->add_option("--a", regex_opt.a_text, "Multiplier")->required();
    regex->add_flag("--decimal", regex_opt.decimal, "Read --a as base 10");
    regex->add_option("--out", regex_opt.out_file, "Write output to a file instead of stdout");

    ParticipationOptions part_opt;
    auto* participation = app.add_subcommand("participation", "Residue classes where a participates");
    participation->add_option("--a", part_opt.a, "Multiplier (>= 2, base 10)")->required()->check(CLI::Range(2, 4096));
    participation->add_option("--format", part_opt.format)->check(CLI::IsMember({"text", "json"}));
    participation->add_option("--out", part_opt.out_file, "Write output to a file instead of stdout");

    OmegaOptions omega_opt;
    auto* omega_cmd = app.add_subcommand("omega", "Participation densities for a = 2..a-max");
    omega_cmd->add_option("--a-max", omega_opt.a_max, "Largest multiplier")->required()->check(CLI::Range(2, 4096));
    omega_cmd->add_option("--format", omega_opt.format)->check(CLI::IsMember({"text", "json"}));
    omega_cmd->add_option("--out", omega_opt.out_file, "Write output to a file instead of stdout");

    SweepOptions ratio_opt;
    ratio_opt.jobs = default_jobs();
    auto* ratio = app.add_subcommand("ratio", "r(base) for every base up to max, with mean/variance");
    ratio->add_option("--max-base", ratio_opt.max_base, "Largest base")->required()->check(CLI::Range(3, 2000000));
    ratio->add_option("--jobs", ratio_opt.jobs, "Worker threads (default $RSP_JOBS or 1)")->check(CLI::Range(1, 512));
    ratio->add_option("--format", ratio_opt.format)->check(CLI::IsMember({"text", "json"}));
    ratio->add_option("--out", ratio_opt.out_file, "Write output to a file instead of stdout");

    SweepOptions conj_opt;
    conj_opt.jobs = default_jobs();
    auto* conjecture = app.add_subcommand("conjecture", "Bases with no interesting pair");
    conjecture->add_option("--max-base", conj_opt.max_base, "Largest base")->required()->check(CLI::Range(2, 2000000));
    conjecture->add_option("--jobs", conj_opt.jobs, "Worker threads (default $RSP_JOBS or 1)")->check(CLI::Range(1, 512));
    conjecture->add_option("--format", conj_opt.format)->check(CLI::IsMember({"text", "json"}));
    conjecture->add_option("--out", conj_opt.out_file, "Write output to a file instead of stdout");

    std::vector<const char*> argv;
    argv.push_back("rsp");
    for (const std::string& s : args) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        std::string text;
        std::string out_file;
        if (pairs->parsed()) {
            text = run_pairs(pairs_opt);
            out_file = pairs_opt.out_file;
        } else if (automaton->parsed()) {
            text = run_automaton(auto_opt);
            out_file = auto_opt.out_file;
        } else if (regex->parsed()) {
            text = run_regex(regex_opt);
            out_file = regex_opt.out_file;
        } else if (participation->parsed()) {
            text = run_participation(part_opt);
            out_file = part_opt.out_file;
        } else if (omega_cmd->parsed()) {
            text = run_omega(omega_opt);
            out_file = omega_opt.out_file;
        } else if (ratio->parsed()) {
            text = run_ratio(ratio_opt);
            out_file = ratio_opt.out_file;
        } else if (conjecture->parsed()) {
            text = run_conjecture(conj_opt);
            out_file = conj_opt.out_file;
        }
        return deliver(text, out_file, out, err);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace rsp::cli
