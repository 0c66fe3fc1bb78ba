// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Expected values are frozen constants;
// tolerances and time budgets are asserted here, not merely reported.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rsp/automaton.hpp"
#include "rsp/language.hpp"
#include "rsp/numerals.hpp"
#include "rsp/oracle.hpp"
#include "rsp/participation.hpp"

using namespace rsp;

namespace {

int failures = 0;

struct Criterion {
    int id;
    std::string name;
    double budget_seconds;
    std::function<bool(std::string&)> body;
};

void run_criterion(const Criterion& c) {
    std::string detail;
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = c.body(detail);
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (ok && c.budget_seconds > 0 && secs > c.budget_seconds) {
        ok = false;
        detail = "time budget exceeded";
    }
    std::printf("[%s] criterion %2d: %s (%.2f s of %.0f s)%s%s\n", ok ? "PASS" : "FAIL", c.id,
                c.name.c_str(), secs, c.budget_seconds, detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
}

using PairSet = std::set<std::pair<long long, long long>>;

PairSet dfa_pairs(int base, int max_digits) {
    PairSet out;
    for (int a = 1; a < base; ++a) {
        RspAutomaton A = RspAutomaton::build(a, base);
        for (const LabelString& s : accepted_strings(A, max_digits)) {
            Value b = from_digits(b_from_string(s), base);
            if (b >= static_cast<Value>(a)) out.emplace(a, static_cast<long long>(b));
        }
    }
    return out;
}

PairSet oracle_pairs(int base, Value max_b) {
    PairSet out;
    for (const RspPair& p : search_pairs(base, max_b))
        out.emplace(static_cast<long long>(p.a), static_cast<long long>(p.b));
    return out;
}

bool criterion1(std::string& detail) {
    PairSet expected{{2, 2}, {9, 9}, {3, 24}, {2, 47}, {2, 497}, {2, 4997}, {2, 49997}, {2, 499997}};
    PairSet via_dfa = dfa_pairs(10, 6);
    if (via_dfa != expected) {
        detail = "DFA enumeration disagrees with the frozen base-10 list";
        return false;
    }
    PairSet via_oracle = oracle_pairs(10, 1000000);
    if (via_oracle != expected) {
        detail = "oracle scan to 10^6 disagrees with the frozen base-10 list";
        return false;
    }
    return true;
}

std::vector<std::string> interesting_values(int base, int a, int max_digits) {
    return b_values(RspAutomaton::build(a, base), max_digits, /*include_single_digit=*/false);
}

bool criterion2(std::string& detail) {
    // base 16: the a = 2 family 6 F^k B, through 19 digits
    for (int a = 1; a < 16; ++a) {
        std::vector<std::string> got = interesting_values(16, a, 19);
        if (a == 2) {
            std::vector<std::string> expected;
            for (int k = 0; k <= 17; ++k) expected.push_back("6" + std::string(k, 'F') + "B");
            if (got != expected) {
                detail = "base-16 a=2 family mismatch";
                return false;
            }
            if (got[0] != "6B" || got[1] != "6FB" || got[2] != "6FFB" || got[3] != "6FFFB") {
                detail = "base-16 leading entries mismatch";
                return false;
            }
        } else if (!got.empty()) {
            detail = "unexpected interesting base-16 pairs for a = " + std::to_string(a);
            return false;
        }
    }
    // base 18: the full interesting list through 19 digits
    std::map<int, std::vector<std::string>> expected18{
        {3, {"37"}},
        {4, {"25"}},
        {7, {"2483D8", "2483D9E483D8", "2483D9E483D9E483D8"}},
        {11, {"1961DC5", "1961DBG461DC5", "1961DBG461DBG461DC5"}},
    };
    for (int a = 1; a < 18; ++a) {
        std::vector<std::string> got = interesting_values(18, a, 19);
        auto it = expected18.find(a);
        if (it == expected18.end()) {
            if (!got.empty()) {
                detail = "unexpected interesting base-18 pairs for a = " + std::to_string(a);
                return false;
            }
        } else if (got != it->second) {
            detail = "base-18 list mismatch for a = " + std::to_string(a);
            return false;
        }
    }
    return true;
}

bool criterion3(std::string& detail) {
    if (RspAutomaton::build(7, 18).stats() != AutomatonStats{7, 7, 2, false}) {
        detail = "stats(18,7)";
        return false;
    }
    if (RspAutomaton::build(10, 27).stats() != AutomatonStats{12, 15, 1, false}) {
        detail = "stats(27,10)";
        return false;
    }
    RspAutomaton big = RspAutomaton::build(31, 150);
    if (big.stats() != AutomatonStats{13, 13, 0, false}) {
        detail = "stats(150,31)";
        return false;
    }
    if (trim(big).stats() != AutomatonStats{1, 0, 0, true}) {
        detail = "trim(150,31)";
        return false;
    }
    std::vector<int> nonempty;
    for (int a = 1; a < 27; ++a)
        if (RspAutomaton::build(a, 27).stats().accepting > 0) nonempty.push_back(a);
    if (nonempty != std::vector<int>{2, 6, 10, 26}) {
        detail = "base-27 accepting set is not {2,6,10,26}";
        return false;
    }
    return true;
}

bool criterion4(std::string& detail) {
    const std::vector<Ratio> expected{{1, 3},  {1, 8},   {4, 15}, {3, 24}, {13, 35},
                                      {4, 48}, {22, 63}, {12, 80}, {26, 99}};
    for (int a = 2; a <= 10; ++a) {
        if (omega(a) != expected[static_cast<size_t>(a - 2)]) {
            detail = "omega(" + std::to_string(a) + ") off";
            return false;
        }
    }
    return true;
}

bool criterion5(std::string& detail) {
    std::vector<int> exceptional = conjecture_scan(512);
    std::vector<int> expected{2, 3, 4, 5, 6, 7, 8, 9, 12, 15, 21};
    if (exceptional != expected) {
        std::ostringstream got;
        for (int b : exceptional) got << b << " ";
        detail = "got: " + got.str();
        return false;
    }
    return true;
}

bool criterion6(std::string& detail) {
    std::vector<double> ratios;
    for (int base = 2; base <= 512; ++base) ratios.push_back(r_ratio(base).approx());
    double mean = std::accumulate(ratios.begin(), ratios.end(), 0.0) / ratios.size();
    double variance = 0;
    for (double r : ratios) variance += (r - mean) * (r - mean);
    variance /= ratios.size();
    char buf[128];
    std::snprintf(buf, sizeof(buf), "mean %.4f, variance %.4f", mean, variance);
    detail = buf;
    return std::fabs(mean - 0.1356) <= 0.001 && std::fabs(variance - 0.0097) <= 0.0005;
}

bool criterion7(std::string& detail) {
    std::mt19937 rng(0x5eed);
    std::uniform_int_distribution<int> base_dist(2, 40);
    for (int trial = 0; trial < 200; ++trial) {
        int base = base_dist(rng);
        std::uniform_int_distribution<int> a_dist(1, base - 1);
        int a = a_dist(rng);
        std::set<long long> via_dfa;
        for (const LabelString& s : accepted_strings(RspAutomaton::build(a, base), 5))
            via_dfa.insert(static_cast<long long>(from_digits(b_from_string(s), base)));
        Value limit = 1;
        for (int i = 0; i < 5; ++i) limit *= static_cast<Value>(base);
        std::set<long long> via_oracle;
        for (Value b : search_b(static_cast<Value>(a), base, limit - 1))
            via_oracle.insert(static_cast<long long>(b));
        if (via_dfa != via_oracle) {
            detail = "mismatch at base " + std::to_string(base) + ", a = " + std::to_string(a);
            return false;
        }
    }
    return true;
}

bool criterion8(std::string& detail) {
    for (int base = 2; base <= 40; ++base) {
        for (int a = 1; a < base; ++a) {
            RspAutomaton A = RspAutomaton::build(a, base);
            // determinism and carry bounds
            std::set<std::pair<int, std::pair<int, int>>> seen;
            for (const Transition& t : A.transitions()) {
                if (!seen.insert({t.from, {t.label.x, t.label.y}}).second) {
                    detail = "duplicate label";
                    return false;
                }
            }
            for (const State& s : A.states()) {
                if (s.kind == StateKind::carry && (s.lambda < 0 || s.lambda >= a || s.rho < 0 || s.rho >= a)) {
                    detail = "carry out of range";
                    return false;
                }
            }
            // overlap symmetry
            if (a >= 2) {
                for (int lambda = 0; lambda < a; ++lambda) {
                    for (int rho = 0; rho < a; ++rho) {
                        for (const StepSolution& s : solve_step(a, base, lambda, rho)) {
                            if (s.x == s.y && (s.lambda_next != rho || s.rho_next != lambda)) {
                                detail = "overlap carries do not swap";
                                return false;
                            }
                        }
                    }
                }
            }
            // no-carry bound and coprimality on enumerated pairs
            for (const LabelString& s : accepted_strings(A, 6)) {
                Digits d = b_from_string(s);
                Value b = from_digits(d, base);
                if (b > static_cast<Value>(base) && d.back() >= base - a) {
                    detail = "last digit of b reaches base - a";
                    return false;
                }
                if (std::gcd(a - 1, base - 1) != 1) {
                    detail = "pair with gcd(a-1, base-1) > 1";
                    return false;
                }
            }
        }
        // emptiness of the large-a region
        Value limit = static_cast<Value>(base) * (base + 1) - 1;
        for (const RspPair& p : search_pairs(base, limit, true)) {
            if (p.a >= static_cast<Value>(base)) {
                detail = "pair with a >= base exists";
                return false;
            }
        }
    }
    return true;
}

bool criterion9(std::string& detail) {
    for (int base = 2; base <= 40; ++base) {
        for (int a = 1; a < base; ++a) {
            RspAutomaton A = RspAutomaton::build(a, base);
            if (trim(A).stats().accepting == 0) continue;
            std::set<LabelString> via_regex = regex_language(to_regex(A), 12);
            std::set<LabelString> via_walk;
            for (const LabelString& s : accepted_strings(A, 24))
                if (s.size() <= 12) via_walk.insert(s);
            if (via_regex != via_walk) {
                detail = "regex/DFA mismatch at base " + std::to_string(base) + ", a = " + std::to_string(a);
                return false;
            }
        }
    }
    return true;
}

bool criterion10(std::string& detail) {
    // lift every base-10 pair with at least one pair label
    bool lifted_24_to_37 = false;
    for (int a = 2; a < 10; ++a) {
        RspAutomaton A = RspAutomaton::build(a, 10);
        for (const LabelString& s : accepted_strings(A, 6)) {
            if (s.size() == 1 && s.front().is_single()) continue;
            LiftedPair lifted = lift_pair(a, 10, s);
            Value b = from_digits(lifted.digits, lifted.base);
            if (!is_rsp_pair(static_cast<Value>(a), b, lifted.base)) {
                detail = "lifted pair fails verification";
                return false;
            }
            if (lifted.digits.size() != b_from_string(s).size()) {
                detail = "lift changed the digit count";
                return false;
            }
            if (a == 3 && lifted.base == 18 && b == 3 * 18 + 7) lifted_24_to_37 = true;
        }
    }
    if (!lifted_24_to_37) {
        detail = "(3,24) did not lift to (3,37) at base 18";
        return false;
    }
    for (int a = 2; a <= 20; ++a) {
        for (long long T = 1; T <= 50; ++T) {
            if (a == 2 && T <= 2) continue;
            RspPair p = formal_family_pair(a, T);
            if (!is_rsp_pair(p.a, p.b, p.base)) {
                detail = "formal family fails at a=" + std::to_string(a) + ", T=" + std::to_string(T);
                return false;
            }
        }
    }
    return true;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria{
        {1, "base-10 completeness, DFA and oracle", 5, criterion1},
        {2, "base-16 and base-18 rendered lists", 5, criterion2},
        {3, "automaton stats blocks and base-27 accepting set", 5, criterion3},
        {4, "participation density table a = 2..10", 60, criterion4},
        {5, "conjecture scan to 512", 600, criterion5},
        {6, "r(beta) mean and variance over [2, 512]", 600, criterion6},
        {7, "oracle equivalence on 200 random (base, a)", 60, criterion7},
        {8, "structural invariants", 60, criterion8},
        {9, "regex language equivalence", 60, criterion9},
        {10, "lift and formal family verification", 60, criterion10},
    };
    for (const Criterion& c : criteria) run_criterion(c);
    if (failures == 0) {
        std::printf("all %zu criteria passed\n", criteria.size());
        return 0;
    }
    std::printf("%d criteria failed\n", failures);
    return 1;
}
