#include "rsp/participation.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

namespace rsp {

Ratio Ratio::reduced() const {
    long long g = std::gcd(num, den);
    if (g == 0) return *this;
    return Ratio{num / g, den / g};
}

long long euler_phi(long long n) {
    if (n < 1) throw std::invalid_argument("phi is defined for positive integers");
    long long result = n;
    long long x = n;
    for (long long p = 2; p * p <= x; ++p) {
        if (x % p != 0) continue;
        result -= result / p;
        while (x % p == 0) x /= p;
    }
    if (x > 1) result -= result / x;
    return result;
}

bool participates(int a, int base) {
    if (base < 3 || a < 2 || a >= base) throw std::invalid_argument("need 2 <= a < base");
    std::vector<StartSolution> starts = solve_start(a, base);
    if (starts.empty()) return false;
    std::vector<uint8_t> seen(static_cast<size_t>(a) * static_cast<size_t>(a), 0);
    std::vector<std::pair<int, int>> stack;
    for (const StartSolution& s : starts) {
        if (s.lambda == s.rho) return true;
        uint8_t& flag = seen[static_cast<size_t>(s.lambda) * a + s.rho];
        if (!flag) {
            flag = 1;
            stack.emplace_back(s.lambda, s.rho);
        }
    }
    while (!stack.empty()) {
        auto [lambda, rho] = stack.back();
        stack.pop_back();
        for (const StepSolution& s : solve_step(a, base, lambda, rho)) {
            if (s.x == s.y) return true;  // odd-state acceptance
            if (s.lambda_next == s.rho_next) return true;
            uint8_t& flag = seen[static_cast<size_t>(s.lambda_next) * a + s.rho_next];
            if (!flag) {
                flag = 1;
                stack.emplace_back(s.lambda_next, s.rho_next);
            }
        }
    }
    return false;
}

RspPair formal_family_pair(int a, long long T) {
    if (a < 2) throw std::invalid_argument("a must be >= 2");
    if (T < 1) throw std::invalid_argument("T must be >= 1");
    if (a == 2 && (T == 1 || T == 2))
        throw std::invalid_argument("a = 2 with T = 1 or 2 is excluded from the family");
    long long base = (static_cast<long long>(a) * a - 1) * T + a - 1;
    if (base > std::numeric_limits<int>::max()) throw std::overflow_error("base does not fit in int");
    Value b = static_cast<Value>(T + 1) * static_cast<Value>(base) +
              static_cast<Value>(static_cast<long long>(a) * T + 1);
    return RspPair{static_cast<Value>(a), b, static_cast<int>(base)};
}

LiftedPair lift_pair(int a, int base, const LabelString& labels) {
    if (labels.empty()) throw std::invalid_argument("empty accepted string");
    if (labels.size() == 1 && labels.front().is_single())
        throw std::invalid_argument("singleton-only strings (uninteresting pairs) do not lift");
    RspAutomaton automaton = RspAutomaton::build(a, base);

    int current = 0;
    int lambda = -1;  // left carry of the carry state we stand on
    LabelString lifted;
    for (size_t i = 0; i < labels.size(); ++i) {
        const Label& l = labels[i];
        const Transition* found = nullptr;
        for (const Transition& t : automaton.transitions()) {
            if (t.from == current && t.label == l) {
                found = &t;
                break;
            }
        }
        if (!found) throw std::invalid_argument("string is not accepted by the automaton");
        const State& dst = automaton.states()[static_cast<size_t>(found->to)];
        if (l.is_single()) {
            if (current == 0)
                throw std::invalid_argument("singleton-only strings (uninteresting pairs) do not lift");
            // overlap step: the implied right carry equals the left carry
            lifted.push_back(Label::single(l.x + lambda * a + lambda));
        } else if (current == 0) {
            lifted.push_back(Label::pair(l.x + dst.rho, l.y + a * dst.rho));
        } else {
            lifted.push_back(Label::pair(l.x + lambda * a + dst.rho, l.y + dst.rho * a + lambda));
        }
        current = found->to;
        if (dst.kind == StateKind::carry) lambda = dst.lambda;
    }
    if (!automaton.accepting(current))
        throw std::invalid_argument("string does not end at an accepting state");

    LiftedPair out;
    out.base = base + a * a - 1;
    out.labels = std::move(lifted);
    out.digits = b_from_string(out.labels);
    return out;
}

namespace {

// Numerators of the solved digits have the shape C*base - D. Within a
// residue class the digit is integral iff C*v = D (mod a^2-1); it stays
// inside [0, base) for every base > a^3 unless C sits on a boundary.
bool generic_digit_valid(long long C, long long D, long long m, long long v) {
    if (((C * v - D) % m + m) % m != 0) return false;
    if (C == 0 && D > 0) return false;   // digit would be negative
    if (C == m && D <= 0) return false;  // digit would reach base
    return true;
}

}  // namespace

GenericAutomaton GenericAutomaton::build(int a, int v) {
    if (a < 2) throw std::invalid_argument("a must be >= 2 (a = 1 has zero modulus)");
    if (a > 50000) throw std::invalid_argument("a must be at most 50000");  // (a^2-1)^2 in 64 bits
    const long long m = static_cast<long long>(a) * a - 1;
    if (v < 0 || v >= m) throw std::invalid_argument("residue out of range");
    GenericAutomaton G;
    G.a_ = a;
    G.v_ = v;
    G.modulus_ = static_cast<int>(m);

    const long long A = a;
    std::set<std::pair<int, int>> seen;
    std::vector<std::pair<int, int>> stack;
    for (int lambda = 0; lambda < a; ++lambda) {
        for (int rho = 0; rho < a; ++rho) {
            // b_r = (rho*base + a^2 - a*lambda) / m needs b_r >= 1, which for
            // rho = 0 would force a constant digit of at least 1; that never
            // satisfies the congruence, so rho >= 1 on every start edge.
            if (!generic_digit_valid(rho, A * lambda - A * A, m, v)) continue;
            if (rho == 0) continue;
            if (!generic_digit_valid(A * rho, lambda - A, m, v)) continue;
            G.start_edges_.emplace_back(lambda, rho);
            if (seen.insert({lambda, rho}).second) stack.emplace_back(lambda, rho);
        }
    }

    auto step_targets = [&](int lambda, int rho) {
        std::vector<std::pair<int, int>> out;
        for (int ln = 0; ln < a; ++ln) {
            for (int rn = 0; rn < a; ++rn) {
                if (!generic_digit_valid(A * lambda + rn, A * ln + rho, m, v)) continue;
                if (!generic_digit_valid(lambda + A * rn, ln + A * rho, m, v)) continue;
                out.emplace_back(ln, rn);
            }
        }
        return out;
    };

    while (!stack.empty()) {
        auto [lambda, rho] = stack.back();
        stack.pop_back();
        auto targets = step_targets(lambda, rho);
        G.step_edges_[{lambda, rho}] = targets;
        for (auto& t : targets) {
            if (seen.insert(t).second) stack.push_back(t);
        }
    }
    G.states_ = seen;

    for (const auto& state : seen) {
        if (state.first == state.second) G.accepting_states_.insert(state);
        // overlap edge: x' = y' symbolically forces the target (rho, lambda)
        const auto it = G.step_edges_.find(state);
        if (it != G.step_edges_.end()) {
            std::pair<int, int> swapped{state.second, state.first};
            for (const auto& t : it->second) {
                if (t == swapped) {
                    G.overlap_states_.insert(state);
                    G.accepting_states_.insert(state);
                    break;
                }
            }
        }
    }
    return G;
}

ParticipationProfile participation_residues(int a) {
    if (a < 2) throw std::invalid_argument("a must be >= 2");
    ParticipationProfile P;
    P.a = a;
    P.modulus = a * a - 1;
    P.threshold = static_cast<long long>(a) * a * a + 1;
    for (int v = 0; v < P.modulus; ++v) {
        if (!GenericAutomaton::build(a, v).has_accepting_path()) continue;
        P.residues.push_back(v);
        long long beta = v;
        while (beta <= a) beta += P.modulus;
        long long found = -1;
        for (; beta < P.threshold; beta += P.modulus) {
            if (participates(a, static_cast<int>(beta))) {
                found = beta;
                break;
            }
        }
        // above the threshold the generic automaton is authoritative, so the
        // first class member there participates
        P.min_base[v] = found >= 0 ? found : beta;
    }
    return P;
}

Ratio omega(int a) {
    if (a < 2) throw std::invalid_argument("a must be >= 2");
    const int m = a * a - 1;
    long long count = 0;
    for (int v = 0; v < m; ++v)
        if (GenericAutomaton::build(a, v).has_accepting_path()) ++count;
    return Ratio{count, m};
}

long long multiplier_count(int base) {
    if (base < 2) throw std::invalid_argument("base must be >= 2");
    long long count = 0;
    for (int a = 2; a < base; ++a) {
        // the uninteresting pairs (2,2) and (base-1, base-1) make their
        // multipliers count here even when nothing interesting exists
        if ((a == 2 && base >= 5) || a == base - 1) {
            ++count;
            continue;
        }
        if (std::gcd(a - 1, base - 1) != 1) continue;
        if (participates(a, base)) ++count;
    }
    return count;
}

bool any_participant(int base) {
    if (base < 2) throw std::invalid_argument("base must be >= 2");
    for (int a = 2; a < base; ++a) {
        if (std::gcd(a - 1, base - 1) != 1) continue;
        if (participates(a, base)) return true;
    }
    return false;
}

Ratio r_ratio(int base) {
    return Ratio{multiplier_count(base), euler_phi(base - 1)};
}

std::vector<int> conjecture_scan(int max_base) {
    if (max_base < 2) throw std::invalid_argument("max_base must be >= 2");
    std::vector<int> out;
    for (int base = 2; base <= max_base; ++base)
        if (!any_participant(base)) out.push_back(base);
    return out;
}

}  // namespace rsp
