#include "rsp/automaton.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "rsp/numerals.hpp"

namespace rsp {

std::string label_to_string(const Label& label, int base) {
    if (label.is_single()) return "(" + render({label.x}, base) + ")";
    return "(" + render({label.x}, base) + "," + render({label.y}, base) + ")";
}

namespace {

// a^2 * base must stay inside 64 bits for the carry solvers
constexpr int kMaxBase = 2000000;

void check_a_base(int a, int base) {
    if (base < 2) throw std::invalid_argument("base must be >= 2");
    if (base > kMaxBase) throw std::invalid_argument("base must be at most 2000000");
    if (a < 1 || a >= base) throw std::invalid_argument("a must satisfy 1 <= a < base");
}

}  // namespace

std::vector<StartSolution> solve_start(int a, int base) {
    check_a_base(a, base);
    std::vector<StartSolution> out;
    if (a == 1) return out;
    const long long A = a;
    const long long B = base;
    const long long m = A * A - 1;
    const long long step = B % m;
    for (int lambda = 0; lambda < a; ++lambda) {
        // residue of a^2 - a*lambda + rho*base mod a^2-1, tracked along rho
        long long res = (A * A - A * lambda) % m;
        for (int rho = 0; rho < a; ++rho) {
            if (res == 0) {
                long long b_r = (A * A - A * lambda + rho * B) / m;
                long long num_0 = A - lambda + A * rho * B;
                long long b_0 = num_0 / m;
                if (num_0 % m == 0 && b_r >= 1 && b_r < B && b_0 >= 1 && b_0 < B - A)
                    out.push_back(StartSolution{static_cast<int>(b_r), static_cast<int>(b_0), lambda, rho});
            }
            res += step;
            if (res >= m) res -= m;
        }
    }
    return out;
}

std::vector<StepSolution> solve_step(int a, int base, int lambda, int rho) {
    check_a_base(a, base);
    if (lambda < 0 || lambda >= a || rho < 0 || rho >= a)
        throw std::invalid_argument("carries must lie in [0, a)");
    std::vector<StepSolution> out;
    if (a == 1) return out;
    const long long A = a;
    const long long B = base;
    const long long m = A * A - 1;
    const long long step = B % m;
    for (int ln = 0; ln < a; ++ln) {
        // residue of (a*lambda + rho')*base - a*lambda' - rho, tracked along rho'
        long long res = ((A * lambda * B - A * ln - rho) % m + m) % m;
        for (int rn = 0; rn < a; ++rn) {
            if (res == 0) {
                long long x = ((A * lambda + rn) * B - A * ln - rho) / m;
                long long num_y = (lambda + A * rn) * B - ln - A * rho;
                long long y = num_y / m;
                if (num_y % m == 0 && x >= 0 && x < B && y >= 0 && y < B)
                    out.push_back(StepSolution{static_cast<int>(x), static_cast<int>(y), ln, rn});
            }
            res += step;
            if (res >= m) res -= m;
        }
    }
    return out;
}

RspAutomaton RspAutomaton::build(int a, int base) {
    check_a_base(a, base);
    RspAutomaton A;
    A.a_ = a;
    A.base_ = base;
    A.states_.push_back(State{StateKind::initial, -1, -1});
    A.accepting_.push_back(false);

    std::map<std::pair<int, int>, int> carry_ids;
    int odd_id = -1;

    auto carry_state = [&](int lambda, int rho) {
        auto it = carry_ids.find({lambda, rho});
        if (it != carry_ids.end()) return it->second;
        int id = static_cast<int>(A.states_.size());
        A.states_.push_back(State{StateKind::carry, lambda, rho});
        A.accepting_.push_back(lambda == rho);
        carry_ids.emplace(std::pair{lambda, rho}, id);
        return id;
    };
    auto odd_state = [&] {
        if (odd_id < 0) {
            odd_id = static_cast<int>(A.states_.size());
            A.states_.push_back(State{StateKind::odd, -1, -1});
            A.accepting_.push_back(true);
        }
        return odd_id;
    };

    std::vector<std::set<Label>> seen_labels(1);
    auto add_transition = [&](int from, Label label, int to) {
        while (seen_labels.size() < A.states_.size()) seen_labels.emplace_back();
        if (!seen_labels[static_cast<size_t>(from)].insert(label).second)
            throw std::logic_error("determinism violated: duplicate label " + label_to_string(label, base) +
                                   " out of state " + std::to_string(from));
        A.transitions_.push_back(Transition{from, label, to});
    };

    std::vector<int> frontier;
    for (const StartSolution& s : solve_start(a, base)) {
        int to = carry_state(s.lambda, s.rho);
        add_transition(0, Label::pair(s.b_r, s.b_0), to);
        frontier.push_back(to);
    }
    if (base >= 5 && a == 2) add_transition(0, Label::single(2), odd_state());
    if (base >= 3 && a == base - 1) add_transition(0, Label::single(base - 1), odd_state());

    // BFS over carry states in discovery order
    for (size_t i = 0; i < frontier.size(); ++i) {
        int id = frontier[i];
        const State& st = A.states_[static_cast<size_t>(id)];
        for (const StepSolution& s : solve_step(a, base, st.lambda, st.rho)) {
            auto known = carry_ids.find({s.lambda_next, s.rho_next});
            bool fresh = known == carry_ids.end();
            int to = carry_state(s.lambda_next, s.rho_next);
            add_transition(id, Label::pair(s.x, s.y), to);
            if (fresh) frontier.push_back(to);
            if (s.x == s.y) add_transition(id, Label::single(s.x), odd_state());
        }
    }

    return A;
}

RspAutomaton RspAutomaton::from_parts(int a, int base, bool trimmed, std::vector<State> states,
                                      std::vector<Transition> transitions, std::vector<bool> accepting) {
    check_a_base(a, base);
    if (states.empty() || states.front().kind != StateKind::initial)
        throw std::invalid_argument("state 0 must be the initial state");
    if (states.size() != accepting.size()) throw std::invalid_argument("accepting flags mismatch");
    std::set<std::pair<int, Label>> seen;
    for (const Transition& t : transitions) {
        if (t.from < 0 || t.from >= static_cast<int>(states.size()) || t.to < 0 ||
            t.to >= static_cast<int>(states.size()))
            throw std::invalid_argument("transition endpoint out of range");
        if (!seen.insert({t.from, t.label}).second)
            throw std::invalid_argument("determinism violated in transition list");
    }
    for (size_t i = 0; i < states.size(); ++i) {
        const State& s = states[i];
        bool acceptable = s.kind == StateKind::odd || (s.kind == StateKind::carry && s.lambda == s.rho);
        if (accepting[i] && !acceptable) throw std::invalid_argument("only the odd state and equal-carry states accept");
    }
    RspAutomaton A;
    A.a_ = a;
    A.base_ = base;
    A.trimmed_ = trimmed;
    A.states_ = std::move(states);
    A.transitions_ = std::move(transitions);
    A.accepting_ = std::move(accepting);
    return A;
}

int RspAutomaton::accepting_count() const {
    int n = 0;
    for (bool b : accepting_) n += b ? 1 : 0;
    return n;
}

std::vector<Transition> RspAutomaton::outgoing(int id) const {
    std::vector<Transition> out;
    for (const Transition& t : transitions_)
        if (t.from == id) out.push_back(t);
    std::sort(out.begin(), out.end(),
              [](const Transition& l, const Transition& r) { return l.label < r.label; });
    return out;
}

AutomatonStats RspAutomaton::stats() const {
    return AutomatonStats{static_cast<int>(states_.size()), static_cast<int>(transitions_.size()),
                          accepting_count(), trimmed_};
}

RspAutomaton trim(const RspAutomaton& automaton) {
    const int n = static_cast<int>(automaton.states_.size());
    // states from which an accepting state is reachable
    std::vector<std::vector<int>> rev(static_cast<size_t>(n));
    for (const Transition& t : automaton.transitions_) rev[static_cast<size_t>(t.to)].push_back(t.from);
    std::vector<bool> productive(static_cast<size_t>(n), false);
    std::vector<int> stack;
    for (int i = 0; i < n; ++i) {
        if (automaton.accepting_[static_cast<size_t>(i)]) {
            productive[static_cast<size_t>(i)] = true;
            stack.push_back(i);
        }
    }
    while (!stack.empty()) {
        int id = stack.back();
        stack.pop_back();
        for (int p : rev[static_cast<size_t>(id)]) {
            if (!productive[static_cast<size_t>(p)]) {
                productive[static_cast<size_t>(p)] = true;
                stack.push_back(p);
            }
        }
    }
    productive[0] = true;  // initial state stays

    std::vector<int> remap(static_cast<size_t>(n), -1);
    RspAutomaton out;
    out.a_ = automaton.a_;
    out.base_ = automaton.base_;
    out.trimmed_ = true;
    for (int i = 0; i < n; ++i) {
        if (!productive[static_cast<size_t>(i)]) continue;
        remap[static_cast<size_t>(i)] = static_cast<int>(out.states_.size());
        out.states_.push_back(automaton.states_[static_cast<size_t>(i)]);
        out.accepting_.push_back(automaton.accepting_[static_cast<size_t>(i)]);
    }
    for (const Transition& t : automaton.transitions_) {
        int from = remap[static_cast<size_t>(t.from)];
        int to = remap[static_cast<size_t>(t.to)];
        if (from >= 0 && to >= 0) out.transitions_.push_back(Transition{from, t.label, to});
    }
    return out;
}

}  // namespace rsp
