#ifndef RSP_AUTOMATON_HPP
#define RSP_AUTOMATON_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace rsp {

// Edge label: a digit pair (x,y) or a singleton (z). Singletons carry the
// middle digit of an odd-length b and are encoded with y < 0.
struct Label {
    int x = 0;
    int y = -1;

    static Label pair(int x, int y) { return Label{x, y}; }
    static Label single(int z) { return Label{z, -1}; }
    bool is_single() const { return y < 0; }

    friend bool operator==(const Label&, const Label&) = default;
    friend auto operator<=>(const Label& l, const Label& r) {
        if (auto c = l.x <=> r.x; c != 0) return c;
        return (l.y < 0 ? -1 : l.y) <=> (r.y < 0 ? -1 : r.y);
    }
};

std::string label_to_string(const Label& label, int base);

enum class StateKind { initial, odd, carry };

struct State {
    StateKind kind = StateKind::initial;
    int lambda = -1;  // carry states only
    int rho = -1;

    friend bool operator==(const State&, const State&) = default;
};

struct Transition {
    int from = 0;
    Label label;
    int to = 0;

    friend bool operator==(const Transition&, const Transition&) = default;
};

// One solution (b_r, b_0, lambda, rho) of the boundary-digit equations
//   a + b_0 = a*b_r + lambda,   a*b_0 = b_r + rho*base,
// with 0 <= lambda, rho < a, 1 <= b_r < base and 0 < b_0 < base - a.
struct StartSolution {
    int b_r = 0;
    int b_0 = 0;
    int lambda = 0;
    int rho = 0;

    friend bool operator==(const StartSolution&, const StartSolution&) = default;
};

// One solution (x', y', lambda', rho') of the interior-digit equations
//   a*x' + lambda' = y' + lambda*base,   a*y' + rho = x' + rho'*base,
// for the source carries (lambda, rho), with digits in [0, base).
struct StepSolution {
    int x = 0;
    int y = 0;
    int lambda_next = 0;
    int rho_next = 0;

    friend bool operator==(const StepSolution&, const StepSolution&) = default;
};

// All start solutions for the given multiplier, ordered by (lambda, rho).
// Empty for a = 1: the system degenerates (determinant a^2-1 = 0) and the
// equations force b_0 = b_r - 1 and b_0 = b_r at once.
std::vector<StartSolution> solve_start(int a, int base);

// All step solutions from carry state (lambda, rho), ordered by
// (lambda', rho').
std::vector<StepSolution> solve_step(int a, int base, int lambda, int rho);

struct AutomatonStats {
    int states = 0;
    int transitions = 0;
    int accepting = 0;
    bool trimmed = false;

    friend bool operator==(const AutomatonStats&, const AutomatonStats&) = default;
};

// The DFA whose accepted strings spell out, boundary digits inward, every b
// that forms a reversed sum-product pair with the fixed multiplier a.
//
// States are the initial state, the odd state (entered when the digit
// frontiers meet in a middle digit) and one carry state per pair of
// left/right carries. Only states reachable from the initial state are
// stored; ids follow discovery order, so output is reproducible.
class RspAutomaton {
public:
    // Lazy construction per the carry recursion; accepting states are the
    // odd state and the carry states with equal carries.
    static RspAutomaton build(int a, int base);

    // Reassemble from parts (deserialization); validates determinism and
    // the accepting-state rule.
    static RspAutomaton from_parts(int a, int base, bool trimmed, std::vector<State> states,
                                   std::vector<Transition> transitions, std::vector<bool> accepting);

    int a() const { return a_; }
    int base() const { return base_; }
    bool trimmed() const { return trimmed_; }

    const std::vector<State>& states() const { return states_; }
    const std::vector<Transition>& transitions() const { return transitions_; }
    bool accepting(int id) const { return accepting_[static_cast<size_t>(id)]; }
    int accepting_count() const;

    // Outgoing transitions of a state, sorted by label.
    std::vector<Transition> outgoing(int id) const;

    AutomatonStats stats() const;

    friend RspAutomaton trim(const RspAutomaton& automaton);

private:
    RspAutomaton() = default;

    int a_ = 0;
    int base_ = 0;
    bool trimmed_ = false;
    std::vector<State> states_;  // id 0 is always the initial state
    std::vector<Transition> transitions_;
    std::vector<bool> accepting_;
};

// Remove every state that lies on no path from the initial state to an
// accepting state (the initial state itself is always kept). The accepted
// language is unchanged; the result is marked trimmed.
RspAutomaton trim(const RspAutomaton& automaton);

}  // namespace rsp

#endif
