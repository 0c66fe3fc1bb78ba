#ifndef RSP_PARTICIPATION_HPP
#define RSP_PARTICIPATION_HPP

#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "rsp/automaton.hpp"
#include "rsp/language.hpp"
#include "rsp/numerals.hpp"
#include "rsp/oracle.hpp"

namespace rsp {

// ell / (a^2 - 1); kept unreduced so the denominator stays a^2 - 1.
struct Ratio {
    long long num = 0;
    long long den = 1;

    Ratio reduced() const;
    double approx() const { return static_cast<double>(num) / static_cast<double>(den); }
    friend bool operator==(const Ratio&, const Ratio&) = default;
};

long long euler_phi(long long n);

// True iff an interesting pair (a, b) exists for the base: the automaton
// accepts some string with at least one pair label. The single-digit
// acceptances b = 2 and b = base-1 do not count.
bool participates(int a, int base);

// The family base = (a^2-1)T + a - 1, b = (T+1)base + (aT+1), which is a
// reversed sum-product pair for every T >= 1 except a = 2 with T in {1, 2}.
RspPair formal_family_pair(int a, long long T);

struct LiftedPair {
    int base = 0;           // original base + a^2 - 1
    LabelString labels;     // transformed accepted string
    Digits digits;          // digits of the lifted b
};

// Transport an accepted string of the automaton for (a, base) to the base
// base + a^2 - 1: the start label maps as (b_r, b_0) -> (b_r + rho,
// b_0 + a*rho) and each interior label as (x', y') -> (x' + lambda*a + rho',
// y' + rho'*a + lambda), carries unchanged. Requires at least one pair label.
LiftedPair lift_pair(int a, int base, const LabelString& labels);

// Carry-state automaton for a whole residue class base = v (mod a^2-1).
// Edges are congruence conditions valid for every base > a^3 in the class.
class GenericAutomaton {
public:
    static GenericAutomaton build(int a, int v);

    int a() const { return a_; }
    int residue() const { return v_; }
    int modulus() const { return modulus_; }

    const std::vector<std::pair<int, int>>& start_edges() const { return start_edges_; }
    const std::map<std::pair<int, int>, std::vector<std::pair<int, int>>>& step_edges() const {
        return step_edges_;
    }
    // carry states reachable through start and step edges
    const std::set<std::pair<int, int>>& states() const { return states_; }
    // states with a step edge whose two digits coincide for every base in
    // the class (the edge to the swapped carry pair)
    const std::set<std::pair<int, int>>& overlap_states() const { return overlap_states_; }
    // reachable states that end an accepted string: equal carries or an
    // overlap edge
    const std::set<std::pair<int, int>>& accepting_states() const { return accepting_states_; }

    bool has_accepting_path() const { return !accepting_states_.empty(); }

private:
    int a_ = 0;
    int v_ = 0;
    int modulus_ = 0;
    std::vector<std::pair<int, int>> start_edges_;
    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> step_edges_;
    std::set<std::pair<int, int>> states_;
    std::set<std::pair<int, int>> overlap_states_;
    std::set<std::pair<int, int>> accepting_states_;
};

// Which residues v mod a^2-1 admit participating bases, with the smallest
// participating base per residue. Above the threshold a^3 + 1 the generic
// automaton's verdict is authoritative; below it bases are checked directly.
struct ParticipationProfile {
    int a = 0;
    int modulus = 0;                // a^2 - 1
    std::vector<int> residues;      // increasing, all in (0, modulus)
    std::map<int, long long> min_base;
    long long threshold = 0;        // a^3 + 1
};

ParticipationProfile participation_residues(int a);

// Density of bases for which a participates: |residues| / (a^2 - 1).
Ratio omega(int a);

// Number of multipliers a in [1, base) forming a reversed sum-product pair
// with some b, interesting or not. The uninteresting families make a = 2
// (base >= 5) and a = base-1 (base >= 3) count unconditionally.
long long multiplier_count(int base);

// True iff some multiplier participates in an interesting pair; early-exit
// form used by the conjecture scan.
bool any_participant(int base);

// multiplier_count(base) over phi(base-1).
Ratio r_ratio(int base);

// Bases up to max_base admitting no interesting pair at all.
std::vector<int> conjecture_scan(int max_base);

}  // namespace rsp

#endif
