#ifndef RSP_SERIALIZE_HPP
#define RSP_SERIALIZE_HPP

#include <string>

#include "rsp/automaton.hpp"

namespace rsp {

// JSON document with base, a, trimmed flag, states (id/kind/carries/
// accepting) and transitions (from/to/label digit arrays, plus rendered
// labels for bases up to 36).
std::string automaton_to_json(const RspAutomaton& automaton);

// Inverse of automaton_to_json; validates determinism and accepting rules.
RspAutomaton automaton_from_json(const std::string& text);

// Graphviz source: accepting states are double circles filled light blue,
// the initial state is filled yellow, edges carry rendered labels.
std::string automaton_to_dot(const RspAutomaton& automaton);

}  // namespace rsp

#endif
