#include "rsp/serialize.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "rsp/numerals.hpp"

namespace rsp {

namespace {

const char* kind_name(StateKind kind) {
    switch (kind) {
        case StateKind::initial:
            return "initial";
        case StateKind::odd:
            return "odd";
        case StateKind::carry:
            return "carry";
    }
    return "";
}

StateKind kind_from_name(const std::string& name) {
    if (name == "initial") return StateKind::initial;
    if (name == "odd") return StateKind::odd;
    if (name == "carry") return StateKind::carry;
    throw std::invalid_argument("unknown state kind '" + name + "'");
}

std::string state_name(const State& s) {
    switch (s.kind) {
        case StateKind::initial:
            return "s_i";
        case StateKind::odd:
            return "s_o";
        case StateKind::carry:
            return "s_" + std::to_string(s.lambda) + "," + std::to_string(s.rho);
    }
    return "";
}

}  // namespace

std::string automaton_to_json(const RspAutomaton& automaton) {
    nlohmann::json doc;
    doc["base"] = automaton.base();
    doc["a"] = automaton.a();
    doc["trimmed"] = automaton.trimmed();
    doc["states"] = nlohmann::json::array();
    for (size_t i = 0; i < automaton.states().size(); ++i) {
        const State& s = automaton.states()[i];
        nlohmann::json js;
        js["id"] = static_cast<int>(i);
        js["kind"] = kind_name(s.kind);
        if (s.kind == StateKind::carry) {
            js["lambda"] = s.lambda;
            js["rho"] = s.rho;
        }
        js["accepting"] = automaton.accepting(static_cast<int>(i));
        doc["states"].push_back(std::move(js));
    }
    doc["transitions"] = nlohmann::json::array();
    for (const Transition& t : automaton.transitions()) {
        nlohmann::json jt;
        jt["from"] = t.from;
        jt["to"] = t.to;
        jt["label"] = t.label.is_single() ? nlohmann::json::array({t.label.x})
                                          : nlohmann::json::array({t.label.x, t.label.y});
        if (automaton.base() <= 36) jt["label_str"] = label_to_string(t.label, automaton.base());
        doc["transitions"].push_back(std::move(jt));
    }
    return doc.dump(2);
}

RspAutomaton automaton_from_json(const std::string& text) {
    nlohmann::json doc = nlohmann::json::parse(text);
    int base = doc.at("base").get<int>();
    int a = doc.at("a").get<int>();
    bool trimmed = doc.at("trimmed").get<bool>();
    std::vector<State> states;
    std::vector<bool> accepting;
    for (const auto& js : doc.at("states")) {
        if (js.at("id").get<int>() != static_cast<int>(states.size()))
            throw std::invalid_argument("state ids must be consecutive from 0");
        State s;
        s.kind = kind_from_name(js.at("kind").get<std::string>());
        if (s.kind == StateKind::carry) {
            s.lambda = js.at("lambda").get<int>();
            s.rho = js.at("rho").get<int>();
        }
        states.push_back(s);
        accepting.push_back(js.at("accepting").get<bool>());
    }
    std::vector<Transition> transitions;
    for (const auto& jt : doc.at("transitions")) {
        Transition t;
        t.from = jt.at("from").get<int>();
        t.to = jt.at("to").get<int>();
        const auto& label = jt.at("label");
        if (label.size() == 1)
            t.label = Label::single(label.at(0).get<int>());
        else if (label.size() == 2)
            t.label = Label::pair(label.at(0).get<int>(), label.at(1).get<int>());
        else
            throw std::invalid_argument("label must have one or two digits");
        transitions.push_back(t);
    }
    return RspAutomaton::from_parts(a, base, trimmed, std::move(states), std::move(transitions),
                                    std::move(accepting));
}

std::string automaton_to_dot(const RspAutomaton& automaton) {
    std::ostringstream out;
    out << "digraph rsp_automaton {\n";
    out << "  rankdir=LR;\n";
    out << "  __start [shape=none, label=\"\", width=0, height=0];\n";
    for (size_t i = 0; i < automaton.states().size(); ++i) {
        const State& s = automaton.states()[i];
        bool accepting = automaton.accepting(static_cast<int>(i));
        out << "  q" << i << " [label=\"" << state_name(s) << "\", shape="
            << (accepting ? "doublecircle" : "circle");
        if (s.kind == StateKind::initial)
            out << ", style=filled, fillcolor=yellow";
        else if (accepting)
            out << ", style=filled, fillcolor=lightblue";
        out << "];\n";
    }
    out << "  __start -> q0;\n";
    for (const Transition& t : automaton.transitions()) {
        out << "  q" << t.from << " -> q" << t.to << " [label=\""
            << label_to_string(t.label, automaton.base()) << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace rsp
