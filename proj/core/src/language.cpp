#include "rsp/language.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace rsp {

std::vector<LabelString> accepted_strings(const RspAutomaton& automaton, int max_digits) {
    if (max_digits < 1) throw std::invalid_argument("max_digits must be >= 1");
    std::vector<std::vector<Transition>> adjacency(automaton.states().size());
    for (size_t i = 0; i < adjacency.size(); ++i) adjacency[i] = automaton.outgoing(static_cast<int>(i));

    struct Item {
        int state;
        int digits;
        LabelString labels;
    };
    std::vector<LabelString> out;
    std::deque<Item> queue;
    queue.push_back(Item{0, 0, {}});
    while (!queue.empty()) {
        Item cur = std::move(queue.front());
        queue.pop_front();
        if (!cur.labels.empty() && automaton.accepting(cur.state)) out.push_back(cur.labels);
        for (const Transition& t : adjacency[static_cast<size_t>(cur.state)]) {
            int digits = cur.digits + (t.label.is_single() ? 1 : 2);
            if (digits > max_digits) continue;
            LabelString next = cur.labels;
            next.push_back(t.label);
            queue.push_back(Item{t.to, digits, std::move(next)});
        }
    }
    return out;
}

Digits b_from_string(const LabelString& labels) {
    if (labels.empty()) throw std::invalid_argument("empty accepted string");
    Digits out;
    std::vector<int> tail;
    for (size_t i = 0; i < labels.size(); ++i) {
        const Label& l = labels[i];
        if (l.is_single()) {
            if (i + 1 != labels.size())
                throw std::invalid_argument("singleton label allowed only in final position");
            out.push_back(l.x);
        } else {
            out.push_back(l.x);
            tail.push_back(l.y);
        }
    }
    out.insert(out.end(), tail.rbegin(), tail.rend());
    return out;
}

std::vector<std::string> b_values(const RspAutomaton& automaton, int max_digits, bool include_single_digit) {
    std::vector<Digits> values;
    for (const LabelString& s : accepted_strings(automaton, max_digits)) {
        Digits d = b_from_string(s);
        if (!include_single_digit && d.size() == 1) continue;
        values.push_back(std::move(d));
    }
    std::sort(values.begin(), values.end(), [](const Digits& l, const Digits& r) {
        return l.size() != r.size() ? l.size() < r.size() : l < r;
    });
    values.erase(std::unique(values.begin(), values.end()), values.end());
    std::vector<std::string> out;
    out.reserve(values.size());
    for (const Digits& d : values) out.push_back(render(d, automaton.base()));
    return out;
}

RegexPtr RegexExpr::empty() {
    static RegexPtr node(new RegexExpr(Kind::empty, {}, {}));
    return node;
}

RegexPtr RegexExpr::epsilon() {
    static RegexPtr node(new RegexExpr(Kind::epsilon, {}, {}));
    return node;
}

RegexPtr RegexExpr::literal(LabelString labels) {
    if (labels.empty()) return epsilon();
    return RegexPtr(new RegexExpr(Kind::literal, std::move(labels), {}));
}

RegexPtr RegexExpr::concat(RegexPtr lhs, RegexPtr rhs) {
    if (lhs->kind() == Kind::empty || rhs->kind() == Kind::empty) return empty();
    if (lhs->kind() == Kind::epsilon) return rhs;
    if (rhs->kind() == Kind::epsilon) return lhs;
    std::vector<RegexPtr> parts;
    auto append = [&parts](const RegexPtr& e) {
        if (e->kind() == Kind::concat)
            parts.insert(parts.end(), e->children().begin(), e->children().end());
        else
            parts.push_back(e);
    };
    append(lhs);
    append(rhs);
    std::vector<RegexPtr> merged;
    for (RegexPtr& p : parts) {
        if (!merged.empty() && merged.back()->kind() == Kind::literal && p->kind() == Kind::literal) {
            LabelString joined = merged.back()->labels();
            joined.insert(joined.end(), p->labels().begin(), p->labels().end());
            merged.back() = literal(std::move(joined));
        } else {
            merged.push_back(std::move(p));
        }
    }
    if (merged.size() == 1) return merged.front();
    return RegexPtr(new RegexExpr(Kind::concat, {}, std::move(merged)));
}

RegexPtr RegexExpr::alternate(RegexPtr lhs, RegexPtr rhs) {
    if (lhs->kind() == Kind::empty) return rhs;
    if (rhs->kind() == Kind::empty) return lhs;
    std::vector<RegexPtr> parts;
    auto append = [&parts](const RegexPtr& e) {
        if (e->kind() == Kind::alternation)
            parts.insert(parts.end(), e->children().begin(), e->children().end());
        else
            parts.push_back(e);
    };
    append(lhs);
    append(rhs);
    return RegexPtr(new RegexExpr(Kind::alternation, {}, std::move(parts)));
}

RegexPtr RegexExpr::star(RegexPtr inner) {
    if (inner->kind() == Kind::empty || inner->kind() == Kind::epsilon) return epsilon();
    if (inner->kind() == Kind::star) return inner;
    return RegexPtr(new RegexExpr(Kind::star, {}, {std::move(inner)}));
}

RegexPtr to_regex(const RspAutomaton& automaton) {
    RspAutomaton trimmed = trim(automaton);
    const int n = static_cast<int>(trimmed.states().size());
    if (trimmed.accepting_count() == 0) return RegexExpr::empty();

    const int start = n;
    const int finish = n + 1;
    std::map<std::pair<int, int>, RegexPtr> edges;
    auto join = [&edges](int p, int q, const RegexPtr& e) {
        auto [it, fresh] = edges.try_emplace({p, q}, e);
        if (!fresh) it->second = RegexExpr::alternate(it->second, e);
    };
    for (const Transition& t : trimmed.transitions()) join(t.from, t.to, RegexExpr::literal({t.label}));
    join(start, 0, RegexExpr::epsilon());
    for (int i = 0; i < n; ++i)
        if (trimmed.accepting(i)) join(i, finish, RegexExpr::epsilon());

    for (int q = 0; q < n; ++q) {
        RegexPtr loop = RegexExpr::epsilon();
        if (auto it = edges.find({q, q}); it != edges.end()) loop = RegexExpr::star(it->second);
        std::vector<std::pair<int, RegexPtr>> in;
        std::vector<std::pair<int, RegexPtr>> out;
        for (const auto& [key, e] : edges) {
            if (key.second == q && key.first != q) in.emplace_back(key.first, e);
            if (key.first == q && key.second != q) out.emplace_back(key.second, e);
        }
        for (const auto& [p, pe] : in)
            for (const auto& [r, re] : out)
                join(p, r, RegexExpr::concat(RegexExpr::concat(pe, loop), re));
        for (auto it = edges.begin(); it != edges.end();) {
            if (it->first.first == q || it->first.second == q)
                it = edges.erase(it);
            else
                ++it;
        }
    }
    auto it = edges.find({start, finish});
    return it == edges.end() ? RegexExpr::empty() : it->second;
}

namespace {

// literal as "(xs,ys)" pair block plus optional "(z)" singleton block
std::string render_literal(const LabelString& labels, int base) {
    Digits xs;
    Digits ys;
    std::string single;
    for (size_t i = 0; i < labels.size(); ++i) {
        const Label& l = labels[i];
        if (l.is_single()) {
            single = "(" + render({l.x}, base) + ")";
        } else {
            xs.push_back(l.x);
            ys.insert(ys.begin(), l.y);
        }
    }
    std::string out;
    if (!xs.empty()) out = "(" + render(xs, base) + "," + render(ys, base) + ")";
    return out + single;
}

bool renders_atomically(const RegexPtr& e) {
    if (e->kind() == RegexExpr::Kind::epsilon || e->kind() == RegexExpr::Kind::empty) return true;
    if (e->kind() != RegexExpr::Kind::literal) return false;
    const LabelString& ls = e->labels();
    // a single parenthesized block: all pairs, or just one singleton
    if (ls.size() == 1) return true;
    return std::none_of(ls.begin(), ls.end(), [](const Label& l) { return l.is_single(); });
}

}  // namespace

std::string render_regex(const RegexPtr& expr, int base) {
    switch (expr->kind()) {
        case RegexExpr::Kind::empty:
            return "∅";
        case RegexExpr::Kind::epsilon:
            return "ε";
        case RegexExpr::Kind::literal:
            return render_literal(expr->labels(), base);
        case RegexExpr::Kind::concat: {
            std::string out;
            for (const RegexPtr& c : expr->children()) {
                if (c->kind() == RegexExpr::Kind::alternation)
                    out += "(" + render_regex(c, base) + ")";
                else
                    out += render_regex(c, base);
            }
            return out;
        }
        case RegexExpr::Kind::alternation: {
            std::string out;
            for (size_t i = 0; i < expr->children().size(); ++i) {
                if (i > 0) out += " + ";
                out += render_regex(expr->children()[i], base);
            }
            return out;
        }
        case RegexExpr::Kind::star: {
            const RegexPtr& inner = expr->child();
            if (renders_atomically(inner)) return render_regex(inner, base) + "*";
            return "(" + render_regex(inner, base) + ")*";
        }
    }
    return {};
}

std::set<LabelString> regex_language(const RegexPtr& expr, int max_len) {
    if (max_len < 0) throw std::invalid_argument("max_len must be >= 0");
    switch (expr->kind()) {
        case RegexExpr::Kind::empty:
            return {};
        case RegexExpr::Kind::epsilon:
            return {LabelString{}};
        case RegexExpr::Kind::literal:
            if (static_cast<int>(expr->labels().size()) <= max_len) return {expr->labels()};
            return {};
        case RegexExpr::Kind::concat: {
            std::set<LabelString> acc{LabelString{}};
            for (const RegexPtr& c : expr->children()) {
                std::set<LabelString> next;
                std::set<LabelString> part = regex_language(c, max_len);
                for (const LabelString& u : acc) {
                    for (const LabelString& v : part) {
                        if (static_cast<int>(u.size() + v.size()) > max_len) continue;
                        LabelString joined = u;
                        joined.insert(joined.end(), v.begin(), v.end());
                        next.insert(std::move(joined));
                    }
                }
                acc = std::move(next);
                if (acc.empty()) break;
            }
            return acc;
        }
        case RegexExpr::Kind::alternation: {
            std::set<LabelString> acc;
            for (const RegexPtr& c : expr->children()) {
                std::set<LabelString> part = regex_language(c, max_len);
                acc.insert(part.begin(), part.end());
            }
            return acc;
        }
        case RegexExpr::Kind::star: {
            std::set<LabelString> base = regex_language(expr->child(), max_len);
            std::set<LabelString> acc{LabelString{}};
            std::deque<LabelString> work(acc.begin(), acc.end());
            while (!work.empty()) {
                LabelString u = std::move(work.front());
                work.pop_front();
                for (const LabelString& v : base) {
                    if (static_cast<int>(u.size() + v.size()) > max_len) continue;
                    LabelString joined = u;
                    joined.insert(joined.end(), v.begin(), v.end());
                    if (acc.insert(joined).second) work.push_back(std::move(joined));
                }
            }
            return acc;
        }
    }
    return {};
}

}  // namespace rsp
