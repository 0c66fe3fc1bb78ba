#ifndef RSP_LANGUAGE_HPP
#define RSP_LANGUAGE_HPP

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "rsp/automaton.hpp"
#include "rsp/numerals.hpp"

namespace rsp {

// A path's label sequence: pair labels, optionally closed by one singleton.
using LabelString = std::vector<Label>;

// All accepted label strings whose reconstructed b has at most max_digits
// digits, shortest paths first, ties broken label-lexicographically.
std::vector<LabelString> accepted_strings(const RspAutomaton& automaton, int max_digits);

// Rebuild b from an accepted string (x1,y1)...(xn,yn)[(z)]: the digits are
// x1..xn, then z if present, then yn..y1.
Digits b_from_string(const LabelString& labels);

// Rendered b values up to max_digits digits, ordered by (digit count,
// value). Single-digit values come from the uninteresting pairs; pass
// include_single_digit = false to drop them.
std::vector<std::string> b_values(const RspAutomaton& automaton, int max_digits,
                                  bool include_single_digit = true);

// Regular expression over pair/singleton labels.
class RegexExpr;
using RegexPtr = std::shared_ptr<const RegexExpr>;

class RegexExpr {
public:
    enum class Kind { empty, epsilon, literal, concat, alternation, star };

    Kind kind() const { return kind_; }
    const LabelString& labels() const { return labels_; }
    const std::vector<RegexPtr>& children() const { return children_; }
    const RegexPtr& child() const { return children_.front(); }

    // Simplifying constructors: epsilon and empty-set units are absorbed,
    // adjacent literals merge into one label string, unions flatten one
    // level, and a star never wraps epsilon.
    static RegexPtr empty();
    static RegexPtr epsilon();
    static RegexPtr literal(LabelString labels);
    static RegexPtr concat(RegexPtr lhs, RegexPtr rhs);
    static RegexPtr alternate(RegexPtr lhs, RegexPtr rhs);
    static RegexPtr star(RegexPtr inner);

private:
    RegexExpr(Kind kind, LabelString labels, std::vector<RegexPtr> children)
        : kind_(kind), labels_(std::move(labels)), children_(std::move(children)) {}

    Kind kind_;
    LabelString labels_;
    std::vector<RegexPtr> children_;
};

// Regular expression denoting exactly the automaton's accepted strings,
// obtained by state elimination over the trimmed automaton.
RegexPtr to_regex(const RspAutomaton& automaton);

// Render: literals compress runs of pairs as "(248,3D8)", alternation is
// " + ", a star is a trailing "*", epsilon prints as its Greek letter.
std::string render_regex(const RegexPtr& expr, int base);

// All label strings of at most max_len labels denoted by the expression.
std::set<LabelString> regex_language(const RegexPtr& expr, int max_len);

}  // namespace rsp

#endif
