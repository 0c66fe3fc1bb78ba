#include "rsp/numerals.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <stdexcept>

namespace rsp {

namespace {

void check_base(int base) {
    if (base < 2) throw std::invalid_argument("base must be >= 2");
}

char digit_char(int d) {
    return d < 10 ? static_cast<char>('0' + d) : static_cast<char>('A' + d - 10);
}

int char_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'A' && c <= 'Z') return c - 'A' + 10;
    if (c >= 'a' && c <= 'z') return c - 'a' + 10;
    return -1;
}

}  // namespace

Numeral Numeral::of(Value value, int base) {
    return Numeral{value, base, to_digits(value, base)};
}

Digits to_digits(Value n, int base) {
    check_base(base);
    Digits out;
    do {
        out.push_back(static_cast<int>(n % static_cast<Value>(base)));
        n /= static_cast<Value>(base);
    } while (n > 0);
    std::reverse(out.begin(), out.end());
    return out;
}

Value from_digits(const Digits& digits, int base) {
    check_base(base);
    if (digits.empty()) throw std::invalid_argument("empty digit sequence");
    const Value max = ~static_cast<Value>(0);
    Value acc = 0;
    for (int d : digits) {
        if (d < 0 || d >= base) throw std::invalid_argument("digit out of range for base");
        if (acc > (max - static_cast<Value>(d)) / static_cast<Value>(base))
            throw std::overflow_error("value does not fit in 128 bits");
        acc = acc * static_cast<Value>(base) + static_cast<Value>(d);
    }
    return acc;
}

int digit_count(Value n, int base) {
    check_base(base);
    int count = 1;
    while (n >= static_cast<Value>(base)) {
        n /= static_cast<Value>(base);
        ++count;
    }
    return count;
}

std::string render(const Digits& digits, int base) {
    check_base(base);
    if (digits.empty()) throw std::invalid_argument("empty digit sequence");
    std::string out;
    if (base <= 36) {
        for (int d : digits) {
            if (d < 0 || d >= base) throw std::invalid_argument("digit out of range for base");
            out.push_back(digit_char(d));
        }
    } else {
        out.push_back('(');
        for (size_t i = 0; i < digits.size(); ++i) {
            int d = digits[i];
            if (d < 0 || d >= base) throw std::invalid_argument("digit out of range for base");
            if (i > 0) out.push_back(',');
            out += std::to_string(d);
        }
        out.push_back(')');
    }
    return out;
}

Digits parse(const std::string& text, int base) {
    check_base(base);
    if (text.empty()) throw std::invalid_argument("empty numeral");
    Digits out;
    if (text.front() == '(') {
        if (text.back() != ')') throw std::invalid_argument("unterminated tuple numeral");
        std::string body = text.substr(1, text.size() - 2);
        // tolerate the trailing comma some printers emit: "(31,)"
        if (!body.empty() && body.back() == ',') body.pop_back();
        if (body.empty()) throw std::invalid_argument("empty tuple numeral");
        size_t pos = 0;
        while (pos <= body.size()) {
            size_t comma = body.find(',', pos);
            std::string part = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            if (part.empty() || !std::all_of(part.begin(), part.end(), [](unsigned char c) { return std::isdigit(c); }))
                throw std::invalid_argument("malformed tuple component: '" + part + "'");
            long long d = std::stoll(part);
            if (d >= base) throw std::invalid_argument("digit out of range for base");
            out.push_back(static_cast<int>(d));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    } else {
        if (base > 36) throw std::invalid_argument("bases above 36 use tuple syntax, e.g. (1,31)");
        for (char c : text) {
            int d = char_digit(c);
            if (d < 0 || d >= base)
                throw std::invalid_argument(std::string("invalid digit '") + c + "' for base " + std::to_string(base));
            out.push_back(d);
        }
    }
    return out;
}

std::string value_to_string(Value v) {
    if (v == 0) return "0";
    std::string out;
    while (v > 0) {
        out.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

}  // namespace rsp
