#ifndef RSP_NUMERALS_HPP
#define RSP_NUMERALS_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace rsp {

// Unsigned value type wide enough for every b we enumerate (e.g. 19 digits
// in base 18 is ~4e23, past 64 bits).
using Value = unsigned __int128;

// Digit expansion, most-significant digit first.
using Digits = std::vector<int>;

/// A nonnegative integer together with its base-beta digit expansion.
struct Numeral {
    Value value = 0;
    int base = 10;
    Digits digits;  // no leading zero unless value == 0 (then {0})

    static Numeral of(Value value, int base);
};

// Expand n in the given base, most-significant first. n = 0 yields {0}.
Digits to_digits(Value n, int base);

// Inverse of to_digits; leading zeros are tolerated and stripped.
// Throws std::invalid_argument on digits out of [0, base) and
// std::overflow_error if the value does not fit in Value.
Value from_digits(const Digits& digits, int base);

// Number of base-beta digits of n (1 for n = 0).
int digit_count(Value n, int base);

// Render digits as text: bases up to 36 use 0-9A-Z, larger bases use a
// parenthesized tuple of base-10 components, e.g. "(1,31)".
std::string render(const Digits& digits, int base);

// Parse either render format back into a digit sequence. A trailing comma
// inside a tuple, as in "(31,)", is accepted and ignored.
Digits parse(const std::string& text, int base);

// Decimal rendering of a Value (for bases where digits exceed one char).
std::string value_to_string(Value v);

}  // namespace rsp

#endif
