#ifndef RSP_ORACLE_HPP
#define RSP_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "rsp/numerals.hpp"

namespace rsp {

// A pair a <= b whose sum and product have mutually reversed digits in the
// given base.
struct RspPair {
    Value a = 0;
    Value b = 0;
    int base = 10;

    friend bool operator==(const RspPair&, const RspPair&) = default;
};

// True iff a+b and a*b have the same number of base-beta digits and those
// digits are the reverse of each other. Order of a and b is irrelevant.
bool is_rsp_pair(Value a, Value b, int base);

// All b in [1, max_b] forming a reversed sum-product pair with the given a.
// Plain scan over b; digit work is kept cheap but nothing clever happens.
std::vector<Value> search_b(Value a, int base, Value max_b);

// Exhaustive search over a <= b <= max_b, ordered by (b, a). The default
// outer loop stops at a < base; pass scan_large_a to widen it to
// a < base*(base+1) for probing the provably empty region.
std::vector<RspPair> search_pairs(int base, Value max_b, bool scan_large_a = false);

// The pairs with b < base: (2,2) exactly when base >= 5 and
// (base-1, base-1) exactly when base >= 3.
std::vector<RspPair> small_b_pairs(int base);

}  // namespace rsp

#endif
