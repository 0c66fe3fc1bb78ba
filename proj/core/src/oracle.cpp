#include "rsp/oracle.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace rsp {

namespace {

constexpr uint64_t kU64Max = std::numeric_limits<uint64_t>::max();

struct PowTable {
    std::array<uint64_t, 66> pow{};
    int size = 0;
};

PowTable make_pows(int base) {
    PowTable t;
    t.pow[0] = 1;
    t.size = 1;
    while (t.pow[t.size - 1] <= kU64Max / static_cast<uint64_t>(base)) {
        t.pow[t.size] = t.pow[t.size - 1] * static_cast<uint64_t>(base);
        ++t.size;
    }
    return t;
}

// digits(sum) reversed == digits(product), both already known to have n digits
bool digits_reversed_equal_u64(uint64_t s, uint64_t p, int base, int n) {
    int sd[66];
    int pd[66];
    for (int i = 0; i < n; ++i) {
        sd[i] = static_cast<int>(s % static_cast<uint64_t>(base));
        s /= static_cast<uint64_t>(base);
        pd[i] = static_cast<int>(p % static_cast<uint64_t>(base));
        p /= static_cast<uint64_t>(base);
    }
    for (int i = 0; i < n; ++i)
        if (pd[i] != sd[n - 1 - i]) return false;
    return true;
}

bool is_rsp_pair_wide(Value a, Value b, int base) {
    const Value max = ~static_cast<Value>(0);
    if (a > max / b) throw std::overflow_error("product does not fit in 128 bits");
    Value s = a + b;
    Value p = a * b;
    int sd[132];
    int pd[132];
    int ns = 0;
    int np = 0;
    while (true) {
        sd[ns++] = static_cast<int>(s % static_cast<Value>(base));
        s /= static_cast<Value>(base);
        if (s == 0) break;
    }
    while (true) {
        pd[np++] = static_cast<int>(p % static_cast<Value>(base));
        p /= static_cast<Value>(base);
        if (p == 0) break;
    }
    if (ns != np) return false;
    for (int i = 0; i < ns; ++i)
        if (pd[i] != sd[ns - 1 - i]) return false;
    return true;
}

void check_base(int base) {
    if (base < 2) throw std::invalid_argument("base must be >= 2");
}

}  // namespace

bool is_rsp_pair(Value a, Value b, int base) {
    check_base(base);
    if (a == 0 || b == 0) return false;
    if (a <= kU64Max && b <= kU64Max && a <= static_cast<Value>(kU64Max) / b) {
        uint64_t s = static_cast<uint64_t>(a) + static_cast<uint64_t>(b);
        uint64_t p = static_cast<uint64_t>(a) * static_cast<uint64_t>(b);
        PowTable t = make_pows(base);
        int ds = 1;
        while (ds < t.size && s >= t.pow[ds]) ++ds;
        int dp = 1;
        while (dp < t.size && p >= t.pow[dp]) ++dp;
        if (ds != dp) return false;
        return digits_reversed_equal_u64(s, p, base, ds);
    }
    return is_rsp_pair_wide(a, b, base);
}

std::vector<Value> search_b(Value a, int base, Value max_b) {
    check_base(base);
    if (a < 1) throw std::invalid_argument("a must be positive");
    std::vector<Value> out;
    if (max_b < 1) return out;

    // Fast path: everything fits in 64 bits, so sum/product and their digit
    // counts can be maintained incrementally along the b scan.
    if (a <= kU64Max && max_b <= kU64Max && a * (max_b + 1) <= static_cast<Value>(kU64Max)) {
        const uint64_t A = static_cast<uint64_t>(a);
        const uint64_t B = static_cast<uint64_t>(max_b);
        const PowTable t = make_pows(base);
        uint64_t s = A + 1;
        uint64_t p = A;
        int ds = 1;
        while (ds < t.size && s >= t.pow[ds]) ++ds;
        int dp = 1;
        while (dp < t.size && p >= t.pow[dp]) ++dp;
        for (uint64_t b = 1; b <= B; ++b, ++s, p += A) {
            while (ds < t.size && s >= t.pow[ds]) ++ds;
            while (dp < t.size && p >= t.pow[dp]) ++dp;
            if (ds != dp) continue;
            // cheap filter: last digit of the product must be the first
            // digit of the sum
            if (p % static_cast<uint64_t>(base) != s / t.pow[ds - 1]) continue;
            if (digits_reversed_equal_u64(s, p, base, ds)) out.push_back(b);
        }
        return out;
    }

    for (Value b = 1; b <= max_b; ++b)
        if (is_rsp_pair(a, b, base)) out.push_back(b);
    return out;
}

std::vector<RspPair> search_pairs(int base, Value max_b, bool scan_large_a) {
    check_base(base);
    if (max_b < 1) return {};
    const Value a_max = scan_large_a ? max_b : std::min<Value>(max_b, static_cast<Value>(base) - 1);
    std::vector<RspPair> out;
    for (Value a = 1; a <= a_max; ++a) {
        for (Value b : search_b(a, base, max_b))
            if (b >= a) out.push_back(RspPair{a, b, base});
    }
    std::sort(out.begin(), out.end(), [](const RspPair& l, const RspPair& r) {
        return l.b != r.b ? l.b < r.b : l.a < r.a;
    });
    return out;
}

std::vector<RspPair> small_b_pairs(int base) {
    check_base(base);
    std::vector<RspPair> out;
    if (base >= 5) out.push_back(RspPair{2, 2, base});
    if (base >= 3) {
        Value d = static_cast<Value>(base) - 1;
        out.push_back(RspPair{d, d, base});
    }
    return out;
}

}  // namespace rsp
