#pragma once

// Overflow-checked 64/128-bit integer helpers. All core arithmetic in this
// library must either be exact or throw; nothing is allowed to wrap.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hk {

using i64 = std::int64_t;
using i128 = __int128;
using u128 = unsigned __int128;

// Bad user-supplied data (non-primitive class, malformed invariants, ...).
struct domain_error : std::domain_error {
    explicit domain_error(const std::string& w) : std::domain_error(w) {}
};

// Exact arithmetic left the representable range. Reported, never wrapped.
struct overflow_error : std::overflow_error {
    explicit overflow_error(const std::string& w) : std::overflow_error(w) {}
};

// Two independently computed quantities that must agree did not. Always a bug
// (or a genuine counterexample to an invariant the suite is meant to freeze).
struct consistency_error : std::logic_error {
    explicit consistency_error(const std::string& w) : std::logic_error(w) {}
};

inline i64 add64(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) throw overflow_error("add64");
    return r;
}

inline i64 sub64(i64 a, i64 b) {
    i64 r;
    if (__builtin_sub_overflow(a, b, &r)) throw overflow_error("sub64");
    return r;
}

inline i64 mul64(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw overflow_error("mul64");
    return r;
}

// the 128-bit checks avoid __builtin_*_overflow: gcc 11 at -O3 miscompiles
// the __int128 variants in some inlining contexts (spurious overflow on
// operands around 2^28), so the detection is written in unsigned arithmetic
inline i128 mul128(i128 a, i128 b) {
    if (a == 0 || b == 0) return 0;
    u128 ua = a < 0 ? 0 - static_cast<u128>(a) : static_cast<u128>(a);
    u128 ub = b < 0 ? 0 - static_cast<u128>(b) : static_cast<u128>(b);
    bool neg = (a < 0) != (b < 0);
    u128 limit = neg ? static_cast<u128>(1) << 127
                     : (static_cast<u128>(1) << 127) - 1;
    if (ua > limit / ub) throw overflow_error("mul128");
    u128 up = ua * ub;
    return neg ? static_cast<i128>(0 - up) : static_cast<i128>(up);
}

inline i128 add128(i128 a, i128 b) {
    i128 r = static_cast<i128>(static_cast<u128>(a) + static_cast<u128>(b));
    if ((a < 0) == (b < 0) && (r < 0) != (a < 0)) throw overflow_error("add128");
    return r;
}

inline i64 narrow64(i128 v) {
    if (v > i128(INT64_MAX) || v < i128(INT64_MIN)) throw overflow_error("narrow64");
    return static_cast<i64>(v);
}

inline i64 gcd64(i64 a, i64 b) {
    // std::gcd is UB on INT64_MIN (|a| not representable)
    if (a == INT64_MIN || b == INT64_MIN) throw overflow_error("gcd64");
    return std::gcd(a, b);
}

inline i128 abs128(i128 v) { return v < 0 ? -v : v; }

inline i128 gcd128(i128 a, i128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Floor/ceil division with sign-correct behavior for negative numerators.
inline i64 floor_div(i64 a, i64 b) {
    if (b == 0) throw domain_error("floor_div: zero divisor");
    i64 q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

inline i64 ceil_div(i64 a, i64 b) {
    if (b == 0) throw domain_error("ceil_div: zero divisor");
    i64 q = a / b, r = a % b;
    if (r != 0 && ((r < 0) == (b < 0))) ++q;
    return q;
}

// a mod m normalized to [0, m)
inline i64 mod_norm(i64 a, i64 m) {
    if (m <= 0) throw domain_error("mod_norm: modulus must be positive");
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace hk
