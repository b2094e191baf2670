// Integer r-th roots and perfect-power detection, exact at the boundary.

#pragma once

#include "floorsums/rational.hpp"

#include <cstdint>
#include <optional>

namespace floorsums {

// Largest d >= 0 with d^r <= n. Binary search on the exact predicate, with the
// bracket [2^(b/r), 2^(b/r)+1) read off the bit length, so no step ever trusts
// a float.
inline Int integer_rth_root(const Int& n, unsigned r) {
    if (r == 0) throw std::domain_error("integer_rth_root: r must be >= 1");
    if (n < 0) throw std::domain_error("integer_rth_root: n must be >= 0");
    if (n == 0) return 0;
    if (r == 1) return n;
    unsigned b = boost::multiprecision::msb(n);  // 2^b <= n < 2^(b+1)
    Int lo = Int(1) << (b / r);                  // lo^r <= 2^b <= n
    Int hi = Int(1) << (b / r + 1);              // hi^r >= 2^(b+1) > n
    while (hi - lo > 1) {
        Int mid = (lo + hi) / 2;
        if (ipow(mid, r) <= n)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

inline std::optional<Int> as_perfect_rth_power(const Int& n, unsigned r) {
    if (r == 0) throw std::domain_error("as_perfect_rth_power: r must be >= 1");
    if (n < 1) throw std::domain_error("as_perfect_rth_power: n must be >= 1");
    if (r == 1) return n;
    Int d = integer_rth_root(n, r);
    if (ipow(d, r) == n) return d;
    return std::nullopt;
}

// uint64 fast path: float seed, exact correction. Used in the Theta(x) scan
// loops where a bignum root per n would dominate the runtime.
inline bool pow_leq_u64(std::uint64_t d, unsigned r, std::uint64_t n) {
    // d^r <= n without overflow
    unsigned __int128 acc = 1;
    for (unsigned i = 0; i < r; ++i) {
        acc *= d;
        if (acc > n) return false;
    }
    return true;
}

inline std::uint64_t iroot_u64(std::uint64_t n, unsigned r) {
    if (r == 0) throw std::domain_error("iroot_u64: r must be >= 1");
    if (n == 0) return 0;
    if (r == 1) return n;
    if (r >= 64) return 1;
    auto d = static_cast<std::uint64_t>(std::pow(static_cast<double>(n), 1.0 / r));
    while (d > 0 && !pow_leq_u64(d, r, n)) --d;
    while (pow_leq_u64(d + 1, r, n)) ++d;
    return d;
}

// d with d^r == q, or 0 when q is not a perfect r-th power (q >= 1).
inline std::uint64_t perfect_rth_root_u64(std::uint64_t q, unsigned r) {
    if (r == 1) return q;
    std::uint64_t d = iroot_u64(q, r);
    unsigned __int128 acc = 1;
    for (unsigned i = 0; i < r; ++i) acc *= d;
    return acc == q ? d : 0;
}

// Largest integer d >= 0 with d^r <= q for a nonnegative rational q.
inline Int rational_floor_rth_root(const Rational& q, unsigned r) {
    if (q.sign() < 0) throw std::domain_error("rational_floor_rth_root: q must be >= 0");
    return integer_rth_root(q.floor(), r);
}

}  // namespace floorsums
