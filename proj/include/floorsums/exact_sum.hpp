// Exact accumulator for long rational sums.
//
// Adding n terms through Rational::operator+ pays a bignum gcd per step; this
// accumulator keeps an unreduced num/den pair, extends the denominator only by
// the new factor lcm-style (one small gcd per add), and normalizes once at the
// end. Compaction kicks in if the denominator grows past a threshold, which
// rescues sums whose reduced form stays small (telescoping-like series).

#pragma once

#include "floorsums/rational.hpp"

namespace floorsums {

class ExactSum {
public:
    ExactSum() : num_(0), den_(1) {}

    void add(const Rational& q) { add(q.num(), q.den()); }

    void add(const Int& p, const Int& r) {
        Int g = boost::multiprecision::gcd(den_, r);
        Int scale = r / g;
        num_ = num_ * scale + p * (den_ / g);
        den_ *= scale;
        if (boost::multiprecision::msb(den_) > kCompactBits) compact();
    }

    void add_int(const Int& p) { num_ += p * den_; }

    Rational value() const { return Rational(num_, den_); }

    // Unreduced view; den() > 0. Lets callers compare |sum| against bounds by
    // cross-multiplication without paying the final gcd.
    const Int& raw_num() const { return num_; }
    const Int& raw_den() const { return den_; }

private:
    static constexpr unsigned kCompactBits = 1u << 17;

    void compact() {
        Int g = boost::multiprecision::gcd(num_ < 0 ? Int(-num_) : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    Int num_;
    Int den_;
};

}  // namespace floorsums
