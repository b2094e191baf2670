// Exact signed rationals over arbitrary-precision integers.
//
// Every value is kept reduced (den > 0, gcd(|num|, den) = 1) and every
// operation is exact; nothing in this header rounds. The sawtooth psi and
// floor live here because the whole library leans on their exactness.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace floorsums {

using Int = boost::multiprecision::cpp_int;

inline Int ipow(Int base, unsigned e) {
    return boost::multiprecision::pow(base, e);
}

// floor(a / b) for b > 0 (built-in division truncates toward zero).
inline Int floor_div(const Int& a, const Int& b) {
    if (b <= 0) throw std::domain_error("floor_div: divisor must be positive");
    Int q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(const Int& n) : num_(n), den_(1) {}
    Rational(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }
    Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    // Knuth-style reduced addition: with g = gcd(b, d) the result
    // (a*(d/g) + c*(b/g)) / (b*(d/g)) needs only one further gcd, against g.
    friend Rational operator+(const Rational& x, const Rational& y) {
        Rational r;
        Int g = boost::multiprecision::gcd(x.den_, y.den_);
        if (g == 1) {
            r.num_ = x.num_ * y.den_ + y.num_ * x.den_;
            r.den_ = x.den_ * y.den_;
            return r;  // already reduced
        }
        Int yd = y.den_ / g;
        Int t = x.num_ * yd + y.num_ * (x.den_ / g);
        Int g2 = boost::multiprecision::gcd(t, g);
        r.num_ = t / g2;
        r.den_ = (x.den_ / g2) * yd;
        return r;
    }

    friend Rational operator-(const Rational& x, const Rational& y) { return x + (-y); }

    friend Rational operator*(const Rational& x, const Rational& y) {
        Rational r;
        Int g1 = boost::multiprecision::gcd(x.num_, y.den_);
        Int g2 = boost::multiprecision::gcd(y.num_, x.den_);
        r.num_ = (x.num_ / g1) * (y.num_ / g2);
        r.den_ = (x.den_ / g2) * (y.den_ / g1);
        return r;
    }

    friend Rational operator/(const Rational& x, const Rational& y) {
        if (y.num_ == 0) throw std::domain_error("Rational: division by zero");
        Rational inv;
        if (y.num_ > 0) {
            inv.num_ = y.den_;
            inv.den_ = y.num_;
        } else {
            inv.num_ = -y.den_;
            inv.den_ = -y.num_;
        }
        return x * inv;
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& x, const Rational& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;  // canonical form
    }
    friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
        Int lhs = x.num_ * y.den_;
        Int rhs = y.num_ * x.den_;
        return lhs < rhs ? std::strong_ordering::less
             : lhs > rhs ? std::strong_ordering::greater
                         : std::strong_ordering::equal;
    }

    Int floor() const { return floor_div(num_, den_); }
    Int ceil() const { return -floor_div(-num_, den_); }

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    // "p/q" (or "p" when q = 1); parse accepts both forms.
    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) {
            s += '/';
            s += den_.str();
        }
        return s;
    }

    static Rational parse(std::string_view s) {
        auto slash = s.find('/');
        try {
            if (slash == std::string_view::npos)
                return Rational(Int(std::string(s)));
            Int n{std::string(s.substr(0, slash))};
            Int d{std::string(s.substr(slash + 1))};
            return Rational(std::move(n), std::move(d));
        } catch (const std::runtime_error&) {
            throw std::invalid_argument("Rational: cannot parse '" + std::string(s) + "'");
        }
    }

private:
    void normalize() {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        Int g = boost::multiprecision::gcd(num_ < 0 ? Int(-num_) : num_, den_);
        if (g != 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    Int num_;
    Int den_;  // > 0
};

inline Rational pow_int(const Rational& q, long e) {
    if (e == 0) return Rational(1);
    unsigned u = static_cast<unsigned>(e < 0 ? -e : e);
    Rational p(ipow(q.num(), u), ipow(q.den(), u));
    if (e < 0) return Rational(1) / p;
    return p;
}

// psi(q) = q - floor(q) - 1/2, always in [-1/2, 1/2).
inline Rational psi(const Rational& q) {
    return q - Rational(q.floor()) - Rational(1, 2);
}

// psi(x / m) for integers x, m > 0 without going through generic floor.
inline Rational psi_of_quotient(const Int& x, const Int& m) {
    if (m <= 0) throw std::domain_error("psi_of_quotient: m must be positive");
    Int rem = x % m;
    if (rem < 0) rem += m;
    return Rational(2 * rem - m, 2 * m);
}

// Round-to-nearest double; robust for operands far beyond double range.
inline double to_double(const Int& v) {
    if (v == 0) return 0.0;
    Int a = v < 0 ? Int(-v) : v;
    unsigned bits = boost::multiprecision::msb(a);
    if (bits <= 62) {
        double d = static_cast<double>(a.convert_to<long long>());
        return v < 0 ? -d : d;
    }
    unsigned shift = bits - 62;
    double top = static_cast<double>(Int(a >> shift).convert_to<long long>());
    double d = std::ldexp(top, static_cast<int>(shift));
    return v < 0 ? -d : d;
}

inline double to_double(const Rational& q) {
    if (q.is_zero()) return 0.0;
    Int a = q.num() < 0 ? Int(-q.num()) : q.num();
    const Int& b = q.den();
    long sa = boost::multiprecision::msb(a);
    long sb = boost::multiprecision::msb(b);
    long shift_a = sa > 62 ? sa - 62 : 0;
    long shift_b = sb > 62 ? sb - 62 : 0;
    double na = static_cast<double>(Int(a >> shift_a).convert_to<long long>());
    double nb = static_cast<double>(Int(b >> shift_b).convert_to<long long>());
    double d = std::ldexp(na / nb, static_cast<int>(shift_a - shift_b));
    return q.num() < 0 ? -d : d;
}

// Exact decimal rendering to `sig` significant digits (round half to even),
// without any floating point. Scientific form outside a moderate exponent
// window, like printf %g.
inline std::string to_decimal(const Rational& q, int sig = 12) {
    if (sig < 1) throw std::invalid_argument("to_decimal: sig must be >= 1");
    if (q.is_zero()) return "0";
    Int an = q.num() < 0 ? Int(-q.num()) : q.num();
    const Int& d = q.den();

    // decimal exponent e with 10^e <= |q| < 10^(e+1)
    long e = static_cast<long>(
        std::floor((to_double(Rational(an, d)) == 0.0
                        ? 0.0
                        : std::log10(std::fabs(to_double(Rational(an, d)))))));
    auto cmp_pow10 = [&](long k) {
        // sign of |q| - 10^k
        if (k >= 0) return an <=> d * ipow(Int(10), static_cast<unsigned>(k));
        return an * ipow(Int(10), static_cast<unsigned>(-k)) <=> d;
    };
    while (cmp_pow10(e) == std::strong_ordering::less) --e;
    while (cmp_pow10(e + 1) != std::strong_ordering::less) ++e;

    // scaled = |q| * 10^(sig-1-e), rounded half to even to an integer
    long s = sig - 1 - e;
    Int scaled_num = an, scaled_den = d;
    if (s >= 0)
        scaled_num *= ipow(Int(10), static_cast<unsigned>(s));
    else
        scaled_den *= ipow(Int(10), static_cast<unsigned>(-s));
    Int digits = scaled_num / scaled_den;
    Int rem2 = (scaled_num % scaled_den) * 2;
    if (rem2 > scaled_den || (rem2 == scaled_den && digits % 2 != 0)) ++digits;
    std::string ds = digits.str();
    if (static_cast<int>(ds.size()) > sig) {  // rounding carried into a new digit
        ds.pop_back();
        ++e;
    }

    std::string out;
    if (q.num() < 0) out += '-';
    if (e >= -4 && e < sig + 3) {
        if (e >= 0) {
            long ip = e + 1;
            if (static_cast<long>(ds.size()) <= ip)
                out += ds + std::string(ip - ds.size(), '0');
            else {
                out += ds.substr(0, ip) + "." + ds.substr(ip);
            }
        } else {
            out += "0.";
            out += std::string(-e - 1, '0');
            out += ds;
        }
        if (out.find('.') != std::string::npos) {
            while (out.back() == '0') out.pop_back();
            if (out.back() == '.') out.pop_back();
        }
    } else {
        out += ds.substr(0, 1);
        std::string frac = ds.substr(1);
        while (!frac.empty() && frac.back() == '0') frac.pop_back();
        if (!frac.empty()) out += "." + frac;
        out += "e" + std::to_string(e);
    }
    return out;
}

}  // namespace floorsums
