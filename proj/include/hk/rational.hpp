#pragma once

// Exact rational numbers over checked 64-bit integers. Always reduced, the
// denominator always positive. Intermediate products go through 128 bits so a
// value representable after reduction never raises a spurious overflow.

#include <compare>
#include <ostream>
#include <string>

#include "hk/checked.hpp"

namespace hk {

class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(i64 n) : num_(n), den_(1) {}  // NOLINT: implicit by design
    Rational(i64 n, i64 d) { assign(i128(n), i128(d)); }

    i64 num() const { return num_; }
    i64 den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }

    // Requires den == 1; the call sites all assert integrality of a derived
    // quantity, so failure here means a formula is wrong, not the input.
    i64 as_integer() const {
        if (den_ != 1) throw consistency_error("Rational::as_integer on " + str());
        return num_;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(add128(mul128(a.num_, b.den_), mul128(b.num_, a.den_)),
                        mul128(a.den_, b.den_), raw_tag{});
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(add128(mul128(a.num_, b.den_), -mul128(b.num_, a.den_)),
                        mul128(a.den_, b.den_), raw_tag{});
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(mul128(a.num_, b.num_), mul128(a.den_, b.den_), raw_tag{});
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw domain_error("Rational: division by zero");
        return Rational(mul128(a.num_, b.den_), mul128(a.den_, b.num_), raw_tag{});
    }
    Rational operator-() const { return Rational(-i128(num_), i128(den_), raw_tag{}); }

    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        // cross products fit in i128; denominators are positive
        i128 l = mul128(a.num_, b.den_), r = mul128(b.num_, a.den_);
        return l <=> r;
    }

    int sign() const { return num_ > 0 ? 1 : num_ < 0 ? -1 : 0; }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

  private:
    struct raw_tag {};
    Rational(i128 n, i128 d, raw_tag) { assign(n, d); }

    void assign(i128 n, i128 d) {
        if (d == 0) throw domain_error("Rational: zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        i128 g = gcd128(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        num_ = narrow64(n);
        den_ = narrow64(d);
    }

    i64 num_;
    i64 den_;
};

}  // namespace hk
