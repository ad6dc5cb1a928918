#pragma once

// Quadratic surds (a + sqrt(b)) / c with b >= 0, c > 0, compared exactly by
// staged sign analysis and squaring. No floating point: the multiplier-bound
// decisions downstream are all strict inequalities against integers and
// against each other, and several of them are razor thin.

#include <cmath>
#include <ostream>
#include <string>

#include "hk/checked.hpp"
#include "hk/rational.hpp"

namespace hk {

namespace detail {

// sign of X + sqrt(P) - sqrt(Q), P >= 0, Q >= 0
inline int surd_sign(i128 X, i128 P, i128 Q) {
    if (P == Q) return X > 0 ? 1 : X < 0 ? -1 : 0;
    if (X == 0) return P > Q ? 1 : -1;
    if (X > 0 && P > Q) return 1;
    if (X < 0 && P < Q) return -1;
    if (X < 0) {  // P > Q: flip to the other branch
        return -surd_sign(-X, Q, P);
    }
    // X > 0, P < Q: compare X + sqrt(P) against sqrt(Q), both sides nonnegative
    i128 T = add128(Q, -add128(P, mul128(X, X)));  // Q - P - X^2
    if (T < 0) return 1;
    if (T == 0) return P > 0 ? 1 : 0;
    i128 lhs = mul128(mul128(4, mul128(X, X)), P);  // (2X sqrt(P))^2
    i128 rhs = mul128(T, T);
    return lhs > rhs ? 1 : lhs < rhs ? -1 : 0;
}

}  // namespace detail

class MBound {
  public:
    MBound(i64 a, i64 b, i64 c) : a_(a), b_(b), c_(c) {
        if (b < 0) throw domain_error("MBound: negative radicand");
        if (c <= 0) throw domain_error("MBound: nonpositive denominator");
    }

    i64 a() const { return a_; }
    i64 b() const { return b_; }
    i64 c() const { return c_; }

    // sign of *this - p/q
    int compare(const Rational& r) const {
        i128 X = add128(mul128(a_, r.den()), -mul128(r.num(), c_));
        i128 P = mul128(mul128(r.den(), r.den()), b_);
        return detail::surd_sign(X, P, 0);
    }

    // sign of *this - other
    int compare(const MBound& o) const {
        i128 X = add128(mul128(a_, o.c_), -mul128(o.a_, c_));
        i128 P = mul128(mul128(o.c_, o.c_), b_);
        i128 Q = mul128(mul128(c_, c_), o.b_);
        return detail::surd_sign(X, P, Q);
    }

    friend bool operator<(const MBound& x, const Rational& r) { return x.compare(r) < 0; }
    friend bool operator>(const MBound& x, const Rational& r) { return x.compare(r) > 0; }
    friend bool operator<=(const MBound& x, const Rational& r) { return x.compare(r) <= 0; }
    friend bool operator>=(const MBound& x, const Rational& r) { return x.compare(r) >= 0; }
    friend bool operator==(const MBound& x, const Rational& r) { return x.compare(r) == 0; }
    friend bool operator<(const Rational& r, const MBound& x) { return x.compare(r) > 0; }
    friend bool operator>(const Rational& r, const MBound& x) { return x.compare(r) < 0; }
    friend bool operator<=(const Rational& r, const MBound& x) { return x.compare(r) >= 0; }
    friend bool operator>=(const Rational& r, const MBound& x) { return x.compare(r) <= 0; }
    friend bool operator<(const MBound& x, const MBound& y) { return x.compare(y) < 0; }
    friend bool operator>(const MBound& x, const MBound& y) { return x.compare(y) > 0; }
    friend bool operator<=(const MBound& x, const MBound& y) { return x.compare(y) <= 0; }
    friend bool operator>=(const MBound& x, const MBound& y) { return x.compare(y) >= 0; }
    friend bool operator==(const MBound& x, const MBound& y) { return x.compare(y) == 0; }

    double approx() const {
        return (double(a_) + std::sqrt(double(b_))) / double(c_);
    }

    std::string str() const {
        if (b_ == 0) return Rational(a_, c_).str();
        return "(" + std::to_string(a_) + "+sqrt(" + std::to_string(b_) + "))/" +
               std::to_string(c_);
    }

    friend std::ostream& operator<<(std::ostream& os, const MBound& m) { return os << m.str(); }

  private:
    i64 a_, b_, c_;
};

}  // namespace hk
