#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ahg {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

/// Remainder in [0, m) for m > 0; identity for m == 0 (free coordinate).
inline Int mod_floor(const Int& a, const Int& m) {
    if (m == 0) return a;
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

/// Quotient matching mod_floor: a == floor_div(a, m) * m + mod_floor(a, m).
inline Int floor_div(const Int& a, const Int& m) {
    Int q = a / m;
    if (a % m != 0 && ((a < 0) != (m < 0))) --q;
    return q;
}

/// Exact element of Q/Z. Always normalized: den >= 1, 0 <= num < den, gcd(num, den) = 1.
class RationalPhase {
public:
    RationalPhase() : num_(0), den_(1) {}
    RationalPhase(Int num, Int den) {
        if (den == 0) throw std::invalid_argument("RationalPhase: zero denominator");
        if (den < 0) { den = -den; num = -num; }
        num = mod_floor(num, den);
        Int g = gcd(num, den);
        if (g == 0) g = 1;
        num_ = num / g;
        den_ = den / g;
    }

    const Int& numerator() const { return num_; }
    const Int& denominator() const { return den_; }
    bool is_zero() const { return num_ == 0; }

    RationalPhase operator+(const RationalPhase& o) const {
        return RationalPhase(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RationalPhase operator-(const RationalPhase& o) const {
        return RationalPhase(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    RationalPhase operator-() const { return RationalPhase(-num_, den_); }
    RationalPhase operator*(const Int& k) const { return RationalPhase(num_ * k, den_); }

    bool operator==(const RationalPhase& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator<(const RationalPhase& o) const {
        // exact comparison of the reduced values via cross multiplication
        return num_ * o.den_ < o.num_ * den_;
    }

    std::string str() const { return num_.str() + "/" + den_.str(); }

private:
    Int num_, den_;
};

} // namespace ahg
