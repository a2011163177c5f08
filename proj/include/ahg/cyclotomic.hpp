#pragma once

#include "ahg/numeric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ahg {

/// Exact element of the cyclotomic field Q(zeta_n), stored as rational
/// coefficients of 1, zeta, ..., zeta^{n-1} (a spanning set, not a basis:
/// equality and the zero test reduce modulo the n-th cyclotomic polynomial).
class Cyclotomic {
public:
    explicit Cyclotomic(int order);

    static Cyclotomic zero(int order) { return Cyclotomic(order); }
    static Cyclotomic one(int order);
    static Cyclotomic rational(int order, const Rational& r);
    /// zeta_order^k.
    static Cyclotomic root_power(int order, const Int& k);
    /// exp(2 pi i p); requires p.denominator() | order.
    static Cyclotomic from_phase(int order, const RationalPhase& p);

    int order() const { return n_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic scaled(const Rational& r) const;
    Cyclotomic conj() const;

    bool is_zero() const;
    bool operator==(const Cyclotomic& o) const;
    /// The value as a rational number, when it is one.
    std::optional<Rational> as_rational() const;

    std::string str() const;

private:
    int n_;
    std::vector<Rational> c_;
};

/// Coefficients of the n-th cyclotomic polynomial (exact, cached).
const std::vector<Rational>& cyclotomic_polynomial(int n);

} // namespace ahg
