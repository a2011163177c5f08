#include "ahg/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace ahg {
namespace {

using Poly = std::vector<Rational>; // coefficient k of x^k, no trailing zeros

void trim(Poly& p) {
    while (!p.empty() && p.back() == Rational(0)) p.pop_back();
}

/// Exact quotient p / q; throws when the division is not exact.
Poly poly_div(Poly p, const Poly& q) {
    trim(p);
    Poly out(p.size() >= q.size() - 1 ? p.size() - q.size() + 1 : 0, Rational(0));
    while (p.size() >= q.size()) {
        Rational lead = p.back() / q.back();
        std::size_t shift = p.size() - q.size();
        out[shift] = lead;
        for (std::size_t i = 0; i < q.size(); ++i) p[shift + i] -= lead * q[i];
        trim(p);
    }
    if (!p.empty()) throw std::logic_error("poly_div: inexact division");
    return out;
}

/// Remainder of p modulo q.
Poly poly_rem(Poly p, const Poly& q) {
    trim(p);
    while (p.size() >= q.size()) {
        Rational lead = p.back() / q.back();
        std::size_t shift = p.size() - q.size();
        for (std::size_t i = 0; i < q.size(); ++i) p[shift + i] -= lead * q[i];
        trim(p);
    }
    return p;
}

/// x^n - 1 divided by the cyclotomic polynomials of the proper divisors.
/// Recurses on the cache directly; the caller holds the lock.
const Poly& cached_cyclotomic(int n, std::map<int, Poly>& cache) {
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    Poly f(static_cast<std::size_t>(n) + 1, Rational(0));
    f[0] = Rational(-1);
    f[static_cast<std::size_t>(n)] = Rational(1);
    for (int d = 1; d < n; ++d)
        if (n % d == 0) f = poly_div(std::move(f), cached_cyclotomic(d, cache));
    return cache.emplace(n, std::move(f)).first->second;
}

} // namespace

const std::vector<Rational>& cyclotomic_polynomial(int n) {
    if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: order must be positive");
    static std::map<int, Poly> cache;
    static std::mutex lock;
    std::lock_guard<std::mutex> guard(lock);
    return cached_cyclotomic(n, cache);
}

Cyclotomic::Cyclotomic(int order) : n_(order), c_(static_cast<std::size_t>(order), Rational(0)) {
    if (order < 1) throw std::invalid_argument("Cyclotomic: order must be positive");
}

Cyclotomic Cyclotomic::one(int order) { return rational(order, Rational(1)); }

Cyclotomic Cyclotomic::rational(int order, const Rational& r) {
    Cyclotomic z(order);
    z.c_[0] = r;
    return z;
}

Cyclotomic Cyclotomic::root_power(int order, const Int& k) {
    Cyclotomic z(order);
    Int i = mod_floor(k, Int(order));
    z.c_[static_cast<std::size_t>(static_cast<long long>(i))] = Rational(1);
    return z;
}

Cyclotomic Cyclotomic::from_phase(int order, const RationalPhase& p) {
    if (Int(order) % p.denominator() != 0)
        throw std::invalid_argument("Cyclotomic::from_phase: phase denominator does not divide the order");
    return root_power(order, p.numerator() * (Int(order) / p.denominator()));
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    if (n_ != o.n_) throw std::invalid_argument("Cyclotomic: mixed orders");
    Cyclotomic z(n_);
    for (int i = 0; i < n_; ++i) z.c_[i] = c_[i] + o.c_[i];
    return z;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
    if (n_ != o.n_) throw std::invalid_argument("Cyclotomic: mixed orders");
    Cyclotomic z(n_);
    for (int i = 0; i < n_; ++i) z.c_[i] = c_[i] - o.c_[i];
    return z;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    if (n_ != o.n_) throw std::invalid_argument("Cyclotomic: mixed orders");
    Cyclotomic z(n_);
    for (int i = 0; i < n_; ++i) {
        if (c_[i] == Rational(0)) continue;
        for (int j = 0; j < n_; ++j) {
            if (o.c_[j] == Rational(0)) continue;
            z.c_[(i + j) % n_] += c_[i] * o.c_[j];
        }
    }
    return z;
}

Cyclotomic Cyclotomic::scaled(const Rational& r) const {
    Cyclotomic z(n_);
    for (int i = 0; i < n_; ++i) z.c_[i] = c_[i] * r;
    return z;
}

Cyclotomic Cyclotomic::conj() const {
    Cyclotomic z(n_);
    for (int i = 0; i < n_; ++i) z.c_[(n_ - i) % n_] += c_[i];
    return z;
}

bool Cyclotomic::is_zero() const {
    Poly p(c_);
    Poly rem = poly_rem(std::move(p), cyclotomic_polynomial(n_));
    return rem.empty();
}

bool Cyclotomic::operator==(const Cyclotomic& o) const { return (*this - o).is_zero(); }

std::optional<Rational> Cyclotomic::as_rational() const {
    Poly p(c_);
    Poly rem = poly_rem(std::move(p), cyclotomic_polynomial(n_));
    if (rem.empty()) return Rational(0);
    if (rem.size() == 1) return rem[0];
    return std::nullopt;
}

std::string Cyclotomic::str() const {
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i < n_; ++i) {
        if (c_[i] == Rational(0)) continue;
        if (!first) out << " + ";
        out << c_[i].str();
        if (i > 0) out << "*z^" << i;
        first = false;
    }
    if (first) out << "0";
    return out.str();
}

} // namespace ahg
