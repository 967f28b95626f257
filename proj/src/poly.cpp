#include "hilbpoly/poly.hpp"

#include <sstream>

namespace hilbpoly {

namespace {
const Rational kZero(0);
}

Poly Poly::constant(Rational c) {
    Poly p;
    if (c != 0) p.c_.push_back(std::move(c));
    return p;
}

Poly Poly::monomial(int exponent, Rational c) {
    Poly p;
    if (c != 0) {
        p.c_.assign(exponent + 1, Rational(0));
        p.c_.back() = std::move(c);
    }
    return p;
}

const Rational& Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[i];
}

const Rational& Poly::leading() const {
    if (c_.empty()) throw Error("leading coefficient of the zero polynomial");
    return c_.back();
}

Rational Poly::operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly::zero();
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] != 0) r[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return Poly(std::move(r));
}

Poly operator*(const Rational& s, const Poly& p) {
    if (s == 0) return Poly::zero();
    Poly r(p);
    for (auto& c : r.c_) c *= s;
    return r;
}

Poly Poly::shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    Poly r;
    r.c_.assign(c_.size() + k, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
    return r;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) {
        const Rational& c = c_[i];
        if (c == 0) continue;
        Rational a = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        const bool unit = (a == 1 && i > 0);
        if (!unit) out << to_string(a);
        if (i > 0) {
            if (!unit) out << "*";
            out << var;
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

std::pair<Poly, Poly> poly_divrem(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw Error("polynomial division by zero");
    std::vector<Rational> rem = a.coeffs();
    const auto& d = b.coeffs();
    const int db = static_cast<int>(d.size()) - 1;
    // indices of nonzero divisor coefficients, so sparse divisors reduce fast
    std::vector<int> nz;
    for (int j = 0; j < db; ++j) {
        if (d[j] != 0) nz.push_back(j);
    }
    const Rational& lead = d.back();
    std::vector<Rational> quot;
    if (static_cast<int>(rem.size()) - 1 >= db) {
        quot.assign(rem.size() - db, Rational(0));
    }
    while (static_cast<int>(rem.size()) - 1 >= db && !rem.empty()) {
        const int k = static_cast<int>(rem.size()) - 1 - db;
        Rational c = rem.back() / lead;
        quot[k] = c;
        rem.pop_back();
        for (int j : nz) rem[k + j] -= c * d[j];
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw Error("gcd of two zero polynomials");
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = poly_divrem(x, y).second;
        if (!r.is_zero()) r = (Rational(1) / r.leading()) * r;
        x = std::move(y);
        y = std::move(r);
    }
    return (Rational(1) / x.leading()) * x;
}

SeriesPrefix series_of_ratfun(const Poly& num, const Poly& den, int order) {
    if (den.is_zero() || den.coeff(0) == 0)
        throw Error("series_of_ratfun: denominator vanishes at z = 0");
    if (order < 1) throw Error("series_of_ratfun: order must be >= 1");
    const Rational& d0 = den.coeff(0);
    const int dd = den.degree().value();
    SeriesPrefix s;
    s.coeffs.reserve(order);
    for (int n = 0; n < order; ++n) {
        Rational acc = num.coeff(n);
        const int jmax = std::min(n, dd);
        for (int j = 1; j <= jmax; ++j) {
            if (den.coeff(j) != 0) acc -= den.coeff(j) * s.coeffs[n - j];
        }
        s.coeffs.push_back(acc / d0);
    }
    return s;
}

}  // namespace hilbpoly
