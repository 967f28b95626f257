#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hilbpoly/rational.hpp"

namespace hilbpoly {

/// Dense univariate polynomial over the rationals, coefficient index =
/// exponent. The zero polynomial is the empty coefficient sequence; its
/// degree is reported as std::nullopt rather than any integer sentinel.
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly one() { return constant(1); }
    static Poly constant(Rational c);
    /// c * z^k
    static Poly monomial(int exponent, Rational c = Rational(1));

    bool is_zero() const { return c_.empty(); }
    std::optional<int> degree() const {
        if (c_.empty()) return std::nullopt;
        return static_cast<int>(c_.size()) - 1;
    }
    /// Coefficient of z^i; zero beyond the stored range.
    const Rational& coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& leading() const;

    Rational operator()(const Rational& x) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rational& s, const Poly& p);
    /// p * z^k
    Poly shifted(int k) const;

    bool operator==(const Poly& o) const { return c_ == o.c_; }

    /// "z^3 - 2*z + 1" style display, highest power first.
    std::string str(const std::string& var = "z") const;

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

/// quotient, remainder with a = q*b + r and deg r < deg b. Throws on b = 0.
std::pair<Poly, Poly> poly_divrem(const Poly& a, const Poly& b);

/// Monic gcd via the Euclidean algorithm (remainders normalized monic each
/// step to control coefficient growth). Throws when both inputs are zero.
Poly poly_gcd(const Poly& a, const Poly& b);

/// Finite prefix of a power series: the first `order()` coefficients.
struct SeriesPrefix {
    std::vector<Rational> coeffs;
    int order() const { return static_cast<int>(coeffs.size()); }
};

/// First `order` Taylor coefficients of num/den at z = 0. Requires den(0) != 0.
SeriesPrefix series_of_ratfun(const Poly& num, const Poly& den, int order);

}  // namespace hilbpoly
