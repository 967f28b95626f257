#pragma once

#include "hilbpoly/poly.hpp"

namespace hilbpoly {

/// num/den in lowest terms with den(0) = 1. This is the normal form for a
/// Poincare series: the constant term of the denominator fixes the unit.
struct RationalFunction {
    Poly num;
    Poly den;

    /// Reduce to coprime form and scale so den(0) = 1.
    static RationalFunction normalized(Poly num, Poly den) {
        if (den.is_zero()) throw Error("RationalFunction: zero denominator");
        if (!num.is_zero()) {
            const Poly g = poly_gcd(num, den);
            if (g.degree().value() > 0) {
                num = poly_divrem(num, g).first;
                den = poly_divrem(den, g).first;
            }
        }
        if (den.coeff(0) == 0)
            throw Error("RationalFunction: denominator vanishes at z = 0");
        const Rational scale = Rational(1) / den.coeff(0);
        return {scale * num, scale * den};
    }

    bool operator==(const RationalFunction& o) const {
        return num == o.num && den == o.den;
    }
};

}  // namespace hilbpoly
