#pragma once

#include <optional>
#include <vector>

#include "hilbpoly/poly.hpp"
#include "hilbpoly/rational_function.hpp"

namespace hilbpoly {

long euler_phi(long m);

/// The m-th cyclotomic polynomial, by the recursive exact division
/// Phi_m = (z^m - 1) / prod_{d | m, d < m} Phi_d. Memoized process-wide.
Poly cyclotomic(long m);

struct CyclotomicFactor {
    long order;        // m, the order of the roots of Phi_m
    int multiplicity;  // >= 1
    bool operator==(const CyclotomicFactor& o) const {
        return order == o.order && multiplicity == o.multiplicity;
    }
};

/// den = unit * prod Phi_m^multiplicity, orders strictly increasing. This is
/// the exact-arithmetic stand-in for "the roots of the denominator with
/// their multiplicities": every root is a root of unity, identified by its
/// order instead of by a complex value.
struct CyclotomicFactorization {
    std::vector<CyclotomicFactor> factors;
    Rational unit{1};

    std::optional<int> multiplicity_of(long order) const;
    /// unit * prod Phi_m^mult, for round-trip checks.
    Poly product() const;
};

/// Trial-divides rf.den by Phi_m for every m with phi(m) <= deg(den) and
/// m <= 2*deg(den)^2 (enough, since phi(m) >= sqrt(m/2)). The residual
/// factor must come out constant; anything else means the denominator has a
/// root that is not a root of unity, which cannot happen for an invariant
/// algebra and therefore signals a bad reconstruction.
CyclotomicFactorization factor_denominator(const RationalFunction& rf);

struct PeriodInfo {
    long period;                     // lcm of the orders, 1 when empty
    std::optional<int> degree_bound; // max multiplicity - 1; nullopt when no factors
    int pole_order_at_one;           // multiplicity of Phi_1, 0 if absent
};

PeriodInfo period_and_degree(const CyclotomicFactorization& fac);

}  // namespace hilbpoly
