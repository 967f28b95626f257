#pragma once

#include <vector>

#include "hilbpoly/cyclotomic.hpp"
#include "hilbpoly/weight_table.hpp"

namespace hilbpoly {

/// Quasi-polynomial with period L: one polynomial constituent per residue
/// class of n mod L, valid for all n >= valid_from. Constituents are stored
/// trimmed, so each has its minimal degree.
struct QuasiPolynomial {
    long period = 1;
    int valid_from = 0;
    std::vector<Poly> constituents;  // index r = n mod period

    bool is_zero_function() const {
        for (const auto& p : constituents) {
            if (!p.is_zero()) return false;
        }
        return true;
    }
    /// Largest constituent degree, nullopt for the zero function.
    std::optional<int> max_degree() const {
        std::optional<int> d;
        for (const auto& p : constituents) {
            if (auto pd = p.degree()) d = d ? std::max(*d, *pd) : *pd;
        }
        return d;
    }
};

/// constituents[n mod L](n), exact. Defined for every n >= 0 but only
/// guaranteed to equal the Hilbert function from qp.valid_from on.
Rational evaluate(const QuasiPolynomial& qp, long n);

/// Fits the quasi-polynomial the way the worked example solves its linear
/// system of initial conditions, but per residue class: the period and
/// degree bound come from the denominator's cyclotomic factorization, and
/// each residue's constituent is solved exactly from degree_bound + 1
/// Hilbert values on that class (a small Vandermonde system), then verified
/// on two further values. Verification failure throws: a wrong period or
/// degree bound must never be silently accepted.
///
/// valid_from is 0 as long as deg num < deg den; otherwise the series has a
/// polynomial part reaching degree deg num - deg den, so the fit starts one
/// past it.
QuasiPolynomial fit(HilbertOracle& oracle, const RationalFunction& rf,
                    const CyclotomicFactorization& fac);

QuasiPolynomial fit(const DegreeVector& d, const RationalFunction& rf,
                    const CyclotomicFactorization& fac);

/// Core of fit() with the period forced, used to cross-check that fitting
/// with a multiple of the period folds back onto the same constituents.
QuasiPolynomial fit_with_period(HilbertOracle& oracle, long period,
                                std::optional<int> degree_bound, int valid_from);

}  // namespace hilbpoly
