#pragma once

#include "hilbpoly/rational_function.hpp"
#include "hilbpoly/weight_table.hpp"

namespace hilbpoly {

struct ReconstructOptions {
    int guard = 4;        // extra freshly computed coefficients to verify
    int budget_cap = 4096;
};

/// Recovers the Poincare series sum_n H(d, n) z^n as a rational function in
/// lowest terms with den(0) = 1.
///
/// Strategy: compute term_budget exact Hilbert values, find the minimal
/// linear recurrence they satisfy (Berlekamp-Massey over Q), and take the
/// connection polynomial as the denominator. The candidate must then
/// reproduce every computed coefficient plus `guard` fresh ones; on any
/// failure the budget doubles, up to budget_cap. The counting oracle is the
/// ground truth throughout, so a reconstruction that verifies is exact.
RationalFunction reconstruct(HilbertOracle& oracle, int term_budget,
                             const ReconstructOptions& opts = {});

RationalFunction reconstruct(const DegreeVector& d, int term_budget,
                             const ReconstructOptions& opts = {});

/// Default term budget used by the CLI: 4 * (sum (d_i + 1))^2, a generous
/// multiple of the expected denominator degree. Tunable via --terms later if
/// that ever proves too small; the doubling retry makes it safe regardless.
int default_term_budget(const DegreeVector& d);

}  // namespace hilbpoly
