#pragma once

#include "hilbpoly/poly.hpp"

namespace hilbpoly {

/// Gaussian binomial coefficient
///   [d n]_q = (1-q^{d+1})(1-q^{d+2})...(1-q^{d+n}) / ((1-q)(1-q^2)...(1-q^n))
/// as an exact polynomial in q of degree d*n. Every intermediate division in
/// the running product is exact; a nonzero remainder throws, since it can
/// only mean broken arithmetic.
Poly gaussian_binomial(int d, int n);

/// Second route to the Hilbert function for a single binary form:
/// the coefficient of q^{nd/2} in (1-q) * [d n]_q, and 0 when n*d is odd.
Int hilbert_value_qbin(int d, int n);

}  // namespace hilbpoly
