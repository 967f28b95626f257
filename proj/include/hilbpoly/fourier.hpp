#pragma once

#include "hilbpoly/cyclo_field.hpp"
#include "hilbpoly/quasipoly.hpp"

namespace hilbpoly {

/// One collected term c * n^power * cos(2*pi*frequency*n/period) +
/// s * n^power * sin(...). The sine part is identically absent (zero) for
/// frequency 0 and period/2.
struct FourierTerm {
    int power;
    long frequency;  // 0 .. period/2
    CyclotomicReal cos_coeff;
    CyclotomicReal sin_coeff;
};

/// The quasi-polynomial in the basis n^t * cos(2*pi*j*n/L),
/// n^t * sin(2*pi*j*n/L) -- the shape the paper's outputs are printed in.
/// Coefficients live in the real subfield of Q(zeta_field_order) with
/// field_order = lcm(period, 4); the factor 4 keeps i in the field so sine
/// coefficients are representable.
struct FourierForm {
    long period = 1;
    std::shared_ptr<const CycloField> field;
    std::vector<FourierTerm> terms;  // power descending, frequency ascending
};

/// Exact discrete Fourier expansion of each coefficient sequence
/// r -> [n^t] constituent_r over Z/period; conjugate frequencies are paired
/// into real cos/sin terms and exactly-zero terms are dropped.
FourierForm to_fourier(const QuasiPolynomial& qp);

/// Evaluates the form at an integer (exact root-of-unity arithmetic). The
/// result of a form built by to_fourier is always rational.
Rational evaluate_fourier(const FourierForm& form, long n);

}  // namespace hilbpoly
