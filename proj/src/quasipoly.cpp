#include "hilbpoly/quasipoly.hpp"

#include <string>

#include "hilbpoly/linalg.hpp"

namespace hilbpoly {

Rational evaluate(const QuasiPolynomial& qp, long n) {
    if (n < 0) throw Error("evaluate: n must be >= 0");
    const Poly& p = qp.constituents[n % qp.period];
    return p(Rational(static_cast<long>(n)));
}

QuasiPolynomial fit_with_period(HilbertOracle& oracle, long period,
                                std::optional<int> degree_bound, int valid_from) {
    if (period < 1) throw Error("fit: period must be >= 1");
    QuasiPolynomial qp;
    qp.period = period;
    qp.valid_from = valid_from;
    qp.constituents.reserve(period);

    const int unknowns = degree_bound ? *degree_bound + 1 : 0;
    const int samples = unknowns + 2;  // two verification points per residue
    oracle.ensure(valid_from + static_cast<int>(period) * samples);

    for (long r = 0; r < period; ++r) {
        // first sample >= valid_from in this residue class
        long n1 = valid_from + (((r - valid_from) % period) + period) % period;
        std::vector<long> pts(samples);
        for (int j = 0; j < samples; ++j) pts[j] = n1 + j * period;

        Poly constituent;
        if (unknowns > 0) {
            Matrix mat(unknowns, std::vector<Rational>(unknowns));
            std::vector<Rational> rhs(unknowns);
            for (int i = 0; i < unknowns; ++i) {
                Rational pw(1);
                const Rational x(pts[i]);
                for (int t = 0; t < unknowns; ++t) {
                    mat[i][t] = pw;
                    pw *= x;
                }
                rhs[i] = Rational(oracle.hilbert(static_cast<int>(pts[i])));
            }
            constituent = Poly(solve_linear(mat, rhs));
        }
        for (int i = unknowns; i < samples; ++i) {
            const Rational expected(oracle.hilbert(static_cast<int>(pts[i])));
            if (constituent(Rational(pts[i])) != expected)
                throw Error("fit: residue " + std::to_string(r) +
                            " fails verification at n = " + std::to_string(pts[i]) +
                            "; wrong period or degree bound");
        }
        qp.constituents.push_back(std::move(constituent));
    }
    return qp;
}

QuasiPolynomial fit(HilbertOracle& oracle, const RationalFunction& rf,
                    const CyclotomicFactorization& fac) {
    const PeriodInfo info = period_and_degree(fac);
    const int num_deg = rf.num.is_zero() ? 0 : rf.num.degree().value();
    const int den_deg = rf.den.degree().value();
    const int valid_from = std::max(0, num_deg - den_deg + 1);
    return fit_with_period(oracle, info.period, info.degree_bound, valid_from);
}

QuasiPolynomial fit(const DegreeVector& d, const RationalFunction& rf,
                    const CyclotomicFactorization& fac) {
    HilbertOracle oracle(d);
    return fit(oracle, rf, fac);
}

}  // namespace hilbpoly
