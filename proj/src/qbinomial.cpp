#include "hilbpoly/qbinomial.hpp"

#include <string>

namespace hilbpoly {

namespace {

// 1 - q^k
Poly one_minus_qk(int k) {
    Poly p = Poly::one();
    p -= Poly::monomial(k);
    return p;
}

}  // namespace

Poly gaussian_binomial(int d, int n) {
    if (d < 0 || n < 0) throw Error("gaussian_binomial: negative argument");
    Poly p = Poly::one();
    for (int i = 1; i <= n; ++i) {
        // p stays the Gaussian binomial [d i]_q at each step, so the
        // division below is exact over the integers.
        auto [q, r] = poly_divrem(p * one_minus_qk(d + i), one_minus_qk(i));
        if (!r.is_zero())
            throw Error("gaussian_binomial(" + std::to_string(d) + ", " +
                        std::to_string(n) + "): non-exact division at step " +
                        std::to_string(i));
        p = std::move(q);
    }
    return p;
}

Int hilbert_value_qbin(int d, int n) {
    if (d < 1) throw Error("hilbert_value_qbin: d must be >= 1");
    if (n < 0) throw Error("hilbert_value_qbin: n must be >= 0");
    if ((static_cast<long>(d) * n) % 2 != 0) return 0;
    const int target = d * n / 2;
    const Poly g = gaussian_binomial(d, n);
    const Rational c = g.coeff(target) - g.coeff(target - 1);
    if (!is_integer(c))
        throw Error("hilbert_value_qbin: non-integer coefficient");
    return c.get_num();
}

}  // namespace hilbpoly
