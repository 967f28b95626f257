#include "hilbpoly/reconstruct.hpp"

#include <string>
#include <vector>

namespace hilbpoly {

namespace {

// Berlekamp-Massey over Q: returns the connection polynomial C (C(0) = 1)
// and LFSR length L such that s_n = -sum_{j>=1} C_j s_{n-j} for all n >= L.
std::pair<Poly, int> minimal_recurrence(const std::vector<Rational>& s) {
    std::vector<Rational> C{Rational(1)}, B{Rational(1)};
    int L = 0, m = 1;
    Rational b(1);
    for (size_t i = 0; i < s.size(); ++i) {
        Rational delta = s[i];
        for (size_t j = 1; j < C.size(); ++j) delta += C[j] * s[i - j];
        if (delta == 0) {
            ++m;
            continue;
        }
        const Rational coef = delta / b;
        if (2 * L <= static_cast<int>(i)) {
            std::vector<Rational> T = C;
            if (C.size() < B.size() + m) C.resize(B.size() + m, Rational(0));
            for (size_t j = 0; j < B.size(); ++j) C[j + m] -= coef * B[j];
            L = static_cast<int>(i) + 1 - L;
            B = std::move(T);
            b = delta;
            m = 1;
        } else {
            if (C.size() < B.size() + m) C.resize(B.size() + m, Rational(0));
            for (size_t j = 0; j < B.size(); ++j) C[j + m] -= coef * B[j];
            ++m;
        }
    }
    return {Poly(std::move(C)), L};
}

}  // namespace

int default_term_budget(const DegreeVector& d) {
    const int v = d.ambient_dim();
    return 4 * v * v;
}

RationalFunction reconstruct(HilbertOracle& oracle, int term_budget,
                             const ReconstructOptions& opts) {
    if (term_budget < 4) throw Error("reconstruct: term_budget must be >= 4");
    const int g = std::max(1, opts.guard);
    int T = term_budget;
    int last_num_deg = -1, last_den_deg = -1;
    while (T <= opts.budget_cap) {
        oracle.ensure(T + g - 1);
        std::vector<Rational> s;
        s.reserve(T);
        for (int n = 0; n < T; ++n) s.emplace_back(oracle.hilbert(n));

        auto [conn, L] = minimal_recurrence(s);
        // The recurrence is only trustworthy if the budget saw it stabilize:
        // an LFSR of length L needs 2L terms plus the guard.
        if (2 * L + g <= T) {
            // numerator = (den * series) truncated below z^L
            Poly den = conn;
            std::vector<Rational> nc(std::max(L, 1), Rational(0));
            for (int n = 0; n < static_cast<int>(nc.size()); ++n) {
                Rational acc(0);
                for (int j = 0; j <= std::min<int>(n, den.degree().value()); ++j)
                    acc += den.coeff(j) * s[n - j];
                nc[n] = acc;
            }
            RationalFunction rf = RationalFunction::normalized(Poly(std::move(nc)),
                                                               std::move(den));
            last_num_deg = rf.num.is_zero() ? 0 : rf.num.degree().value();
            last_den_deg = rf.den.degree().value();
            const SeriesPrefix check = series_of_ratfun(rf.num, rf.den, T + g);
            bool ok = true;
            for (int n = 0; n < T + g && ok; ++n) {
                if (check.coeffs[n] != oracle.hilbert(n)) ok = false;
            }
            if (ok) return rf;
        }
        T *= 2;
    }
    throw Error("reconstruct(" + oracle.degree_vector().str() +
                "): no stable rational form within " +
                std::to_string(opts.budget_cap) +
                " terms; last attempted degrees num=" +
                std::to_string(last_num_deg) +
                ", den=" + std::to_string(last_den_deg));
}

RationalFunction reconstruct(const DegreeVector& d, int term_budget,
                             const ReconstructOptions& opts) {
    HilbertOracle oracle(d);
    return reconstruct(oracle, term_budget, opts);
}

}  // namespace hilbpoly
