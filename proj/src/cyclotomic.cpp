#include "hilbpoly/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <string>

namespace hilbpoly {

long euler_phi(long m) {
    long result = m;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

std::mutex g_cyclo_mutex;
std::map<long, Poly> g_cyclo_cache;

Poly cyclotomic_unlocked(long m) {
    auto it = g_cyclo_cache.find(m);
    if (it != g_cyclo_cache.end()) return it->second;
    // z^m - 1
    Poly p = Poly::monomial(static_cast<int>(m));
    p -= Poly::one();
    for (long d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        auto [q, r] = poly_divrem(p, cyclotomic_unlocked(d));
        if (!r.is_zero()) throw Error("cyclotomic: non-exact division");
        p = std::move(q);
    }
    g_cyclo_cache.emplace(m, p);
    return p;
}

}  // namespace

Poly cyclotomic(long m) {
    if (m < 1) throw Error("cyclotomic: order must be >= 1");
    std::lock_guard<std::mutex> lock(g_cyclo_mutex);
    return cyclotomic_unlocked(m);
}

std::optional<int> CyclotomicFactorization::multiplicity_of(long order) const {
    for (const auto& f : factors) {
        if (f.order == order) return f.multiplicity;
    }
    return std::nullopt;
}

Poly CyclotomicFactorization::product() const {
    Poly p = Poly::constant(unit);
    for (const auto& f : factors) {
        const Poly phi = cyclotomic(f.order);
        for (int i = 0; i < f.multiplicity; ++i) p = p * phi;
    }
    return p;
}

CyclotomicFactorization factor_denominator(const RationalFunction& rf) {
    if (rf.den.is_zero()) throw Error("factor_denominator: zero denominator");
    CyclotomicFactorization fac;
    Poly rem = rf.den;
    const int deg = rem.degree().value();
    const long mmax = std::max<long>(1, 2L * deg * deg);
    for (long m = 1; m <= mmax; ++m) {
        if (euler_phi(m) > deg) continue;
        int mult = 0;
        while (!rem.degree() || rem.degree().value() > 0) {
            auto [q, r] = poly_divrem(rem, cyclotomic(m));
            if (!r.is_zero()) break;
            rem = std::move(q);
            ++mult;
        }
        if (mult > 0) fac.factors.push_back({m, mult});
    }
    if (!rem.degree() || rem.degree().value() != 0)
        throw Error("factor_denominator: residual factor " + rem.str() +
                    " is not a product of cyclotomics; the denominator has a "
                    "root that is not a root of unity");
    fac.unit = rem.coeff(0);
    return fac;
}

PeriodInfo period_and_degree(const CyclotomicFactorization& fac) {
    PeriodInfo info{1, std::nullopt, 0};
    int maxmult = 0;
    for (const auto& f : fac.factors) {
        info.period = std::lcm(info.period, f.order);
        maxmult = std::max(maxmult, f.multiplicity);
        if (f.order == 1) info.pole_order_at_one = f.multiplicity;
    }
    if (maxmult > 0) info.degree_bound = maxmult - 1;
    return info;
}

}  // namespace hilbpoly
