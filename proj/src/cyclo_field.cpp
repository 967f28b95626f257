#include "hilbpoly/cyclo_field.hpp"

#include <string>

#include "hilbpoly/cyclotomic.hpp"

namespace hilbpoly {

CycloField::CycloField(long m) : m_(m) {
    if (m < 4 || m % 4 != 0)
        throw Error("CycloField: order must be a positive multiple of 4");
    modulus_ = cyclotomic(m);
    deg_ = modulus_.degree().value();
    // z^k mod Phi_m, k = 0..m-1: z^deg reduces via the modulus, higher
    // powers by one more multiplication each.
    zeta_powers_.reserve(m_);
    for (long k = 0; k < m_; ++k) {
        if (k < deg_) {
            Elem e(deg_, Rational(0));
            e[k] = 1;
            zeta_powers_.push_back(std::move(e));
        } else {
            // z * zeta_powers_[k-1], reduced
            const Elem& prev = zeta_powers_[k - 1];
            Elem e(deg_, Rational(0));
            for (long i = 0; i + 1 < deg_; ++i) e[i + 1] = prev[i];
            const Rational& top = prev[deg_ - 1];
            if (top != 0) {
                // z^deg = -(modulus minus leading term); Phi_m is monic
                for (long i = 0; i < deg_; ++i) e[i] -= top * modulus_.coeff(i);
            }
            zeta_powers_.push_back(std::move(e));
        }
    }
}

std::shared_ptr<const CycloField> CycloField::make(long m) {
    return std::shared_ptr<const CycloField>(new CycloField(m));
}

CycloField::Elem CycloField::from_rational(const Rational& r) const {
    Elem e = zero();
    e[0] = r;
    return e;
}

CycloField::Elem CycloField::zeta_pow(long e) const {
    long k = e % m_;
    if (k < 0) k += m_;
    return zeta_powers_[k];
}

CycloField::Elem CycloField::add(const Elem& a, const Elem& b) const {
    Elem r = a;
    for (long i = 0; i < deg_; ++i) r[i] += b[i];
    return r;
}

CycloField::Elem CycloField::sub(const Elem& a, const Elem& b) const {
    Elem r = a;
    for (long i = 0; i < deg_; ++i) r[i] -= b[i];
    return r;
}

CycloField::Elem CycloField::mul(const Elem& a, const Elem& b) const {
    // schoolbook product, then reduce the overflow powers with the
    // precomputed z^k tables (k < 2*deg - 1 <= m for cyclotomic moduli)
    std::vector<Rational> prod(2 * deg_ - 1, Rational(0));
    for (long i = 0; i < deg_; ++i) {
        if (a[i] == 0) continue;
        for (long j = 0; j < deg_; ++j) {
            if (b[j] != 0) prod[i + j] += a[i] * b[j];
        }
    }
    Elem r(prod.begin(), prod.begin() + deg_);
    // 2*deg - 2 < m whenever 4 | m, so the power table covers every overflow
    for (long k = deg_; k < 2 * deg_ - 1; ++k) {
        if (prod[k] == 0) continue;
        const Elem& red = zeta_powers_[k];
        for (long i = 0; i < deg_; ++i) r[i] += prod[k] * red[i];
    }
    return r;
}

CycloField::Elem CycloField::scale(const Rational& s, const Elem& a) const {
    Elem r = a;
    for (auto& c : r) c *= s;
    return r;
}

CycloField::Elem CycloField::conjugate(const Elem& a) const {
    Elem r = zero();
    for (long k = 0; k < deg_; ++k) {
        if (a[k] == 0) continue;
        const Elem& zk = zeta_powers_[(m_ - k) % m_];
        for (long i = 0; i < deg_; ++i) r[i] += a[k] * zk[i];
    }
    return r;
}

bool CycloField::is_zero(const Elem& a) const {
    for (const auto& c : a) {
        if (c != 0) return false;
    }
    return true;
}

bool CycloField::is_rational(const Elem& a) const {
    for (long i = 1; i < deg_; ++i) {
        if (a[i] != 0) return false;
    }
    return true;
}

CyclotomicReal::CyclotomicReal(std::shared_ptr<const CycloField> field,
                               CycloField::Elem coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
    if (static_cast<long>(coords_.size()) != field_->degree())
        throw Error("CyclotomicReal: coordinate size mismatch");
    if (field_->conjugate(coords_) != coords_)
        throw Error("CyclotomicReal: element is not conjugation-invariant");
}

CyclotomicReal CyclotomicReal::rational(std::shared_ptr<const CycloField> field,
                                        const Rational& r) {
    CycloField::Elem e = field->from_rational(r);
    return CyclotomicReal(std::move(field), std::move(e));
}

Rational CyclotomicReal::as_rational() const {
    if (!is_rational()) throw Error("CyclotomicReal: not a rational value");
    return coords_[0];
}

CyclotomicReal CyclotomicReal::operator+(const CyclotomicReal& o) const {
    return CyclotomicReal(field_, field_->add(coords_, o.coords_));
}

CyclotomicReal CyclotomicReal::operator-(const CyclotomicReal& o) const {
    return CyclotomicReal(field_, field_->sub(coords_, o.coords_));
}

CyclotomicReal CyclotomicReal::operator*(const CyclotomicReal& o) const {
    return CyclotomicReal(field_, field_->mul(coords_, o.coords_));
}

bool CyclotomicReal::operator==(const CyclotomicReal& o) const {
    return field_->order() == o.field_->order() && coords_ == o.coords_;
}

}  // namespace hilbpoly
