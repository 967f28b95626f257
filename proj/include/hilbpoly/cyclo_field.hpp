#pragma once

#include <memory>
#include <vector>

#include "hilbpoly/poly.hpp"

namespace hilbpoly {

/// Q(zeta_m) as Q[z]/Phi_m(z), power-basis coordinates. This is how all
/// root-of-unity arithmetic stays exact: cos(2*pi*j*n/L) and sin(...) are
/// coordinates of roots of unity, never floating point. Requiring 4 | m
/// keeps i = zeta^{m/4} in the field, which the sine coefficients need.
class CycloField : public std::enable_shared_from_this<CycloField> {
  public:
    using Elem = std::vector<Rational>;  // length degree(), basis 1, z, ..., z^{phi(m)-1}

    static std::shared_ptr<const CycloField> make(long m);

    long order() const { return m_; }
    long degree() const { return deg_; }

    Elem zero() const { return Elem(deg_, Rational(0)); }
    Elem from_rational(const Rational& r) const;
    /// zeta^e, exponent taken mod m.
    Elem zeta_pow(long e) const;
    Elem imaginary_unit() const { return zeta_pow(m_ / 4); }

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem scale(const Rational& s, const Elem& a) const;
    /// The automorphism zeta -> zeta^{-1} (complex conjugation).
    Elem conjugate(const Elem& a) const;

    bool is_zero(const Elem& a) const;
    /// True when a = c * 1 for rational c (all higher coordinates vanish).
    bool is_rational(const Elem& a) const;

  private:
    explicit CycloField(long m);

    long m_;
    long deg_;
    Poly modulus_;                    // Phi_m
    std::vector<Elem> zeta_powers_;   // z^k mod Phi_m for k = 0..m-1
};

/// Element of the real subfield of Q(zeta_m): a field element pinned to be
/// invariant under conjugation. Holds the paper-style radical coefficients
/// (sqrt(5)/50 and friends) without committing to any nested-radical form.
class CyclotomicReal {
  public:
    CyclotomicReal(std::shared_ptr<const CycloField> field, CycloField::Elem coords);
    static CyclotomicReal rational(std::shared_ptr<const CycloField> field,
                                   const Rational& r);

    const std::shared_ptr<const CycloField>& field() const { return field_; }
    const CycloField::Elem& coords() const { return coords_; }

    bool is_zero() const { return field_->is_zero(coords_); }
    bool is_rational() const { return field_->is_rational(coords_); }
    /// Requires is_rational().
    Rational as_rational() const;

    CyclotomicReal operator+(const CyclotomicReal& o) const;
    CyclotomicReal operator-(const CyclotomicReal& o) const;
    CyclotomicReal operator*(const CyclotomicReal& o) const;
    bool operator==(const CyclotomicReal& o) const;

  private:
    std::shared_ptr<const CycloField> field_;
    CycloField::Elem coords_;
};

}  // namespace hilbpoly
