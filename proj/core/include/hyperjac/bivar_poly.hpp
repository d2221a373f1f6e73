// Bivariate polynomials over a prime field, stored x-major.
#pragma once

#include <utility>
#include <vector>

#include "hyperjac/ext_field.hpp"
#include "hyperjac/prime_poly.hpp"

namespace hyperjac::ff {

// F(x, z) = sum_i cz[i](z) * x^i.  Invariants: every cz[i] is normalized
// (no trailing zero coefficients) and cz itself has no trailing zero
// polynomials.  The zero polynomial is cz == {}.
class BivarPoly {
public:
    BivarPoly(PrimeField field, std::vector<FpPoly> coeffs_in_z);

    const PrimeField& field() const { return F_; }
    const std::vector<FpPoly>& coeffs() const { return cz_; }
    // Coefficient of x^i as a polynomial in z (zero poly if i out of range).
    const FpPoly& coeff(std::size_t i) const;

    bool is_zero() const { return cz_.empty(); }
    // Both throw ValueError on the zero polynomial.
    int deg_x() const;
    int deg_z() const;
    bool monic_in_x() const;
    // True when no term involves z.
    bool constant_in_z() const;

    // F(x, z0) for z0 in the prime field.
    FpPoly specialize(u64 z0) const;
    // F(x, z0) for z0 in an extension of the same prime field.
    PolyOf<ExtField> specialize_ext(const ExtField& E, const ExtField::Element& z0) const;

    bool operator==(const BivarPoly& o) const { return F_.p() == o.F_.p() && cz_ == o.cz_; }

private:
    PrimeField F_;
    std::vector<FpPoly> cz_;
};

// Convenience builder from integer coefficients: entries are (i, j, c) for
// c * x^i * z^j, summed.
BivarPoly make_bivar(const PrimeField& F, const std::vector<std::tuple<u32, u32, i64>>& terms);

// View a univariate f(x) as a bivariate polynomial constant in z.
BivarPoly lift_univariate(const PrimeField& F, const FpPoly& fx);

// disc_x F(x, z) as a polynomial in z, computed by specialization at
// deg-bound + 1 points and Lagrange interpolation.  Requires F monic in x
// (NotMonic otherwise) with deg_x >= 2.  Monicity makes the discriminant of
// every specialization equal the formal discriminant evaluated there, so the
// interpolation is exact.
FpPoly disc_z(const BivarPoly& F);

}  // namespace hyperjac::ff
