#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hyperjac/ext_field.hpp"
#include "hyperjac/poly.hpp"
#include "hyperjac/prime_field.hpp"

namespace hyperjac::ff {

// Dense polynomial over F_p, ascending coefficients, normalized; the zero
// polynomial is the empty vector.
using FpPoly = std::vector<u64>;

// Sorted (degree, count) pairs from distinct-degree factorization.
struct FactorDegreeProfile {
    std::vector<std::pair<u32, u32>> entries;
    u32 degree_sum() const {
        u32 s = 0;
        for (auto [d, m] : entries) s += d * m;
        return s;
    }
};

// deg(0) is an error by design; use p.size() directly where the zero
// polynomial is a legitimate intermediate.
int degree(const FpPoly& f);

FpPoly poly_add(const PrimeField& F, const FpPoly& a, const FpPoly& b);
FpPoly poly_sub(const PrimeField& F, const FpPoly& a, const FpPoly& b);
FpPoly poly_mul(const PrimeField& F, const FpPoly& a, const FpPoly& b);
FpPoly poly_gcd(const PrimeField& F, const FpPoly& a, const FpPoly& b);
FpPoly poly_derivative(const PrimeField& F, const FpPoly& a);
std::pair<FpPoly, FpPoly> poly_divrem(const PrimeField& F, const FpPoly& a, const FpPoly& b);
u64 poly_eval(const PrimeField& F, const FpPoly& a, u64 x);
FpPoly poly_pow(const PrimeField& F, const FpPoly& a, u64 e);

bool is_separable(const PrimeField& F, const FpPoly& f);

// x^{p^d} mod f by repeated-squaring modular exponentiation, iterated d times.
FpPoly frobenius_power(const PrimeField& F, const FpPoly& f, u32 d);

FactorDegreeProfile distinct_degree_profile(const PrimeField& F, const FpPoly& f);

u64 resultant(const PrimeField& F, const FpPoly& a, const FpPoly& b);
u64 discriminant(const PrimeField& F, const FpPoly& f);

// Validates residues and normalization; entry point for literals in tests.
FpPoly make_poly(const PrimeField& F, std::vector<i64> coeffs);

std::string poly_to_string(const PrimeField& F, const FpPoly& f, char var = 'x');

}  // namespace hyperjac::ff
