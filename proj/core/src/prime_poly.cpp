#include "hyperjac/prime_poly.hpp"

namespace hyperjac::ff {

int degree(const FpPoly& f) {
    if (f.empty()) throw Error(ErrorKind::Value, "degree of the zero polynomial");
    return static_cast<int>(f.size()) - 1;
}

FpPoly poly_add(const PrimeField& F, const FpPoly& a, const FpPoly& b) {
    return pk::add(F, a, b);
}

FpPoly poly_sub(const PrimeField& F, const FpPoly& a, const FpPoly& b) {
    return pk::sub(F, a, b);
}

FpPoly poly_mul(const PrimeField& F, const FpPoly& a, const FpPoly& b) {
    return pk::mul(F, a, b);
}

FpPoly poly_gcd(const PrimeField& F, const FpPoly& a, const FpPoly& b) {
    return pk::gcd_monic(F, a, b);
}

FpPoly poly_derivative(const PrimeField& F, const FpPoly& a) {
    return pk::derivative(F, a);
}

std::pair<FpPoly, FpPoly> poly_divrem(const PrimeField& F, const FpPoly& a, const FpPoly& b) {
    return pk::divrem(F, a, b);
}

u64 poly_eval(const PrimeField& F, const FpPoly& a, u64 x) {
    return pk::eval(F, a, x);
}

FpPoly poly_pow(const PrimeField& F, const FpPoly& a, u64 e) {
    return pk::pow_small(F, a, e);
}

bool is_separable(const PrimeField& F, const FpPoly& f) {
    if (f.size() < 2) throw Error(ErrorKind::Value, "separability needs degree >= 1");
    auto fp = pk::derivative(F, f);
    if (fp.empty()) return false;
    return pk::deg<PrimeField>(pk::gcd_monic(F, f, fp)) == 0;
}

FpPoly frobenius_power(const PrimeField& F, const FpPoly& f, u32 d) {
    if (f.size() < 2) throw Error(ErrorKind::Value, "frobenius_power needs degree >= 1");
    FpPoly h = pk::rem(F, pk::monomial_x(F), f);
    for (u32 i = 0; i < d; ++i) h = pk::powmod(F, h, F.p(), f);
    return h;
}

FactorDegreeProfile distinct_degree_profile(const PrimeField& F, const FpPoly& f) {
    if (f.size() < 2) throw Error(ErrorKind::Value, "profile needs degree >= 1");
    auto fp = pk::derivative(F, f);
    if (fp.empty() || pk::deg<PrimeField>(pk::gcd_monic(F, f, fp)) != 0)
        throw Error(ErrorKind::NotSquarefree, "distinct_degree_profile requires squarefree input");
    return FactorDegreeProfile{pk::distinct_degree_profile_impl(F, f)};
}

u64 resultant(const PrimeField& F, const FpPoly& a, const FpPoly& b) {
    return pk::resultant(F, a, b);
}

u64 discriminant(const PrimeField& F, const FpPoly& f) {
    return pk::discriminant(F, f);
}

FpPoly make_poly(const PrimeField& F, std::vector<i64> coeffs) {
    FpPoly r(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) r[i] = F.from_int(coeffs[i]);
    pk::normalize(F, r);
    return r;
}

std::string poly_to_string(const PrimeField&, const FpPoly& f, char var) {
    if (f.empty()) return "0";
    std::string out;
    for (std::size_t i = f.size(); i-- > 0;) {
        u64 c = f[i];
        if (c == 0) continue;
        if (!out.empty()) out += " + ";
        if (i == 0) {
            out += std::to_string(c);
        } else {
            if (c != 1) {
                out += std::to_string(c);
                out += '*';
            }
            out += var;
            if (i > 1) {
                out += '^';
                out += std::to_string(i);
            }
        }
    }
    return out;
}

}  // namespace hyperjac::ff
