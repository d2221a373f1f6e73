#include "hyperjac/families.hpp"

#include "hyperjac/poly.hpp"

namespace hyperjac::families {

namespace {

using ff::BivarPoly;
using ff::ExtField;
using ff::FpPoly;
using ff::PrimeField;
namespace pk = ff::pk;

constexpr u64 kDegCap = 1'000'000;  // desk-scale guard on family degrees

// Decides disc_x(F) != 0 in F_p[z] without interpolating it.  For z0 with
// lc(z0) != 0 the discriminant commutes with specialization, and the formal
// discriminant has z-degree at most (2n-1) deg_z(F), so finding one nonzero
// value settles it and (bound+1) zero values force the zero polynomial.
template <class K>
bool separable_scan(const K& E, const BivarPoly& F, const FpPoly& lc, u64 need) {
    const auto& P = F.field();
    u64 valid = 0;
    for (u64 idx = 0; valid < need; ++idx) {
        if constexpr (std::is_same_v<K, PrimeField>) {
            const u64 z0 = idx;
            if (pk::eval(P, lc, z0) == 0) continue;
            if (pk::discriminant(P, F.specialize(z0)) != 0) return true;
        } else {
            const auto z0 = E.element_from_index(idx);
            ExtField::Element acc = E.zero();
            for (std::size_t j = lc.size(); j-- > 0;)
                acc = E.add(E.mul(acc, z0), E.embed(lc[j]));
            if (E.is_zero(acc)) continue;
            if (!E.is_zero(pk::discriminant(E, F.specialize_ext(E, z0)))) return true;
        }
        ++valid;
    }
    return false;
}

bool separable_in_x(const BivarPoly& F) {
    if (F.is_zero()) return false;
    const int n = F.deg_x();
    if (n < 1) return false;  // constant in x
    if (n == 1) return true;  // derivative is the leading coefficient, a unit
    const auto& P = F.field();
    const u64 p = P.p();
    const u64 dz = static_cast<u64>(F.deg_z());
    const u64 need = static_cast<u64>(2 * n - 1) * dz + 1;
    const u64 pool = need + dz;  // lc kills at most dz of the candidates
    const FpPoly& lc = F.coeff(static_cast<std::size_t>(n));

    if (pool <= p) return separable_scan(P, F, lc, need);
    u32 k = 1;
    unsigned __int128 q = p;
    while (q < pool) {
        ++k;
        q *= p;
        if (k > 12)
            throw Error(ErrorKind::CapExceeded,
                        "separability scan needs an extension beyond degree 12");
    }
    const ExtField E = ff::make_ext_field(p, k);
    return separable_scan(E, F, lc, need);
}

}  // namespace

const char* family_kind_name(FamilyKind k) {
    switch (k) {
        case FamilyKind::MoriOdd: return "MoriOdd";
        case FamilyKind::EvenTheorem: return "EvenTheorem";
        case FamilyKind::MorseShift: return "MorseShift";
        case FamilyKind::Abhyankar: return "Abhyankar";
    }
    return "?";
}

ff::BivarPoly build_family(const FamilySpec& spec) {
    const PrimeField& P = spec.field;
    const u64 p = P.p();
    switch (spec.kind) {
        case FamilyKind::MoriOdd: {
            if (spec.g < 2)
                throw Error(ErrorKind::InvariantViolation, "MoriOdd requires g >= 2");
            if (spec.g > kDegCap / 2)
                throw Error(ErrorKind::CapExceeded, "family degree beyond desk scale");
            if ((spec.g % p) * ((2 * spec.g + 1) % p) % p == 0)
                throw Error(ErrorKind::InvariantViolation, "p divides g(2g+1)");
            const u32 nn = static_cast<u32>(2 * spec.g + 1);
            return ff::make_bivar(P, {{nn, 0, 1}, {1, 0, -1}, {0, 1, 1}});
        }
        case FamilyKind::EvenTheorem: {
            if (spec.g < 4)
                throw Error(ErrorKind::InvariantViolation, "EvenTheorem requires g >= 4");
            if (spec.g > kDegCap / 2)
                throw Error(ErrorKind::CapExceeded, "family degree beyond desk scale");
            if (((spec.g + 1) % p) * ((2 * spec.g + 1) % p) % p == 0)
                throw Error(ErrorKind::InvariantViolation, "p divides (g+1)(2g+1)");
            const u32 nn = static_cast<u32>(2 * spec.g + 2);
            return ff::make_bivar(P, {{nn, 0, 1}, {1, 0, -1}, {0, 1, 1}});
        }
        case FamilyKind::MorseShift: {
            FpPoly h = spec.h;
            pk::normalize(P, h);
            const int dh = pk::deg<PrimeField>(h);
            if (dh < 2)
                throw Error(ErrorKind::InvariantViolation, "MorseShift requires deg h >= 2");
            if (static_cast<u64>(dh) % p == 0)
                throw Error(ErrorKind::InvariantViolation, "p divides deg h");
            if (!galois::morse_check(P, h))
                throw Error(ErrorKind::InvariantViolation, "h is not a Morse polynomial");
            std::vector<std::tuple<u32, u32, ff::i64>> terms;
            for (std::size_t i = 0; i < h.size(); ++i)
                if (h[i] != 0)
                    terms.push_back({static_cast<u32>(i), 0, static_cast<ff::i64>(h[i])});
            terms.push_back({0, 1, -1});
            return ff::make_bivar(P, terms);
        }
        case FamilyKind::Abhyankar: {
            bool power = false;
            if (spec.q >= p) {
                u64 v = spec.q;
                while (v % p == 0) v /= p;
                power = (v == 1);
            }
            if (!power)
                throw Error(ErrorKind::InvariantViolation, "q is not a positive power of p");
            if (spec.t <= spec.q)
                throw Error(ErrorKind::InvariantViolation, "t must exceed q");
            if (spec.t % p == 0)
                throw Error(ErrorKind::InvariantViolation, "p divides t");
            if (spec.t % 2 == 0)
                throw Error(ErrorKind::InvariantViolation, "t must be odd so n = q+t is even");
            if (spec.q + spec.t < 10)
                throw Error(ErrorKind::InvariantViolation, "q + t < 10");
            if (spec.q + spec.t > kDegCap)
                throw Error(ErrorKind::CapExceeded, "family degree beyond desk scale");
            const u32 nn = static_cast<u32>(spec.q + spec.t);
            const u32 tt = static_cast<u32>(spec.t);
            return ff::make_bivar(P, {{nn, 0, 1}, {1, tt, -1}, {0, 0, 1}});
        }
    }
    throw Error(ErrorKind::Value, "unknown family kind");
}

u32 genus_of(u32 n) {
    if (n < 3) throw Error(ErrorKind::Value, "genus_of needs n >= 3");
    return (n - 1) / 2;
}

HypothesisReport theorem_hypotheses(const ff::BivarPoly& F, u64 budget, u64 seed) {
    HypothesisReport r;
    r.p_odd = true;  // PrimeField admits odd primes only
    if (!F.is_zero()) {
        const int n = F.deg_x();
        r.n_even_ge_10 = n % 2 == 0 && n >= 10;
        r.separable = separable_in_x(F);
        if (F.monic_in_x() && n >= 8) {
            r.galois = galois::decide_galois(F, budget, seed);
            r.irreducible_evidence = r.galois.irreducible;
        }
    }
    const bool certified = r.galois.status == galois::GaloisStatus::SnCertified ||
                           r.galois.status == galois::GaloisStatus::AnCertified;
    r.theorem_applies = r.p_odd && r.n_even_ge_10 && r.separable &&
                        r.irreducible_evidence.has_value() && certified;
    return r;
}

}  // namespace hyperjac::families
