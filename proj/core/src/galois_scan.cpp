#include "hyperjac/galois_scan.hpp"

#include <algorithm>

#include "hyperjac/poly.hpp"

namespace hyperjac::galois {

namespace {

using ff::BivarPoly;
using ff::ExtField;
using ff::FpPoly;
using ff::PolyOf;
using ff::PrimeField;
namespace pk = ff::pk;

template <class K>
CycleType cycle_type_of(const K& E, PolyOf<K> f) {
    CycleType c;
    for (const auto& [d, cnt] : pk::distinct_degree_profile_impl(E, std::move(f)))
        for (u32 i = 0; i < cnt; ++i) c.parts.push_back(d);
    std::sort(c.parts.begin(), c.parts.end());
    return c;
}

// One record: degree drop (lc vanished), ramified (not squarefree), or the
// Frobenius cycle type of the specialized polynomial.
template <class K>
SpecializationRecord classify(const K& E, u32 k, u64 idx, PolyOf<K> fk, int n) {
    SpecializationRecord r;
    r.z0_index = idx;
    r.k = k;
    if (pk::deg<K>(fk) < n) {
        r.outcome = SpecOutcome::DegreeDrop;
        return r;
    }
    auto fp = pk::derivative(E, fk);
    if (fp.empty() || pk::deg<K>(pk::gcd_monic(E, fk, fp)) != 0) {
        r.outcome = SpecOutcome::Ramified;
        return r;
    }
    r.outcome = SpecOutcome::HasCycleType;
    r.cycle = cycle_type_of(E, std::move(fk));
    return r;
}

}  // namespace

const char* status_name(GaloisStatus s) {
    switch (s) {
        case GaloisStatus::SnCertified: return "SnCertified";
        case GaloisStatus::AnCertified: return "AnCertified";
        case GaloisStatus::Inconclusive: return "Inconclusive";
    }
    return "?";
}

CycleType cycle_type(const PrimeField& F, const FpPoly& f) {
    return CycleType{[&] {
        std::vector<u32> parts;
        for (const auto& [d, cnt] : ff::distinct_degree_profile(F, f).entries)
            for (u32 i = 0; i < cnt; ++i) parts.push_back(d);
        std::sort(parts.begin(), parts.end());
        return parts;
    }()};
}

std::vector<SpecializationRecord> sample_specializations(const BivarPoly& F, u64 count,
                                                         u64 seed) {
    if (count < 1) throw Error(ErrorKind::Value, "sampler needs count >= 1");
    if (F.is_zero()) throw Error(ErrorKind::Value, "cannot sample the zero family");
    const auto& P = F.field();
    const u64 p = P.p();
    const int n = F.deg_x();

    std::vector<SpecializationRecord> out;
    out.reserve(count);
    if (count >= p) {
        for (u64 z0 = 0; z0 < p; ++z0)
            out.push_back(classify(P, 1, z0, F.specialize(z0), n));
        const u64 extra = count - p;
        if (extra > 0) {
            const ExtField E2 = ff::make_ext_field(p, 2);
            const u64 q2 = p * p;
            for (u64 i = 0; i < extra; ++i) {
                auto rng = task_stream(seed, i);
                const u64 idx = rng.below(q2);
                out.push_back(classify(E2, 2, idx, F.specialize_ext(E2, E2.element_from_index(idx)), n));
            }
        }
    } else {
        for (u64 i = 0; i < count; ++i) {
            auto rng = task_stream(seed, i);
            const u64 idx = rng.below(p);
            out.push_back(classify(P, 1, idx, F.specialize(idx), n));
        }
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const SpecializationRecord& a, const SpecializationRecord& b) {
                         return a.k != b.k ? a.k < b.k : a.z0_index < b.z0_index;
                     });
    return out;
}

std::optional<IrrWitness> irreducibility_witness(const BivarPoly& F,
                                                 const std::vector<SpecializationRecord>& records) {
    if (F.is_zero() || !F.monic_in_x())
        throw Error(ErrorKind::NotMonic, "irreducibility witness needs a family monic in x");
    const u32 n = static_cast<u32>(F.deg_x());
    for (const auto& r : records) {
        if (r.outcome != SpecOutcome::HasCycleType) continue;
        if (r.cycle.parts.size() == 1 && r.cycle.parts[0] == n)
            return IrrWitness{r.z0_index, r.k};
    }
    return std::nullopt;
}

std::optional<JordanWitness> jordan_contains_An(const std::vector<SpecializationRecord>& records,
                                                u32 n) {
    if (n < 8) throw Error(ErrorKind::Value, "Jordan criterion applied below degree 8");
    for (const auto& r : records) {
        if (r.outcome != SpecOutcome::HasCycleType) continue;
        for (u32 m : r.cycle.parts)
            if (2 * static_cast<u64>(m) > n && m < n - 2 && ff::is_prime_u32(m))
                return JordanWitness{m, r.z0_index, r.k};
    }
    return std::nullopt;
}

bool disc_square_in_function_field(const PrimeField& F, const FpPoly& D) {
    if (D.empty()) throw Error(ErrorKind::Value, "square test on the zero polynomial");
    if (!F.is_square(D.back())) return false;
    for (const auto& [fac, mult] : pk::squarefree_decomposition(F, D))
        if (mult % 2 != 0) return false;
    return true;
}

GaloisVerdict decide_galois(const BivarPoly& F, u64 budget, u64 seed) {
    if (F.is_zero() || !F.monic_in_x())
        throw Error(ErrorKind::NotMonic, "decide_galois needs a family monic in x");
    if (F.deg_x() < 8) throw Error(ErrorKind::Value, "decide_galois needs deg_x >= 8");
    const u32 n = static_cast<u32>(F.deg_x());

    GaloisVerdict v;
    std::vector<SpecializationRecord> records;
    if (budget >= 1) records = sample_specializations(F, budget, seed);
    v.stats.samples = records.size();
    for (const auto& r : records) {
        if (r.outcome == SpecOutcome::Ramified) ++v.stats.ramified;
        if (r.outcome == SpecOutcome::DegreeDrop) ++v.stats.degree_drop;
    }
    v.irreducible = irreducibility_witness(F, records);
    v.jordan = jordan_contains_An(records, n);
    const FpPoly D = ff::disc_z(F);
    // disc_z == 0 means the family is inseparable; no squarefree
    // specializations exist and the verdict stays Inconclusive.
    v.disc_square = D.empty() ? false : disc_square_in_function_field(F.field(), D);
    if (v.irreducible && v.jordan)
        v.status = v.disc_square ? GaloisStatus::AnCertified : GaloisStatus::SnCertified;
    return v;
}

bool morse_check(const PrimeField& F, const FpPoly& h) {
    const int n = pk::deg<PrimeField>(h);
    if (n < 2) throw Error(ErrorKind::Value, "morse_check needs deg h >= 2");
    const u64 p = F.p();
    if (static_cast<u64>(n) % p == 0)
        throw Error(ErrorKind::CharDividesDegree, "morse_check requires p not dividing deg h");

    // p does not divide n, so deg h' = n-1 on the nose.
    const FpPoly hp = pk::derivative(F, h);
    if (pk::deg<PrimeField>(hp) >= 2 && pk::discriminant(F, hp) == 0) return false;

    // Critical values: R(T) = Res_x(h'(x), T - h(x)), recovered from point
    // evaluations.  lc(R) = lc(h')^n never vanishes, so deg R = n-1.
    const u64 npts = static_cast<u64>(n) * static_cast<u64>(n - 1) + 1;
    FpPoly R;
    if (npts <= p) {
        std::vector<u64> xs(npts), ys(npts);
        for (u64 t = 0; t < npts; ++t) {
            xs[t] = t;
            ys[t] = pk::resultant(F, hp, pk::sub(F, pk::constant(F, t), h));
        }
        R = pk::interpolate(F, xs, ys);
    } else {
        u32 k = 1;
        unsigned __int128 q = p;
        while (q < npts) {
            ++k;
            q *= p;
            if (k > 12)
                throw Error(ErrorKind::CapExceeded,
                            "morse_check interpolation needs an extension beyond degree 12");
        }
        const ExtField E = ff::make_ext_field(p, k);
        PolyOf<ExtField> hE(h.size()), hpE(hp.size());
        for (std::size_t i = 0; i < h.size(); ++i) hE[i] = E.embed(h[i]);
        for (std::size_t i = 0; i < hp.size(); ++i) hpE[i] = E.embed(hp[i]);
        std::vector<ExtField::Element> xs(npts), ys(npts);
        for (u64 t = 0; t < npts; ++t) {
            xs[t] = E.element_from_index(t);
            ys[t] = pk::resultant(E, hpE, pk::sub(E, pk::constant(E, xs[t]), hE));
        }
        const auto interp = pk::interpolate(E, xs, ys);
        R.assign(interp.size(), 0);
        for (std::size_t i = 0; i < interp.size(); ++i) {
            if (!E.is_base(interp[i]))
                throw Error(ErrorKind::Internal, "morse_check descent left a non-base coefficient");
            R[i] = E.to_base(interp[i]);
        }
        pk::normalize(F, R);
    }

    if (pk::deg<PrimeField>(R) < 1) return pk::deg<PrimeField>(R) == 0;
    const FpPoly Rp = pk::derivative(F, R);
    if (Rp.empty()) return false;
    return pk::deg<PrimeField>(pk::gcd_monic(F, R, Rp)) == 0;
}

}  // namespace hyperjac::galois
