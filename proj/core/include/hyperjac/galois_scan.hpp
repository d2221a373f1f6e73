// Frobenius cycle-type evidence for Gal(f) over F_p(z): specialization
// sampling, the Jordan A_n certificate, the discriminant square test, and the
// Morse condition on one-parameter shifts h(x) - z.
#pragma once

#include <optional>
#include <vector>

#include "hyperjac/bivar_poly.hpp"
#include "hyperjac/splitmix.hpp"

namespace hyperjac::galois {

using ff::i64;
using ff::u32;
using ff::u64;

// Factor-degree multiset of a squarefree polynomial mod p: the cycle type of
// Frobenius acting on the roots.
struct CycleType {
    std::vector<u32> parts;  // ascending, sums to n

    u32 n() const {
        u32 s = 0;
        for (u32 p : parts) s += p;
        return s;
    }
    // sgn = (-1)^{n - #parts}
    bool odd_parity() const { return (n() - parts.size()) % 2 == 1; }
    bool operator==(const CycleType&) const = default;
};

enum class SpecOutcome { HasCycleType, Ramified, DegreeDrop };

struct SpecializationRecord {
    u64 z0_index = 0;  // enumeration index of z0 in F_{p^k}
    u32 k = 1;         // which field z0 lives in
    SpecOutcome outcome = SpecOutcome::Ramified;
    CycleType cycle;   // meaningful only when outcome == HasCycleType
};

struct JordanWitness {
    u64 m = 0;         // the prime cycle length, n/2 < m < n-2
    u64 z0_index = 0;
    u32 k = 1;
};

struct IrrWitness {
    u64 z0_index = 0;
    u32 k = 1;
};

enum class GaloisStatus { SnCertified, AnCertified, Inconclusive };
const char* status_name(GaloisStatus s);

struct SampleStats {
    u64 samples = 0;
    u64 ramified = 0;
    u64 degree_drop = 0;
};

struct GaloisVerdict {
    GaloisStatus status = GaloisStatus::Inconclusive;
    std::optional<JordanWitness> jordan;
    std::optional<IrrWitness> irreducible;
    bool disc_square = false;
    SampleStats stats;
};

// Printed alongside certified verdicts: both ingredients are classical but
// external to this code.
inline constexpr const char* kCertificationNote =
    "certified modulo the Jordan transitive-subgroup criterion and the "
    "Gauss-lemma specialization argument";

// pre: f squarefree over F_p (NotSquarefree otherwise).
CycleType cycle_type(const ff::PrimeField& F, const ff::FpPoly& f);

// Deterministic in (F, count, seed).  Exhausts z0 = 0..p-1 over F_p when
// count >= p and draws the remainder uniformly from F_{p^2}; below that,
// draws from F_p.  Each draw i uses the stream task_stream(seed, i), so the
// record set is independent of evaluation order; records come back sorted by
// (k, z0_index).  pre: count >= 1.
std::vector<SpecializationRecord> sample_specializations(const ff::BivarPoly& F, u64 count,
                                                         u64 seed);

// First record whose cycle type is [n]: an irreducible monic specialization
// certifies irreducibility over F_p(z).  pre: F monic in x (NotMonic).
std::optional<IrrWitness> irreducibility_witness(const ff::BivarPoly& F,
                                                 const std::vector<SpecializationRecord>& records);

// First record containing an m-cycle with m prime and n/2 < m < n-2; together
// with transitivity this forces the group to contain A_n.  pre: n >= 8.
std::optional<JordanWitness> jordan_contains_An(const std::vector<SpecializationRecord>& records,
                                                u32 n);

// D in F_p[z] is a square in F_p(z) iff every irreducible factor has even
// multiplicity and lc(D) is a square in F_p.  pre: D nonzero.
bool disc_square_in_function_field(const ff::PrimeField& F, const ff::FpPoly& D);

// Sn/An certification per the verdict invariants; Inconclusive otherwise,
// always carrying the sample statistics.  pre: F monic in x, deg_x >= 8.
GaloisVerdict decide_galois(const ff::BivarPoly& F, u64 budget, u64 seed);

// Morse condition for h: h' has deg h - 1 distinct roots and the critical
// values are pairwise distinct.  Decided exactly: disc(h') != 0 (vacuous when
// deg h' <= 1) and squarefreeness of R(T) = Res_x(h'(x), T - h(x)), with R
// recovered by resultant evaluation at n(n-1)+1 points of F_{p^k} (minimal k
// with p^k > n(n-1)) and interpolation.
// pre: deg h >= 2; throws CharDividesDegree when p | deg h.
bool morse_check(const ff::PrimeField& F, const ff::FpPoly& h);

}  // namespace hyperjac::galois
