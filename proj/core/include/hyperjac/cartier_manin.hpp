// Supersingularity refutation certificates for y^2 = f(x): Hasse-Witt
// (Cartier-Manin) matrices, p-rank, brute-force point counts, L-polynomials
// for small genus, and Newton polygon slopes.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hyperjac/prime_poly.hpp"

namespace hyperjac::curve {

using u32 = ff::u32;
using u64 = ff::u64;
using i64 = ff::i64;

// y^2 = f(x), f squarefree of degree n in {2g+1, 2g+2}, genus g = (n-1)/2
// rounded down.  Throws NotSquarefree when gcd(f, f') is nonconstant.
class HyperCurve {
public:
    HyperCurve(ff::PrimeField F, ff::FpPoly f);

    const ff::PrimeField& field() const { return F_; }
    const ff::FpPoly& f() const { return f_; }
    u32 n() const { return n_; }
    u32 genus() const { return g_; }

private:
    ff::PrimeField F_;
    ff::FpPoly f_;
    u32 n_ = 0;
    u32 g_ = 0;
};

// Entry (i, j), 1 <= i,j <= g, is the coefficient of x^{ip-j} in f^{(p-1)/2}.
struct HasseWittMatrix {
    u64 p = 0;
    u32 g = 0;
    std::vector<std::vector<u64>> m;  // row-major, entries in [0, p)
};

// Rough operation count of the binary powering behind hasse_witt; the CLI
// compares it against a work cap before dispatching.
u64 hasse_witt_work(u64 p, u32 n);

HasseWittMatrix hasse_witt(const HyperCurve& curve);

// p-rank = rank of the sigma-twisted product M M^(p) ... M^(p^{g-1}).  Over a
// prime base field the entrywise Frobenius is the identity, so this is
// rank(M^g) by Gaussian elimination; extension base fields would need the
// twisted product and are not supported here.
u32 p_rank(const HasseWittMatrix& M, const HyperCurve& curve);

// #C(F_{p^k}) by exhaustion: sum over x of 1 + chi(f(x)) with chi the
// quadratic character (chi(0) = 0), plus points at infinity (odd deg: 1;
// even deg: 2 when lc(f) is a square in F_{p^k}, else 0).
// Throws CapExceeded when p^k > 10^7 or k exceeds the extension-tower cap.
u64 count_points(const HyperCurve& curve, u32 k);

// L(T) coefficients a_0..a_{2g} from N_1..N_g via the power sums
// S_k = p^k + 1 - N_k and Newton's identities, completed by the functional
// equation a_{2g-i} = p^{g-i} a_i.  pre: g <= 4, counts.size() == g.
// Throws WeilBoundViolation when the counts are arithmetically inconsistent
// (non-integral Newton step or |a_i| beyond the Weil bound).
std::vector<i64> l_polynomial(const HyperCurve& curve, const std::vector<u64>& counts);

struct Slope {
    u32 num = 0;
    u32 den = 1;  // reduced, den >= 1
    bool operator==(const Slope&) const = default;
};
std::string slope_string(const Slope& s);

// Multiset of 2g Newton slopes: lower convex hull of (i, v_p(a_i)), ascending.
// Sum of slopes = g; the multiplicity of slope 0 is the p-rank.
std::vector<Slope> newton_slopes(const std::vector<i64>& l_coeffs, u64 p);

enum class Effort { HWOnly, FullL };

enum class SSVerdict {
    RefutedByPRank,            // p-rank > 0, sound unconditionally
    RefutedByNewtonSlope,      // some slope != 1/2, sound unconditionally
    ConsistentWithSupersingular,
    ConfirmedSupersingular     // g <= 2 and all slopes 1/2 only
};
const char* verdict_name(SSVerdict v);

struct SupersingularityCertificate {
    SSVerdict verdict = SSVerdict::ConsistentWithSupersingular;
    HasseWittMatrix matrix;
    u32 p_rank_value = 0;
    bool has_l = false;
    std::vector<i64> l_coeffs;
    std::vector<Slope> slopes;
};

// HWOnly: p-rank > 0 -> RefutedByPRank, else ConsistentWithSupersingular.
// FullL additionally computes L(T) and slopes (counting caps propagate as
// CapExceeded): any slope != 1/2 -> RefutedByNewtonSlope; all 1/2 confirms
// supersingularity only when g <= 2, and stays Consistent for g >= 3 where
// the Newton polygon alone does not decide.
SupersingularityCertificate refute_supersingular(const HyperCurve& curve, Effort effort);

}  // namespace hyperjac::curve
