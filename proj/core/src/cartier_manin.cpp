#include "hyperjac/cartier_manin.hpp"

#include <numeric>

#include "hyperjac/ext_field.hpp"
#include "hyperjac/poly.hpp"

namespace hyperjac::curve {

namespace {

using ff::FpPoly;
using ff::PrimeField;
using ff::pk::deg;

constexpr u64 kPointCountCap = 10'000'000;  // p^k above this refuses
constexpr u32 kExtCap = 12;

u64 binom(u32 n, u32 k) {
    if (k > n) return 0;
    u64 r = 1;
    for (u32 i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

unsigned __int128 u128_pow(u64 b, u32 e) {
    unsigned __int128 r = 1;
    while (e--) r *= b;
    return r;
}

}  // namespace

HyperCurve::HyperCurve(PrimeField F, FpPoly f) : F_(F), f_(std::move(f)) {
    ff::pk::normalize(F_, f_);
    if (deg<PrimeField>(f_) < 3)
        throw Error(ErrorKind::Value, "hyperelliptic model needs deg f >= 3");
    auto fp = ff::pk::derivative(F_, f_);
    // f' == 0 means f is a p-th power, so certainly not squarefree here.
    if (fp.empty() || deg<PrimeField>(ff::pk::gcd_monic(F_, f_, fp)) != 0)
        throw Error(ErrorKind::NotSquarefree, "y^2 = f(x) needs squarefree f");
    n_ = static_cast<u32>(deg<PrimeField>(f_));
    g_ = (n_ - 1) / 2;
}

u64 hasse_witt_work(u64 p, u32 n) {
    const unsigned __int128 D = static_cast<unsigned __int128>(n) * ((p - 1) / 2);
    const unsigned __int128 w = D * D / 3 + 1;
    const unsigned __int128 cap = ~static_cast<u64>(0);
    return w > cap ? ~static_cast<u64>(0) : static_cast<u64>(w);
}

HasseWittMatrix hasse_witt(const HyperCurve& curve) {
    const auto& F = curve.field();
    const u64 p = F.p();
    const u32 g = curve.genus();
    const FpPoly h = ff::pk::pow_small(F, curve.f(), (p - 1) / 2);
    HasseWittMatrix M;
    M.p = p;
    M.g = g;
    M.m.assign(g, std::vector<u64>(g, 0));
    for (u32 i = 1; i <= g; ++i)
        for (u32 j = 1; j <= g; ++j) {
            const u64 e = static_cast<u64>(i) * p - j;
            M.m[i - 1][j - 1] = e < h.size() ? h[e] : 0;
        }
    return M;
}

u32 p_rank(const HasseWittMatrix& M, const HyperCurve& curve) {
    const auto& F = curve.field();
    if (M.p != F.p() || M.g != curve.genus())
        throw Error(ErrorKind::Value, "matrix does not belong to this curve");
    const u32 g = M.g;
    if (g == 0) return 0;
    // M^g over F_p; the sigma-twist is trivial over a prime field.
    auto mulmat = [&](const std::vector<std::vector<u64>>& A,
                      const std::vector<std::vector<u64>>& B) {
        std::vector<std::vector<u64>> C(g, std::vector<u64>(g, 0));
        for (u32 i = 0; i < g; ++i)
            for (u32 k = 0; k < g; ++k) {
                if (A[i][k] == 0) continue;
                for (u32 j = 0; j < g; ++j)
                    C[i][j] = (C[i][j] + A[i][k] * B[k][j]) % M.p;
            }
        return C;
    };
    auto P = M.m;
    for (u32 e = 1; e < g; ++e) P = mulmat(P, M.m);

    // Row reduction.
    u32 rank = 0;
    for (u32 col = 0; col < g && rank < g; ++col) {
        u32 pivot = rank;
        while (pivot < g && P[pivot][col] == 0) ++pivot;
        if (pivot == g) continue;
        std::swap(P[rank], P[pivot]);
        const u64 inv = F.inv(P[rank][col]);
        for (u32 j = col; j < g; ++j) P[rank][j] = F.mul(P[rank][j], inv);
        for (u32 r = 0; r < g; ++r) {
            if (r == rank || P[r][col] == 0) continue;
            const u64 c = P[r][col];
            for (u32 j = col; j < g; ++j)
                P[r][j] = F.sub(P[r][j], F.mul(c, P[rank][j]));
        }
        ++rank;
    }
    return rank;
}

u64 count_points(const HyperCurve& curve, u32 k) {
    if (k < 1) throw Error(ErrorKind::Value, "extension degree must be >= 1");
    if (k > kExtCap)
        throw Error(ErrorKind::CapExceeded, "point count beyond the extension-tower cap");
    const auto& F = curve.field();
    const u64 p = F.p();
    const unsigned __int128 q128 = u128_pow(p, k);
    if (q128 > kPointCountCap)
        throw Error(ErrorKind::CapExceeded, "point count beyond the p^k <= 10^7 cap");
    const u64 q = static_cast<u64>(q128);
    const auto& f = curve.f();
    const bool even_deg = curve.n() % 2 == 0;
    u64 N = 0;

    if (k == 1) {
        std::vector<std::uint8_t> sq(p, 0);
        for (u64 t = 0; t < p; ++t) sq[t * t % p] = 1;
        for (u64 x = 0; x < p; ++x) {
            const u64 v = ff::pk::eval(F, f, x);
            if (v == 0)
                N += 1;  // chi(0) = 0: the ramified x carries one point
            else if (sq[v])
                N += 2;
        }
        if (!even_deg)
            N += 1;
        else if (sq[f.back()])
            N += 2;
        return N;
    }

    const ff::ExtField E = ff::make_ext_field(p, k);
    std::vector<ff::ExtField::Element> fe(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) fe[i] = E.embed(f[i]);
    std::vector<std::uint8_t> sq(q, 0);
    for (u64 t = 0; t < q; ++t) {
        const auto e = E.element_from_index(t);
        sq[E.index_of(E.mul(e, e))] = 1;
    }
    for (u64 x = 0; x < q; ++x) {
        const auto v = ff::pk::eval(E, fe, E.element_from_index(x));
        if (E.is_zero(v))
            N += 1;
        else if (sq[E.index_of(v)])
            N += 2;
    }
    if (!even_deg)
        N += 1;
    else if (sq[E.index_of(E.embed(f.back()))])
        N += 2;
    return N;
}

std::vector<i64> l_polynomial(const HyperCurve& curve, const std::vector<u64>& counts) {
    using i128 = __int128;
    const u32 g = curve.genus();
    if (g > 4) throw Error(ErrorKind::Value, "l_polynomial supports genus <= 4");
    if (counts.size() != g)
        throw Error(ErrorKind::Value, "l_polynomial needs counts N_1..N_g");
    const u64 p = curve.field().p();

    // Power sums of the 2g Frobenius roots; genuine counts keep them inside
    // the Weil window |S_k| <= 2g p^{k/2}.
    std::vector<i128> S(g + 1, 0);
    for (u32 kk = 1; kk <= g; ++kk) {
        const i128 qk = static_cast<i128>(u128_pow(p, kk));
        S[kk] = qk + 1 - static_cast<i128>(counts[kk - 1]);
        if (S[kk] * S[kk] > static_cast<i128>(4) * g * g * qk)
            throw Error(ErrorKind::WeilBoundViolation,
                        "power sum S_" + std::to_string(kk) + " outside the Weil window");
    }

    std::vector<i128> e(g + 1, 0);
    e[0] = 1;
    for (u32 kk = 1; kk <= g; ++kk) {
        i128 acc = 0;
        for (u32 i = 1; i <= kk; ++i) {
            const i128 term = e[kk - i] * S[i];
            acc += (i % 2 == 1) ? term : -term;
        }
        if (acc % kk != 0)
            throw Error(ErrorKind::WeilBoundViolation,
                        "Newton identity produced a non-integer coefficient");
        e[kk] = acc / kk;
    }

    std::vector<i128> a(2 * g + 1, 0);
    a[0] = 1;
    for (u32 i = 1; i <= g; ++i) a[i] = (i % 2 == 1) ? -e[i] : e[i];
    for (u32 i = 0; i < g; ++i)
        a[2 * g - i] = static_cast<i128>(u128_pow(p, g - i)) * a[i];

    std::vector<i64> out(2 * g + 1);
    for (u32 i = 0; i <= 2 * g; ++i) {
        const i128 bound = static_cast<i128>(binom(2 * g, i)) * static_cast<i128>(binom(2 * g, i)) *
                           static_cast<i128>(u128_pow(p, i));
        if (a[i] * a[i] > bound)
            throw Error(ErrorKind::WeilBoundViolation,
                        "coefficient a_" + std::to_string(i) + " violates the Weil bound");
        const i128 lo = -(static_cast<i128>(1) << 62), hi = static_cast<i128>(1) << 62;
        if (a[i] < lo || a[i] > hi)
            throw Error(ErrorKind::WeilBoundViolation, "coefficient exceeds 64-bit range");
        out[i] = static_cast<i64>(a[i]);
    }
    return out;
}

std::string slope_string(const Slope& s) {
    if (s.num == 0) return "0";
    if (s.den == 1) return std::to_string(s.num);
    return std::to_string(s.num) + "/" + std::to_string(s.den);
}

std::vector<Slope> newton_slopes(const std::vector<i64>& l_coeffs, u64 p) {
    if (l_coeffs.size() < 3 || l_coeffs.size() % 2 == 0 || l_coeffs.front() != 1 ||
        l_coeffs.back() == 0)
        throw Error(ErrorKind::Value, "newton_slopes needs a valid L-polynomial");
    struct Pt {
        i64 x, y;
    };
    std::vector<Pt> pts;
    for (std::size_t i = 0; i < l_coeffs.size(); ++i) {
        i64 a = l_coeffs[i];
        if (a == 0) continue;
        if (a < 0) a = -a;
        i64 v = 0;
        while (a % static_cast<i64>(p) == 0) {
            a /= static_cast<i64>(p);
            ++v;
        }
        pts.push_back({static_cast<i64>(i), v});
    }
    // Lower convex hull, x already strictly increasing.
    std::vector<Pt> hull;
    for (const auto& q : pts) {
        while (hull.size() >= 2) {
            const Pt& a = hull[hull.size() - 2];
            const Pt& b = hull[hull.size() - 1];
            const i64 cross = (b.x - a.x) * (q.y - a.y) - (b.y - a.y) * (q.x - a.x);
            if (cross <= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(q);
    }
    std::vector<Slope> out;
    for (std::size_t i = 1; i < hull.size(); ++i) {
        const i64 dx = hull[i].x - hull[i - 1].x;
        const i64 dy = hull[i].y - hull[i - 1].y;
        const i64 d = std::gcd(dx, dy);
        const Slope s{static_cast<u32>(dy / d), static_cast<u32>(dx / d)};
        for (i64 t = 0; t < dx; ++t) out.push_back(s);
    }
    return out;
}

const char* verdict_name(SSVerdict v) {
    switch (v) {
        case SSVerdict::RefutedByPRank: return "RefutedByPRank";
        case SSVerdict::RefutedByNewtonSlope: return "RefutedByNewtonSlope";
        case SSVerdict::ConsistentWithSupersingular: return "ConsistentWithSupersingular";
        case SSVerdict::ConfirmedSupersingular: return "ConfirmedSupersingular";
    }
    return "?";
}

SupersingularityCertificate refute_supersingular(const HyperCurve& curve, Effort effort) {
    SupersingularityCertificate cert;
    cert.matrix = hasse_witt(curve);
    cert.p_rank_value = p_rank(cert.matrix, curve);
    if (effort == Effort::FullL) {
        std::vector<u64> counts;
        for (u32 k = 1; k <= curve.genus(); ++k) counts.push_back(count_points(curve, k));
        cert.l_coeffs = l_polynomial(curve, counts);
        cert.slopes = newton_slopes(cert.l_coeffs, curve.field().p());
        cert.has_l = true;
    }
    const Slope half{1, 2};
    if (cert.p_rank_value > 0) {
        cert.verdict = SSVerdict::RefutedByPRank;
    } else if (cert.has_l) {
        bool all_half = true;
        for (const auto& s : cert.slopes)
            if (!(s == half)) all_half = false;
        if (!all_half)
            cert.verdict = SSVerdict::RefutedByNewtonSlope;
        else
            cert.verdict = curve.genus() <= 2 ? SSVerdict::ConfirmedSupersingular
                                              : SSVerdict::ConsistentWithSupersingular;
    } else {
        cert.verdict = SSVerdict::ConsistentWithSupersingular;
    }
    return cert;
}

}  // namespace hyperjac::curve
