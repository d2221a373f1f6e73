#pragma once

// Dense univariate polynomial kernels, generic over a field object passed as
// the first argument (PrimeField or ExtField). Coefficients ascending, strict
// normalization: no trailing zeros, the zero polynomial is the empty vector.

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "hyperjac/errors.hpp"

namespace hyperjac::ff {

template <class K>
using PolyOf = std::vector<typename K::Element>;

namespace pk {  // poly kernels

// Raw degree: -1 for the zero polynomial. The public `degree` below throws
// instead, per the deg(0)-is-an-error convention.
template <class K>
int deg(const PolyOf<K>& a) {
    return static_cast<int>(a.size()) - 1;
}

template <class K>
void normalize(const K& F, PolyOf<K>& a) {
    while (!a.empty() && F.is_zero(a.back())) a.pop_back();
}

template <class K>
bool is_zero(const PolyOf<K>& a) {
    return a.empty();
}

template <class K>
bool equal(const K& F, const PolyOf<K>& a, const PolyOf<K>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!F.eq(a[i], b[i])) return false;
    return true;
}

template <class K>
PolyOf<K> constant(const K& F, typename K::Element c) {
    PolyOf<K> r;
    if (!F.is_zero(c)) r.push_back(c);
    return r;
}

template <class K>
PolyOf<K> monomial_x(const K& F) {
    return PolyOf<K>{F.zero(), F.one()};
}

template <class K>
PolyOf<K> add(const K& F, const PolyOf<K>& a, const PolyOf<K>& b) {
    PolyOf<K> r(std::max(a.size(), b.size()), F.zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.add(r[i], b[i]);
    normalize(F, r);
    return r;
}

template <class K>
PolyOf<K> sub(const K& F, const PolyOf<K>& a, const PolyOf<K>& b) {
    PolyOf<K> r(std::max(a.size(), b.size()), F.zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.sub(r[i], b[i]);
    normalize(F, r);
    return r;
}

template <class K>
PolyOf<K> negate(const K& F, const PolyOf<K>& a) {
    PolyOf<K> r = a;
    for (auto& c : r) c = F.neg(c);
    return r;
}

template <class K>
PolyOf<K> scale(const K& F, const PolyOf<K>& a, typename K::Element c) {
    if (F.is_zero(c)) return {};
    PolyOf<K> r = a;
    for (auto& x : r) x = F.mul(x, c);
    return r;
}

// Schoolbook product; every polynomial in this pipeline is dense and low degree.
template <class K>
PolyOf<K> mul(const K& F, const PolyOf<K>& a, const PolyOf<K>& b) {
    if (a.empty() || b.empty()) return {};
    PolyOf<K> r(a.size() + b.size() - 1, F.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (F.is_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
    normalize(F, r);
    return r;
}

template <class K>
PolyOf<K> pow_small(const K& F, PolyOf<K> base, std::uint64_t e) {
    PolyOf<K> r = constant(F, F.one());
    while (e) {
        if (e & 1) r = mul(F, r, base);
        e >>= 1;
        if (e) base = mul(F, base, base);
    }
    return r;
}

template <class K>
std::pair<PolyOf<K>, PolyOf<K>> divrem(const K& F, const PolyOf<K>& a, const PolyOf<K>& b) {
    if (b.empty()) throw Error(ErrorKind::Value, "polynomial division by zero");
    if (a.size() < b.size()) return {{}, a};
    PolyOf<K> r = a;
    PolyOf<K> q(a.size() - b.size() + 1, F.zero());
    const auto lc_inv = F.inv(b.back());
    for (int i = static_cast<int>(a.size() - b.size()); i >= 0; --i) {
        auto c = F.mul(r[i + b.size() - 1], lc_inv);
        if (F.is_zero(c)) continue;
        q[i] = c;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = F.sub(r[i + j], F.mul(c, b[j]));
    }
    normalize(F, q);
    normalize(F, r);
    return {std::move(q), std::move(r)};
}

template <class K>
PolyOf<K> rem(const K& F, const PolyOf<K>& a, const PolyOf<K>& b) {
    return divrem(F, a, b).second;
}

template <class K>
PolyOf<K> make_monic(const K& F, PolyOf<K> a) {
    if (a.empty() || F.eq(a.back(), F.one())) return a;
    auto inv = F.inv(a.back());
    for (auto& c : a) c = F.mul(c, inv);
    return a;
}

template <class K>
PolyOf<K> gcd_monic(const K& F, PolyOf<K> a, PolyOf<K> b) {
    if (a.empty() && b.empty())
        throw Error(ErrorKind::Value, "gcd of two zero polynomials");
    while (!b.empty()) {
        auto r = rem(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(F, std::move(a));
}

template <class K>
PolyOf<K> derivative(const K& F, const PolyOf<K>& a) {
    if (a.size() <= 1) return {};
    PolyOf<K> r(a.size() - 1, F.zero());
    const std::uint64_t p = F.characteristic();
    for (std::size_t i = 1; i < a.size(); ++i) {
        std::uint64_t m = i % p;
        if (m == 0) continue;
        typename K::Element c = a[i];
        // i * a_i computed by repeated doubling of the reduced multiplier.
        typename K::Element acc = F.zero();
        typename K::Element addend = c;
        std::uint64_t mm = m;
        while (mm) {
            if (mm & 1) acc = F.add(acc, addend);
            addend = F.add(addend, addend);
            mm >>= 1;
        }
        r[i - 1] = acc;
    }
    normalize(F, r);
    return r;
}

template <class K>
typename K::Element eval(const K& F, const PolyOf<K>& a, typename K::Element x) {
    typename K::Element acc = F.zero();
    for (std::size_t i = a.size(); i-- > 0;)
        acc = F.add(F.mul(acc, x), a[i]);
    return acc;
}

template <class K>
PolyOf<K> powmod(const K& F, PolyOf<K> base, std::uint64_t e, const PolyOf<K>& m) {
    base = rem(F, base, m);
    PolyOf<K> r = constant(F, F.one());
    r = rem(F, r, m);
    while (e) {
        if (e & 1) r = rem(F, mul(F, r, base), m);
        e >>= 1;
        if (e) base = rem(F, mul(F, base, base), m);
    }
    return r;
}

// Lagrange interpolation through (xs[i], ys[i]); xs pairwise distinct.
template <class K>
PolyOf<K> interpolate(const K& F, const std::vector<typename K::Element>& xs,
                      const std::vector<typename K::Element>& ys) {
    if (xs.size() != ys.size() || xs.empty())
        throw Error(ErrorKind::Value, "interpolation needs equal nonzero point counts");
    const std::size_t n = xs.size();
    // master = prod (X - xs[i]), built incrementally
    PolyOf<K> master = constant(F, F.one());
    for (std::size_t i = 0; i < n; ++i) {
        PolyOf<K> lin{F.neg(xs[i]), F.one()};
        master = mul(F, master, lin);
    }
    PolyOf<K> acc;
    for (std::size_t i = 0; i < n; ++i) {
        PolyOf<K> lin{F.neg(xs[i]), F.one()};
        auto [qi, ri] = divrem(F, master, lin);
        if (!ri.empty()) throw Error(ErrorKind::Internal, "interpolation master not divisible");
        auto denom = eval(F, qi, xs[i]);
        if (F.is_zero(denom)) throw Error(ErrorKind::Value, "interpolation nodes not distinct");
        auto w = F.mul(ys[i], F.inv(denom));
        acc = add(F, acc, scale(F, qi, w));
    }
    return acc;
}

// Res(a,b) by the Euclidean recurrence:
//   Res(A,B) = (-1)^{degA*degB} * lc(B)^{degA-degR} * Res(B,R),  R = A mod B
//   Res(A,c) = c^{degA};  R = 0 with deg B > 0  ->  0.
template <class K>
typename K::Element resultant(const K& F, PolyOf<K> a, PolyOf<K> b) {
    if (a.empty() || b.empty())
        throw Error(ErrorKind::Value, "resultant of a zero polynomial");
    typename K::Element acc = F.one();
    bool negate_acc = false;
    while (deg<K>(b) > 0) {
        auto r = rem(F, a, b);
        const int da = deg<K>(a), db = deg<K>(b), dr = deg<K>(r);
        if (r.empty()) return F.zero();
        if ((da & 1) && (db & 1)) negate_acc = !negate_acc;
        acc = F.mul(acc, F.pow(b.back(), static_cast<std::uint64_t>(da - dr)));
        a = std::move(b);
        b = std::move(r);
    }
    // b is a nonzero constant here (the r.empty() branch above caught zero).
    acc = F.mul(acc, F.pow(b[0], static_cast<std::uint64_t>(deg<K>(a))));
    return negate_acc ? F.neg(acc) : acc;
}

// disc(f) = (-1)^{n(n-1)/2} * Res(f, f') / lc(f); zero when f' == 0.
template <class K>
typename K::Element discriminant(const K& F, const PolyOf<K>& f) {
    if (deg<K>(f) < 2)
        throw Error(ErrorKind::Value, "discriminant needs degree >= 2");
    auto fp = derivative(F, f);
    if (fp.empty()) return F.zero();
    auto res = resultant(F, f, fp);
    const std::uint64_t n = static_cast<std::uint64_t>(deg<K>(f));
    auto d = F.mul(res, F.inv(f.back()));
    if ((n * (n - 1) / 2) % 2 == 1) d = F.neg(d);
    return d;
}

// f = g^p componentwise: over F_{p^k} each coefficient needs its own p-th
// root (inverse Frobenius), supplied by the field.
template <class K>
PolyOf<K> pth_root(const K& F, const PolyOf<K>& f) {
    const std::uint64_t p = F.characteristic();
    if (f.empty()) return {};
    if ((f.size() - 1) % p != 0)
        throw Error(ErrorKind::Value, "polynomial is not a p-th power");
    PolyOf<K> r((f.size() - 1) / p + 1, F.zero());
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i % p == 0) {
            r[i / p] = F.pth_root(f[i]);
        } else if (!F.is_zero(f[i])) {
            throw Error(ErrorKind::Value, "polynomial is not a p-th power");
        }
    }
    normalize(F, r);
    return r;
}

// Char-p squarefree decomposition of a monic f: returns (factor, multiplicity)
// with factors squarefree, pairwise coprime, prod factor^mult = f.
template <class K>
std::vector<std::pair<PolyOf<K>, std::uint64_t>> squarefree_decomposition(
    const K& F, PolyOf<K> f) {
    std::vector<std::pair<PolyOf<K>, std::uint64_t>> out;
    f = make_monic(F, std::move(f));
    if (deg<K>(f) < 1) return out;
    auto fp = derivative(F, f);
    if (fp.empty()) {
        auto g = pth_root(F, f);
        for (auto& [fac, m] : squarefree_decomposition(F, g))
            out.emplace_back(std::move(fac), m * F.characteristic());
        return out;
    }
    auto c = gcd_monic(F, f, fp);
    auto w = divrem(F, f, c).first;
    std::uint64_t i = 1;
    while (deg<K>(w) > 0) {
        auto y = gcd_monic(F, w, c);
        auto z = divrem(F, w, y).first;
        if (deg<K>(z) > 0) out.emplace_back(std::move(z), i);
        w = std::move(y);
        c = divrem(F, c, w).first;
        ++i;
    }
    if (deg<K>(c) > 0) {
        auto g = pth_root(F, c);
        for (auto& [fac, m] : squarefree_decomposition(F, g))
            out.emplace_back(std::move(fac), m * F.characteristic());
    }
    return out;
}

// Distinct-degree factor profile of a squarefree f over F_{p^k}: sorted
// (degree d, count) pairs. The Frobenius power x^{q^d} is maintained by k
// successive raises to the p-th power, so q = p^k never needs to fit a word.
template <class K>
std::vector<std::pair<std::uint32_t, std::uint32_t>> distinct_degree_profile_impl(
    const K& F, PolyOf<K> f) {
    const std::uint64_t p = F.characteristic();
    const std::uint32_t k = F.ext_degree();
    f = make_monic(F, std::move(f));
    std::vector<std::pair<std::uint32_t, std::uint32_t>> profile;
    if (deg<K>(f) < 1) return profile;
    PolyOf<K> h = rem(F, monomial_x(F), f);
    std::uint32_t d = 0;
    PolyOf<K> g = f;
    while (deg<K>(g) > 0) {
        ++d;
        if (2 * d > static_cast<std::uint32_t>(deg<K>(g))) {
            profile.emplace_back(static_cast<std::uint32_t>(deg<K>(g)), 1);
            break;
        }
        for (std::uint32_t i = 0; i < k; ++i) h = powmod(F, h, p, g);
        auto hx = sub(F, h, monomial_x(F));
        auto gd = hx.empty() ? g : gcd_monic(F, g, hx);
        if (deg<K>(gd) > 0) {
            profile.emplace_back(d, static_cast<std::uint32_t>(deg<K>(gd)) / d);
            g = divrem(F, g, gd).first;
            h = rem(F, h, g);
        }
    }
    return profile;
}

}  // namespace pk
}  // namespace hyperjac::ff
