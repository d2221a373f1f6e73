#include "hyperjac/ext_field.hpp"

#include "hyperjac/poly.hpp"

namespace hyperjac::ff {

namespace {

// Arithmetic on raw F_p[x] vectors for the modulus search and element ops.
using FpPolyV = std::vector<u64>;

}  // namespace

ExtField::ExtField(PrimeField base, u32 k, std::vector<u64> modulus)
    : base_(base), k_(k), modulus_(std::move(modulus)) {
    if (k < 1 || k > 12) throw Error(ErrorKind::Value, "extension degree must be in [1,12]");
    if (modulus_.size() != k + 1 || modulus_.back() != 1)
        throw Error(ErrorKind::Value, "modulus must be monic of degree k");
}

ExtField::Element ExtField::one() const {
    Element e(k_, 0);
    if (k_ >= 1) e[0] = 1;
    return e;
}

bool ExtField::is_zero(const Element& a) const {
    for (u64 c : a)
        if (c != 0) return false;
    return true;
}

ExtField::Element ExtField::add(const Element& a, const Element& b) const {
    Element r(k_);
    for (u32 i = 0; i < k_; ++i) r[i] = base_.add(a[i], b[i]);
    return r;
}

ExtField::Element ExtField::sub(const Element& a, const Element& b) const {
    Element r(k_);
    for (u32 i = 0; i < k_; ++i) r[i] = base_.sub(a[i], b[i]);
    return r;
}

ExtField::Element ExtField::neg(const Element& a) const {
    Element r(k_);
    for (u32 i = 0; i < k_; ++i) r[i] = base_.neg(a[i]);
    return r;
}

ExtField::Element ExtField::mul(const Element& a, const Element& b) const {
    // Schoolbook product then reduction by the monic modulus.
    std::vector<u64> prod(2 * k_ - 1, 0);
    for (u32 i = 0; i < k_; ++i) {
        if (a[i] == 0) continue;
        for (u32 j = 0; j < k_; ++j)
            prod[i + j] = base_.add(prod[i + j], base_.mul(a[i], b[j]));
    }
    for (u32 d = 2 * k_ - 2; d >= k_ && d < prod.size(); --d) {
        u64 c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (u32 j = 0; j < k_; ++j)
            prod[d - k_ + j] = base_.sub(prod[d - k_ + j], base_.mul(c, modulus_[j]));
    }
    prod.resize(k_);
    return prod;
}

ExtField::Element ExtField::inv(const Element& a) const {
    if (is_zero(a)) throw Error(ErrorKind::Value, "inverse of zero");
    // Extended Euclid for u with u*a = 1 mod modulus.
    PolyOf<PrimeField> r0 = modulus_;
    PolyOf<PrimeField> r1 = a;
    pk::normalize(base_, r1);
    PolyOf<PrimeField> s0;                     // coefficient of a in r0
    PolyOf<PrimeField> s1{base_.one()};        // coefficient of a in r1
    while (!r1.empty()) {
        auto [q, r2] = pk::divrem(base_, r0, r1);
        auto s2 = pk::sub(base_, s0, pk::mul(base_, q, s1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (pk::deg<PrimeField>(r0) != 0)
        throw Error(ErrorKind::Internal, "modulus not irreducible: non-unit gcd");
    auto u = pk::scale(base_, s0, base_.inv(r0[0]));
    u.resize(k_, 0);
    return u;
}

ExtField::Element ExtField::pow(Element a, u64 e) const {
    Element r = one();
    while (e) {
        if (e & 1) r = mul(r, a);
        e >>= 1;
        if (e) a = mul(a, a);
    }
    return r;
}

ExtField::Element ExtField::embed(u64 base_value) const {
    Element e(k_, 0);
    e[0] = base_value % base_.p();
    return e;
}

bool ExtField::is_base(const Element& a) const {
    for (u32 i = 1; i < k_; ++i)
        if (a[i] != 0) return false;
    return true;
}

u64 ExtField::to_base(const Element& a) const {
    if (!is_base(a)) throw Error(ErrorKind::Internal, "element not in the base field");
    return a[0];
}

ExtField::Element ExtField::element_from_index(u64 idx) const {
    Element e(k_, 0);
    const u64 p = base_.p();
    for (u32 i = 0; i < k_; ++i) {
        e[i] = idx % p;
        idx /= p;
    }
    if (idx != 0) throw Error(ErrorKind::Value, "element index out of range");
    return e;
}

u64 ExtField::index_of(const Element& a) const {
    u64 idx = 0;
    const u64 p = base_.p();
    for (u32 i = k_; i-- > 0;) idx = idx * p + a[i];
    return idx;
}

ExtField::Element ExtField::pth_root(const Element& a) const {
    Element r = a;
    for (u32 i = 0; i + 1 < k_; ++i) r = frobenius(r);
    return r;
}

u64 ExtField::norm(const Element& a) const {
    // N(a) = prod_{i<k} a^{p^i}
    Element acc = a;
    Element b = a;
    for (u32 i = 1; i < k_; ++i) {
        b = frobenius(b);
        acc = mul(acc, b);
    }
    return to_base(acc);
}

bool ExtField::is_square(const Element& a) const {
    if (is_zero(a)) return true;
    return base_.is_square(norm(a));
}

ExtField make_ext_field(u64 p, u32 k) {
    PrimeField base(p);
    if (k < 1 || k > 12) throw Error(ErrorKind::Value, "extension degree must be in [1,12]");

    std::vector<u32> prime_divisors;
    for (u32 l = 2, kk = k; l <= kk; ++l) {
        if (kk % l == 0) {
            prime_divisors.push_back(l);
            while (kk % l == 0) kk /= l;
        }
    }

    // Lexicographic candidate order; the search space p^k is only walked a
    // few steps in practice (an irreducible appears quickly).
    for (u64 idx = 0;; ++idx) {
        std::vector<u64> m(k + 1, 0);
        u64 t = idx;
        for (u32 j = 0; j < k; ++j) {
            m[j] = t % p;
            t /= p;
        }
        if (t != 0) throw Error(ErrorKind::Internal, "no irreducible modulus found");
        m[k] = 1;

        if (k == 1) return ExtField(base, k, std::move(m));

        PolyOf<PrimeField> mp = m;
        auto x = pk::monomial_x(base);
        // x^{p^k} mod m must equal x...
        auto h = pk::rem(base, x, mp);
        bool ok = true;
        PolyOf<PrimeField> frob_tower = h;
        std::vector<PolyOf<PrimeField>> powers;  // x^{p^i} mod m for i = 1..k
        for (u32 i = 0; i < k; ++i) {
            frob_tower = pk::powmod(base, frob_tower, p, mp);
            powers.push_back(frob_tower);
        }
        if (!pk::equal(base, powers[k - 1], pk::rem(base, x, mp))) ok = false;
        // ...and gcd(x^{p^{k/l}} - x, m) = 1 for each prime l | k.
        if (ok) {
            for (u32 l : prime_divisors) {
                auto diff = pk::sub(base, powers[k / l - 1], x);
                if (diff.empty()) { ok = false; break; }
                auto g = pk::gcd_monic(base, mp, diff);
                if (pk::deg<PrimeField>(g) != 0) { ok = false; break; }
            }
        }
        if (ok) return ExtField(base, k, std::move(m));
    }
}

}  // namespace hyperjac::ff
