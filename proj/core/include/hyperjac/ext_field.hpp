#pragma once

#include <cstdint>
#include <vector>

#include "hyperjac/prime_field.hpp"

namespace hyperjac::ff {

// F_{p^k} = F_p[x]/(modulus), modulus monic irreducible of degree k <= 12.
// Elements are fixed-length coefficient vectors (ascending, length k) so
// equality is plain vector comparison.
class ExtField {
public:
    using Element = std::vector<u64>;

    ExtField(PrimeField base, u32 k, std::vector<u64> modulus);

    const PrimeField& base() const { return base_; }
    u64 p() const { return base_.p(); }
    u64 characteristic() const { return base_.p(); }
    u32 k() const { return k_; }
    u32 ext_degree() const { return k_; }
    const std::vector<u64>& modulus() const { return modulus_; }

    Element zero() const { return Element(k_, 0); }
    Element one() const;
    bool is_zero(const Element& a) const;
    bool eq(const Element& a, const Element& b) const { return a == b; }

    Element add(const Element& a, const Element& b) const;
    Element sub(const Element& a, const Element& b) const;
    Element neg(const Element& a) const;
    Element mul(const Element& a, const Element& b) const;
    Element inv(const Element& a) const;  // extended Euclid against the modulus
    Element pow(Element a, u64 e) const;

    Element embed(u64 base_value) const;  // F_p -> F_{p^k}
    bool is_base(const Element& a) const;  // degree-0 representative
    u64 to_base(const Element& a) const;   // requires is_base

    // Elements enumerated by index sum c_i p^i; valid while the index fits u64.
    Element element_from_index(u64 idx) const;
    u64 index_of(const Element& a) const;

    Element frobenius(const Element& a) const { return pow(a, base_.p()); }
    Element pth_root(const Element& a) const;  // frobenius^{k-1}

    // Euler criterion through the norm: a^{(q-1)/2} = N(a)^{(p-1)/2} with
    // N(a) = a^{1+p+...+p^{k-1}} in F_p, so no q-sized exponent is needed.
    bool is_square(const Element& a) const;
    u64 norm(const Element& a) const;

private:
    PrimeField base_;
    u32 k_;
    std::vector<u64> modulus_;
};

// Deterministic modulus search: candidate index i maps to base-p digits
// c_0..c_{k-1}, candidate x^k + sum c_j x^j; the first candidate passing the
// Rabin irreducibility test (x^{p^k} = x mod m and gcd(x^{p^{k/l}} - x, m) = 1
// for every prime l | k) wins. Reports stay reproducible because the order is
// fixed.
ExtField make_ext_field(u64 p, u32 k);

}  // namespace hyperjac::ff
