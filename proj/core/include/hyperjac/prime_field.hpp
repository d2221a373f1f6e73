#pragma once

#include <cstdint>
#include <vector>

#include "hyperjac/errors.hpp"

namespace hyperjac::ff {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

// Deterministic Miller-Rabin; bases {2,7,61} decide primality for all n < 2^32.
bool is_prime_u32(u64 n);

// F_p, p an odd prime with 3 <= p < 2^31. Elements are canonical residues
// in [0, p); products fit in u64 without 128-bit help.
class PrimeField {
public:
    using Element = u64;

    explicit PrimeField(u64 p);

    u64 p() const { return p_; }
    u64 characteristic() const { return p_; }
    u32 ext_degree() const { return 1; }

    Element zero() const { return 0; }
    Element one() const { return 1; }
    bool is_zero(Element a) const { return a == 0; }
    bool eq(Element a, Element b) const { return a == b; }

    Element add(Element a, Element b) const {
        u64 s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
    Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
    Element mul(Element a, Element b) const { return (a * b) % p_; }
    Element pow(Element a, u64 e) const;
    Element inv(Element a) const;  // a != 0; Fermat

    // Reduce an arbitrary machine integer into [0, p).
    Element from_int(i64 v) const {
        i64 r = v % static_cast<i64>(p_);
        return r < 0 ? static_cast<u64>(r + static_cast<i64>(p_)) : static_cast<u64>(r);
    }
    Element from_u64(u64 v) const { return v % p_; }

    // Euler criterion; is_square(0) = true by convention (point counting
    // branches on the quadratic character separately).
    bool is_square(Element a) const;

    // x -> x^p is the identity on F_p; hook used by generic char-p kernels.
    Element pth_root(Element a) const { return a; }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
    u64 p_;
};

}  // namespace hyperjac::ff
