#include "hyperjac/prime_field.hpp"

namespace hyperjac::ff {

namespace {

u64 mulmod_u64(u64 a, u64 b, u64 m) {
    return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

u64 powmod_u64(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime_u32(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (u64 a : {2ull, 7ull, 61ull}) {
        if (a % n == 0) continue;  // n = 61: the base is no witness against itself
        u64 x = powmod_u64(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

PrimeField::PrimeField(u64 p) : p_(p) {
    if (p < 3 || p >= (1ull << 31))
        throw Error(ErrorKind::Value, "modulus must satisfy 3 <= p < 2^31");
    if (p % 2 == 0 || !is_prime_u32(p))
        throw Error(ErrorKind::Value, "modulus must be an odd prime");
}

PrimeField::Element PrimeField::pow(Element a, u64 e) const {
    Element r = 1;
    a %= p_;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

PrimeField::Element PrimeField::inv(Element a) const {
    if (a == 0) throw Error(ErrorKind::Value, "inverse of zero");
    return pow(a, p_ - 2);
}

bool PrimeField::is_square(Element a) const {
    if (a == 0) return true;
    return pow(a, (p_ - 1) / 2) == 1;
}

}  // namespace hyperjac::ff
