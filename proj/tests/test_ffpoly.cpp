// Field and polynomial layer: PrimeField, ExtField, the pk kernels, BivarPoly
// and the expression grammar.  Reference values are either computed by the
// naive schoolbook routines defined below or frozen from hand calculations.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "hyperjac/bivar_poly.hpp"
#include "hyperjac/poly_expr.hpp"
#include "hyperjac/prime_poly.hpp"
#include "hyperjac/splitmix.hpp"

using namespace hyperjac;
using namespace hyperjac::ff;

namespace {

// Schoolbook convolution, no normalization tricks: the independent oracle for
// pk::mul.
FpPoly naive_mul(const PrimeField& F, const FpPoly& a, const FpPoly& b) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

u64 naive_eval(const PrimeField& F, const FpPoly& f, u64 x) {
    u64 acc = 0, xp = 1;
    for (u64 c : f) {
        acc = F.add(acc, F.mul(c, xp));
        xp = F.mul(xp, x);
    }
    return acc;
}

FpPoly random_poly(const PrimeField& F, SplitMix64& rng, int degree) {
    FpPoly f(static_cast<std::size_t>(degree) + 1);
    for (auto& c : f) c = rng.below(F.p());
    while (f.back() == 0) f.back() = rng.below(F.p());
    return f;
}

FpPoly monic_from_roots(const PrimeField& F, const std::vector<u64>& roots) {
    FpPoly f{1};
    for (u64 r : roots) f = naive_mul(F, f, FpPoly{F.neg(r), 1});
    return f;
}

}  // namespace

TEST_CASE("prime field construction accepts odd primes only") {
    CHECK_NOTHROW(PrimeField(3));
    CHECK_NOTHROW(PrimeField(31));
    CHECK_NOTHROW(PrimeField(2147483647));  // 2^31 - 1
    CHECK_THROWS_AS(PrimeField(2), Error);
    CHECK_THROWS_AS(PrimeField(1), Error);
    CHECK_THROWS_AS(PrimeField(0), Error);
    CHECK_THROWS_AS(PrimeField(9), Error);
    CHECK_THROWS_AS(PrimeField(561), Error);   // Carmichael
    CHECK_THROWS_AS(PrimeField(2047), Error);  // strong pseudoprime base 2
    CHECK_THROWS_AS(PrimeField(4294967295ull), Error);
}

TEST_CASE("is_prime_u32 against trial division up to 2000") {
    auto trial = [](u64 n) {
        if (n < 2) return false;
        for (u64 d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    };
    for (u64 n = 0; n < 2000; ++n) CHECK(is_prime_u32(n) == trial(n));
}

TEST_CASE("prime field arithmetic is exhaustive-checkable at p = 7") {
    PrimeField F(7);
    for (u64 a = 0; a < 7; ++a) {
        for (u64 b = 0; b < 7; ++b) {
            CHECK(F.add(a, b) == (a + b) % 7);
            CHECK(F.sub(a, b) == (a + 7 - b) % 7);
            CHECK(F.mul(a, b) == (a * b) % 7);
        }
        if (a != 0) CHECK(F.mul(a, F.inv(a)) == 1);
        CHECK(F.add(a, F.neg(a)) == 0);
    }
    CHECK(F.pow(3, 6) == 1);  // Fermat
    CHECK(F.pow(0, 0) == 1);
    CHECK(F.from_int(-1) == 6);
    CHECK(F.from_int(-14) == 0);
}

TEST_CASE("is_square matches the exhaustive square table") {
    for (u64 p : {3, 5, 7, 11, 13, 31}) {
        PrimeField F(p);
        std::set<u64> squares;
        for (u64 t = 0; t < p; ++t) squares.insert(t * t % p);
        for (u64 a = 0; a < p; ++a) CHECK(F.is_square(a) == (squares.count(a) > 0));
    }
}

TEST_CASE("extension field moduli are the frozen lexicographic choices") {
    CHECK(make_ext_field(3, 1).modulus() == std::vector<u64>{0, 1});            // x
    CHECK(make_ext_field(3, 2).modulus() == std::vector<u64>{1, 0, 1});         // x^2+1
    CHECK(make_ext_field(5, 2).modulus() == std::vector<u64>{2, 0, 1});         // x^2+2
    CHECK(make_ext_field(7, 2).modulus() == std::vector<u64>{1, 0, 1});         // x^2+1
    CHECK(make_ext_field(7, 3).modulus() == std::vector<u64>{2, 0, 0, 1});      // x^3+2
}

TEST_CASE("F_9 as F_3[i]: inverse, square, frobenius by hand") {
    ExtField E = make_ext_field(3, 2);  // modulus x^2+1, so x plays i
    ExtField::Element i{0, 1};
    CHECK(E.mul(i, i) == E.embed(2));           // i^2 = -1
    CHECK(E.inv(i) == ExtField::Element{0, 2});  // 1/i = -i
    // (1+2i)^2 = 1+4i+4i^2 = i, so i is a square in F_9.
    ExtField::Element w{1, 2};
    CHECK(E.mul(w, w) == i);
    CHECK(E.is_square(i));
    CHECK(E.is_square(E.embed(2)));  // -1 = i^2; base nonsquares become squares in F_{p^2}
    CHECK_FALSE(E.is_square(ExtField::Element{1, 1}));  // N(1+i) = 2, a nonsquare in F_3
    CHECK(E.frobenius(i) == ExtField::Element{0, 2});   // i^3 = -i
    CHECK(E.pth_root(ExtField::Element{0, 2}) == i);
    CHECK(E.norm(i) == 1);  // N(i) = i * i^3 = -i^2 = 1
}

TEST_CASE("element enumeration round-trips and is_base/to_base agree") {
    ExtField E = make_ext_field(5, 2);
    for (u64 idx = 0; idx < 25; ++idx) {
        auto a = E.element_from_index(idx);
        CHECK(E.index_of(a) == idx);
        CHECK(E.is_base(a) == (idx < 5));
        if (idx < 5) CHECK(E.to_base(a) == idx);
    }
}

TEST_CASE("is_square is multiplicative on random nonzero pairs") {
    for (u64 p : {3, 7}) {
        for (u32 k : {2u, 3u}) {
            ExtField E = make_ext_field(p, k);
            u64 q = 1;
            for (u32 j = 0; j < k; ++j) q *= p;
            SplitMix64 rng = task_stream(2024, p * 100 + k);
            for (int t = 0; t < 200; ++t) {
                auto a = E.element_from_index(1 + rng.below(q - 1));
                auto b = E.element_from_index(1 + rng.below(q - 1));
                CHECK(E.is_square(E.mul(a, b)) == (E.is_square(a) == E.is_square(b)));
            }
        }
    }
}

TEST_CASE("frobenius is the p-power map and pth_root inverts it") {
    ExtField E = make_ext_field(7, 3);
    SplitMix64 rng = task_stream(11, 0);
    for (int t = 0; t < 100; ++t) {
        auto a = E.element_from_index(rng.below(343));
        CHECK(E.frobenius(a) == E.pow(a, 7));
        CHECK(E.pth_root(E.frobenius(a)) == a);
        CHECK(E.frobenius(E.pth_root(a)) == a);
    }
}

TEST_CASE("poly mul/divrem/eval against schoolbook oracles") {
    for (u64 p : {3, 5, 7, 31}) {
        PrimeField F(p);
        SplitMix64 rng = task_stream(500 + p, 0);
        for (int t = 0; t < 250; ++t) {
            auto a = random_poly(F, rng, 1 + static_cast<int>(rng.below(8)));
            auto b = random_poly(F, rng, 1 + static_cast<int>(rng.below(8)));
            CHECK(poly_mul(F, a, b) == naive_mul(F, a, b));
            auto [q, r] = poly_divrem(F, a, b);
            CHECK(poly_add(F, poly_mul(F, q, b), r) == a);
            CHECK(static_cast<int>(r.size()) <= degree(b));
            u64 x = rng.below(p);
            CHECK(poly_eval(F, a, x) == naive_eval(F, a, x));
        }
    }
}

TEST_CASE("ring axioms hold on random triples") {
    for (u64 p : {3, 5, 7, 31}) {
        PrimeField F(p);
        SplitMix64 rng = task_stream(900 + p, 1);
        for (int t = 0; t < 300; ++t) {
            auto a = random_poly(F, rng, static_cast<int>(rng.below(6)));
            auto b = random_poly(F, rng, static_cast<int>(rng.below(6)));
            auto c = random_poly(F, rng, static_cast<int>(rng.below(6)));
            CHECK(poly_add(F, a, b) == poly_add(F, b, a));
            CHECK(poly_mul(F, a, b) == poly_mul(F, b, a));
            CHECK(poly_mul(F, a, poly_add(F, b, c)) ==
                  poly_add(F, poly_mul(F, a, b), poly_mul(F, a, c)));
            CHECK(poly_mul(F, poly_mul(F, a, b), c) == poly_mul(F, a, poly_mul(F, b, c)));
            CHECK(poly_sub(F, a, a).empty());
        }
    }
}

TEST_CASE("freshman's dream: (f+g)^p = f^p + g^p in characteristic p") {
    for (u64 p : {3, 5, 7}) {
        PrimeField F(p);
        SplitMix64 rng = task_stream(77, p);
        for (int t = 0; t < 20; ++t) {
            auto f = random_poly(F, rng, 3);
            auto g = random_poly(F, rng, 2);
            CHECK(poly_pow(F, poly_add(F, f, g), p) ==
                  poly_add(F, poly_pow(F, f, p), poly_pow(F, g, p)));
        }
    }
}

TEST_CASE("derivative satisfies the product rule") {
    PrimeField F(13);
    SplitMix64 rng = task_stream(13, 13);
    for (int t = 0; t < 200; ++t) {
        auto f = random_poly(F, rng, 1 + static_cast<int>(rng.below(7)));
        auto g = random_poly(F, rng, 1 + static_cast<int>(rng.below(7)));
        auto lhs = poly_derivative(F, poly_mul(F, f, g));
        auto rhs = poly_add(F, poly_mul(F, poly_derivative(F, f), g),
                            poly_mul(F, f, poly_derivative(F, g)));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("gcd divides both arguments and finds planted common factors") {
    PrimeField F(11);
    SplitMix64 rng = task_stream(4242, 0);
    for (int t = 0; t < 150; ++t) {
        auto d = random_poly(F, rng, 1 + static_cast<int>(rng.below(3)));
        auto a = poly_mul(F, d, random_poly(F, rng, 1 + static_cast<int>(rng.below(4))));
        auto b = poly_mul(F, d, random_poly(F, rng, 1 + static_cast<int>(rng.below(4))));
        auto g = poly_gcd(F, a, b);
        CHECK(degree(g) >= degree(d));  // the planted factor divides the gcd
        CHECK(poly_divrem(F, a, g).second.empty());
        CHECK(poly_divrem(F, b, g).second.empty());
        CHECK(g.back() == 1);  // monic
    }
}

TEST_CASE("degree of zero polynomial is an error") {
    CHECK_THROWS_AS(degree(FpPoly{}), Error);
}

TEST_CASE("resultant via the split-polynomial product formula") {
    PrimeField F(13);
    SplitMix64 rng = task_stream(31337, 2);
    for (int t = 0; t < 100; ++t) {
        // distinct roots for f, arbitrary g; Res(f, g) = prod g(root) when f monic
        std::set<u64> rs;
        while (rs.size() < 4) rs.insert(rng.below(13));
        std::vector<u64> roots(rs.begin(), rs.end());
        auto f = monic_from_roots(F, roots);
        auto g = random_poly(F, rng, 1 + static_cast<int>(rng.below(4)));
        u64 expect = 1;
        for (u64 r : roots) expect = F.mul(expect, naive_eval(F, g, r));
        CHECK(resultant(F, f, g) == expect);
    }
}

TEST_CASE("resultant vanishes exactly on nontrivial gcd") {
    PrimeField F(7);
    SplitMix64 rng = task_stream(5150, 3);
    for (int t = 0; t < 200; ++t) {
        auto a = random_poly(F, rng, 1 + static_cast<int>(rng.below(5)));
        auto b = random_poly(F, rng, 1 + static_cast<int>(rng.below(5)));
        CHECK((resultant(F, a, b) == 0) == (degree(poly_gcd(F, a, b)) > 0));
    }
}

TEST_CASE("discriminant closed forms for quadratics and cubics") {
    for (u64 p : {7, 11, 13}) {
        PrimeField F(p);
        SplitMix64 rng = task_stream(606, p);
        for (int t = 0; t < 100; ++t) {
            u64 b = rng.below(p), c = rng.below(p);
            // disc(x^2 + bx + c) = b^2 - 4c
            CHECK(discriminant(F, FpPoly{c, b, 1}) ==
                  F.sub(F.mul(b, b), F.mul(4 % p, c)));
            // disc(x^3 + ax + b) = -4a^3 - 27b^2
            u64 a = rng.below(p);
            u64 expect = F.sub(0, F.add(F.mul(F.mul(4 % p, a), F.mul(a, a)),
                                        F.mul(27 % p, F.mul(b, b))));
            CHECK(discriminant(F, FpPoly{b, a, 0, 1}) == expect);
        }
    }
}

TEST_CASE("discriminant via root differences on split polynomials") {
    PrimeField F(11);
    SplitMix64 rng = task_stream(8080, 4);
    for (int t = 0; t < 50; ++t) {
        std::set<u64> rs;
        while (rs.size() < 4) rs.insert(rng.below(11));
        std::vector<u64> roots(rs.begin(), rs.end());
        u64 expect = 1;
        for (std::size_t i = 0; i < roots.size(); ++i)
            for (std::size_t j = i + 1; j < roots.size(); ++j) {
                u64 d = F.sub(roots[i], roots[j]);
                expect = F.mul(expect, F.mul(d, d));
            }
        CHECK(discriminant(F, monic_from_roots(F, roots)) == expect);
    }
}

TEST_CASE("separability distinguishes repeated factors from unit derivatives") {
    PrimeField F(5);
    CHECK(is_separable(F, FpPoly{0, 4, 0, 1}));        // x^3 - x
    CHECK_FALSE(is_separable(F, FpPoly{0, 0, 1}));     // x^2
    CHECK(is_separable(F, FpPoly{0, 1, 0, 0, 0, 1}));  // x^5 + x, derivative is 1
    CHECK_FALSE(is_separable(F, FpPoly{0, 0, 0, 0, 0, 1}));  // x^5 = (x)^5
}

TEST_CASE("pth_root inverts pth powers of polynomials") {
    for (u64 p : {3, 5}) {
        PrimeField F(p);
        SplitMix64 rng = task_stream(111, p);
        for (int t = 0; t < 30; ++t) {
            auto f = random_poly(F, rng, 1 + static_cast<int>(rng.below(4)));
            auto fp = poly_pow(F, f, p);
            CHECK(pk::pth_root(F, fp) == f);
        }
    }
}

TEST_CASE("squarefree decomposition recovers planted multiplicities") {
    PrimeField F(7);
    // f = (x+1)(x+2)^2(x+3)^3
    auto f = naive_mul(F, FpPoly{1, 1}, naive_mul(F, naive_mul(F, FpPoly{2, 1}, FpPoly{2, 1}),
                       naive_mul(F, FpPoly{3, 1}, naive_mul(F, FpPoly{3, 1}, FpPoly{3, 1}))));
    auto parts = pk::squarefree_decomposition(F, f);
    std::vector<std::pair<FpPoly, u64>> expect{{FpPoly{1, 1}, 1}, {FpPoly{2, 1}, 2}, {FpPoly{3, 1}, 3}};
    std::sort(parts.begin(), parts.end(), [](auto& a, auto& b) { return a.second < b.second; });
    REQUIRE(parts.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(parts[i].first == expect[i].first);
        CHECK(parts[i].second == expect[i].second);
    }
}

TEST_CASE("squarefree decomposition handles pure p-th powers") {
    PrimeField F(3);
    // x^3 + 1 = (x+1)^3 in characteristic 3
    auto parts = pk::squarefree_decomposition(F, FpPoly{1, 0, 0, 1});
    REQUIRE(parts.size() == 1);
    CHECK(parts[0].first == FpPoly{1, 1});
    CHECK(parts[0].second == 3);
}

TEST_CASE("squarefree decomposition multiplies back to its monic input") {
    PrimeField F(5);
    SplitMix64 rng = task_stream(321, 5);
    for (int t = 0; t < 40; ++t) {
        auto a = pk::make_monic(F, random_poly(F, rng, 1 + static_cast<int>(rng.below(3))));
        auto b = pk::make_monic(F, random_poly(F, rng, 1 + static_cast<int>(rng.below(3))));
        auto f = naive_mul(F, a, naive_mul(F, b, b));
        FpPoly prod{1};
        for (auto& [part, m] : pk::squarefree_decomposition(F, f))
            for (u64 i = 0; i < m; ++i) prod = naive_mul(F, prod, part);
        CHECK(prod == pk::make_monic(F, f));
    }
}

TEST_CASE("distinct degree profile on classical factorizations") {
    PrimeField F3(3), F5(5);
    // x^2+1 irreducible over F_3
    auto prof = distinct_degree_profile(F3, FpPoly{1, 0, 1});
    REQUIRE(prof.entries.size() == 1);
    CHECK(prof.entries[0] == std::pair<u32, u32>{2, 1});
    // x^4+1 = (x^2+x+2)(x^2+2x+2) over F_3
    prof = distinct_degree_profile(F3, FpPoly{1, 0, 0, 0, 1});
    REQUIRE(prof.entries.size() == 1);
    CHECK(prof.entries[0] == std::pair<u32, u32>{2, 2});
    // x^5 - x splits into all five linear factors over F_5
    prof = distinct_degree_profile(F5, FpPoly{0, 4, 0, 0, 0, 1});
    REQUIRE(prof.entries.size() == 1);
    CHECK(prof.entries[0] == std::pair<u32, u32>{1, 5});
    // Artin-Schreier x^5 - x + 1 is irreducible over F_5
    prof = distinct_degree_profile(F5, FpPoly{1, 4, 0, 0, 0, 1});
    REQUIRE(prof.entries.size() == 1);
    CHECK(prof.entries[0] == std::pair<u32, u32>{5, 1});
    CHECK_THROWS_AS(distinct_degree_profile(F5, FpPoly{0, 0, 1}), Error);  // x^2 not squarefree
}

TEST_CASE("distinct degree profile: degree-1 count equals brute-force root count") {
    PrimeField F(11);
    SplitMix64 rng = task_stream(2718, 6);
    int tested = 0;
    for (int t = 0; t < 200 && tested < 100; ++t) {
        auto f = random_poly(F, rng, 2 + static_cast<int>(rng.below(6)));
        if (!is_separable(F, f)) continue;
        ++tested;
        auto prof = distinct_degree_profile(F, f);
        u32 deg1 = 0;
        for (auto [d, m] : prof.entries)
            if (d == 1) deg1 = m;
        u32 roots = 0;
        for (u64 x = 0; x < 11; ++x)
            if (naive_eval(F, f, x) == 0) ++roots;
        CHECK(deg1 == roots);
        CHECK(prof.degree_sum() == static_cast<u32>(degree(f)));
    }
    CHECK(tested == 100);
}

TEST_CASE("frobenius_power fixes exactly the subfield polynomial roots") {
    PrimeField F(7);
    // x^{7^d} mod f: iterating must agree with direct powmod
    FpPoly f{3, 1, 0, 0, 1};  // arbitrary monic quartic
    auto direct = pk::powmod(F, pk::monomial_x(F), 7 * 7, f);
    CHECK(frobenius_power(F, f, 2) == direct);
}

TEST_CASE("interpolation inverts evaluation") {
    PrimeField F(13);
    SplitMix64 rng = task_stream(999, 7);
    for (int t = 0; t < 100; ++t) {
        int n = 1 + static_cast<int>(rng.below(8));
        auto f = random_poly(F, rng, n - 1);
        std::vector<u64> xs, ys;
        for (u64 x = 0; x < static_cast<u64>(n); ++x) {
            xs.push_back(x);
            ys.push_back(naive_eval(F, f, x));
        }
        CHECK(pk::interpolate(F, xs, ys) == f);
    }
    CHECK_THROWS_AS(pk::interpolate(F, std::vector<u64>{1, 1}, std::vector<u64>{2, 3}), Error);
}

TEST_CASE("make_poly reduces residues and rejects nothing else") {
    PrimeField F(5);
    CHECK(make_poly(F, {-1, 6, 10}) == FpPoly{4, 1});
    CHECK(make_poly(F, {0, 0, 0}).empty());
    CHECK(poly_to_string(F, make_poly(F, {1, 0, 3})) == "3*x^2 + 1");
    CHECK(poly_to_string(F, FpPoly{}) == "0");
}

// --- bivariate layer ---

TEST_CASE("bivariate construction, degrees, specialization") {
    PrimeField F(7);
    auto X = make_bivar(F, {{10, 0, 1}, {1, 0, -1}, {0, 1, 1}});  // x^10 - x + z
    CHECK(X.deg_x() == 10);
    CHECK(X.deg_z() == 1);
    CHECK(X.monic_in_x());
    CHECK_FALSE(X.constant_in_z());
    auto f3 = X.specialize(3);
    CHECK(f3 == make_poly(F, {3, -1, 0, 0, 0, 0, 0, 0, 0, 0, 1}));
    auto Y = make_bivar(F, {});
    CHECK(Y.is_zero());
    CHECK_THROWS_AS(Y.deg_x(), Error);
}

TEST_CASE("specialize_ext agrees with base specialization on embedded points") {
    PrimeField F(5);
    ExtField E = make_ext_field(5, 2);
    auto X = make_bivar(F, {{3, 2, 2}, {1, 1, 4}, {0, 0, 1}});
    for (u64 z0 = 0; z0 < 5; ++z0) {
        auto fb = X.specialize(z0);
        auto fe = X.specialize_ext(E, E.embed(z0));
        REQUIRE(fe.size() == fb.size());
        for (std::size_t i = 0; i < fb.size(); ++i) CHECK(fe[i] == E.embed(fb[i]));
    }
}

TEST_CASE("disc_z commutes with specialization pointwise") {
    PrimeField F(11);
    SplitMix64 rng = task_stream(1234, 8);
    for (int t = 0; t < 25; ++t) {
        // random monic-in-x family, deg_x in [2,5], z-coeffs of degree <= 3
        int n = 2 + static_cast<int>(rng.below(4));
        std::vector<FpPoly> rows;
        for (int i = 0; i < n; ++i) {
            FpPoly row(1 + rng.below(4));
            for (auto& c : row) c = rng.below(11);
            while (!row.empty() && row.back() == 0) row.pop_back();
            rows.push_back(row);
        }
        rows.push_back(FpPoly{1});
        BivarPoly X(F, rows);
        auto D = disc_z(X);
        for (u64 z0 = 0; z0 < 11; ++z0) {
            u64 want = discriminant(F, X.specialize(z0));
            CHECK(poly_eval(F, D, z0) == want);
        }
    }
}

TEST_CASE("disc_z goes through an extension when F_p runs out of nodes") {
    PrimeField F(3);
    // deg_x = 3, deg_z = 2: needs (2*3-1)*2+1 = 11 > 3 nodes, so k = 3
    auto X = make_bivar(F, {{3, 0, 1}, {1, 2, 1}, {0, 1, 2}});
    auto D = disc_z(X);
    for (u64 z0 = 0; z0 < 3; ++z0)
        CHECK(poly_eval(F, D, z0) == discriminant(F, X.specialize(z0)));
}

TEST_CASE("disc_z rejects families not monic in x") {
    PrimeField F(5);
    auto X = make_bivar(F, {{2, 1, 1}, {0, 0, 1}});  // lead coeff z
    CHECK_THROWS_AS(disc_z(X), Error);
    try {
        disc_z(X);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotMonic);
    }
}

TEST_CASE("disc_z extension cap is enforced") {
    PrimeField F(3);
    // deg_z large enough that (2n-1)*dz + 1 > 3^12 forces k = 13
    std::vector<FpPoly> rows(3);
    rows[0] = FpPoly(177149, 0);
    rows[0].back() = 1;  // z^177148
    rows[1] = FpPoly{};
    rows[2] = FpPoly{1};
    BivarPoly X(F, rows);
    try {
        disc_z(X);
        FAIL("expected CapExceeded");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::CapExceeded);
    }
}

// --- expression grammar ---

TEST_CASE("parser handles the documented families") {
    PrimeField F7(7);
    auto P = parse_poly("x^10 - x + z", F7);
    CHECK(P.uses_z);
    CHECK(P.poly.deg_x() == 10);
    CHECK(P.poly.monic_in_x());
    CHECK(canonical_string(P.poly) == "x^10 + 6*x + z");

    PrimeField F3(3);
    auto Q = parse_poly("x^10 - x*z^7 + 1", F3);
    CHECK(Q.poly.deg_x() == 10);
    CHECK(Q.poly.deg_z() == 7);
    CHECK(canonical_string(Q.poly) == "x^10 + 2*x*z^7 + 1");

    auto Z = parse_poly("0", F3);
    CHECK(Z.poly.is_zero());
    CHECK_FALSE(Z.uses_z);
    CHECK(canonical_string(Z.poly) == "0");
}

TEST_CASE("parse then print then parse is the identity") {
    PrimeField F(13);
    SplitMix64 rng = task_stream(55, 9);
    for (int t = 0; t < 120; ++t) {
        std::vector<std::tuple<u32, u32, i64>> terms;
        int nt = 1 + static_cast<int>(rng.below(6));
        for (int i = 0; i < nt; ++i)
            terms.emplace_back(static_cast<u32>(rng.below(8)), static_cast<u32>(rng.below(5)),
                               static_cast<i64>(rng.below(13)));
        auto X = make_bivar(F, terms);
        auto s = canonical_string(X);
        auto back = parse_poly(s, F);
        CHECK(back.poly == X);
        CHECK(canonical_string(back.poly) == s);
    }
}

TEST_CASE("coefficients reduce mod p and whitespace is ignored") {
    PrimeField F(5);
    auto P = parse_poly("  7 * x ^ 2+ 10  ", F);
    CHECK_FALSE(P.uses_z);
    CHECK(P.univariate() == FpPoly{0, 0, 2});
    CHECK(parse_poly("x+x+x+x+x", F).poly.is_zero());
}

TEST_CASE("syntax errors carry byte offsets") {
    PrimeField F(7);
    auto offset_of = [&](const std::string& text) -> std::pair<ErrorKind, std::size_t> {
        try {
            parse_poly(text, F);
        } catch (const Error& e) {
            return {e.kind(), e.offset()};
        }
        return {ErrorKind::Internal, 9999};
    };
    CHECK(offset_of("") == std::pair{ErrorKind::Syntax, std::size_t{0}});
    CHECK(offset_of("x^") == std::pair{ErrorKind::Syntax, std::size_t{2}});
    CHECK(offset_of("x+") == std::pair{ErrorKind::Syntax, std::size_t{2}});
    CHECK(offset_of("2*") == std::pair{ErrorKind::Syntax, std::size_t{2}});
    CHECK(offset_of("-x") == std::pair{ErrorKind::Syntax, std::size_t{0}});  // no leading minus
    CHECK(offset_of("x y") == std::pair{ErrorKind::Syntax, std::size_t{2}});
    CHECK(offset_of("x^99999999999999999999") ==
          std::pair{ErrorKind::Syntax, std::size_t{2}});  // u64 overflow
}

TEST_CASE("unsupported structure is distinguished from syntax errors") {
    PrimeField F(7);
    auto kind_of = [&](const std::string& text) {
        try {
            parse_poly(text, F);
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::Internal;
    };
    CHECK(kind_of("(x+1)") == ErrorKind::Unsupported);
    CHECK(kind_of("x*x") == ErrorKind::Unsupported);
    CHECK(kind_of("z^2*z") == ErrorKind::Unsupported);
    CHECK(kind_of("x^2000000") == ErrorKind::Unsupported);
    CHECK(kind_of("x^1000000") == ErrorKind::Internal);  // boundary accepted, no throw
}

TEST_CASE("univariate collapse refuses polynomials that mention z") {
    PrimeField F(7);
    CHECK_THROWS_AS(parse_poly("x+z", F).univariate(), Error);
    CHECK(parse_poly("x^3+2", F).univariate() == FpPoly{2, 0, 0, 1});
}
