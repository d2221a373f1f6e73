// Hot-path benchmarks: field/polynomial kernels, the Cartier-Manin pipeline,
// and the sampling layers above them.  Inputs are fixed so runs are
// comparable across revisions.

#include <benchmark/benchmark.h>

#include "hyperjac/cartier_manin.hpp"
#include "hyperjac/galois_scan.hpp"
#include "hyperjac/poly_expr.hpp"
#include "hyperjac/rep_bounds.hpp"
#include "hyperjac/splitmix.hpp"

using namespace hyperjac;
using namespace hyperjac::ff;

namespace {

FpPoly random_poly(const PrimeField& F, u64 seed, std::size_t degree) {
    SplitMix64 rng = task_stream(seed, 0);
    FpPoly f(degree + 1);
    for (auto& c : f) c = rng.below(F.p());
    f.back() = 1;
    return f;
}

void BM_poly_mul_deg64(benchmark::State& state) {
    PrimeField F(1000003);
    auto a = random_poly(F, 1, 64);
    auto b = random_poly(F, 2, 64);
    for (auto _ : state) benchmark::DoNotOptimize(poly_mul(F, a, b));
}
BENCHMARK(BM_poly_mul_deg64);

void BM_poly_gcd_deg64(benchmark::State& state) {
    PrimeField F(1000003);
    auto a = random_poly(F, 3, 64);
    auto b = random_poly(F, 4, 63);
    for (auto _ : state) benchmark::DoNotOptimize(poly_gcd(F, a, b));
}
BENCHMARK(BM_poly_gcd_deg64);

void BM_ddf_deg12(benchmark::State& state) {
    PrimeField F(static_cast<u64>(state.range(0)));
    auto f = random_poly(F, 5, 12);
    while (!is_separable(F, f)) f = random_poly(F, f[0] + 7, 12);
    for (auto _ : state) benchmark::DoNotOptimize(distinct_degree_profile(F, f));
}
BENCHMARK(BM_ddf_deg12)->Arg(11)->Arg(10007);

void BM_hasse_witt_deg10(benchmark::State& state) {
    PrimeField F(static_cast<u64>(state.range(0)));
    auto f = parse_poly("x^10 - x + 1", F).univariate();
    curve::HyperCurve C(F, f);
    for (auto _ : state) benchmark::DoNotOptimize(curve::hasse_witt(C));
}
BENCHMARK(BM_hasse_witt_deg10)->Arg(11)->Arg(101)->Arg(1009);

void BM_count_points_Fp2(benchmark::State& state) {
    PrimeField F(101);
    curve::HyperCurve C(F, FpPoly{1, 0, 1, 0, 0, 1});
    for (auto _ : state) benchmark::DoNotOptimize(curve::count_points(C, 2));
}
BENCHMARK(BM_count_points_Fp2);

void BM_refute_genus2_full(benchmark::State& state) {
    PrimeField F(101);
    curve::HyperCurve C(F, FpPoly{1, 0, 1, 0, 0, 1});
    for (auto _ : state)
        benchmark::DoNotOptimize(curve::refute_supersingular(C, curve::Effort::FullL));
}
BENCHMARK(BM_refute_genus2_full);

void BM_disc_z_family(benchmark::State& state) {
    PrimeField F(11);
    auto fam = parse_poly("x^10 - x + z", F).poly;
    for (auto _ : state) benchmark::DoNotOptimize(disc_z(fam));
}
BENCHMARK(BM_disc_z_family);

void BM_decide_galois_budget50(benchmark::State& state) {
    PrimeField F(11);
    auto fam = parse_poly("x^10 - x + z", F).poly;
    for (auto _ : state) benchmark::DoNotOptimize(galois::decide_galois(fam, 50, 42));
}
BENCHMARK(BM_decide_galois_budget50);

void BM_property_b_sweep(benchmark::State& state) {
    for (auto _ : state) {
        bool all = true;
        for (u64 n = 10; n <= 1000; n += 2) all = all && rep::check_property_b(n).verdict;
        benchmark::DoNotOptimize(all);
    }
}
BENCHMARK(BM_property_b_sweep);

}  // namespace

BENCHMARK_MAIN();
