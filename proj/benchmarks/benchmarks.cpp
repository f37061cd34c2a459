#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

#include "eqlab/barycentric.hpp"
#include "eqlab/boundary_analysis.hpp"
#include "eqlab/convergence.hpp"
#include "eqlab/earthquake.hpp"
#include "eqlab/generators.hpp"
#include "eqlab/lamination.hpp"
#include "eqlab/rng.hpp"

namespace {

using namespace eqlab;

MeasuredLamination random_lamination(int atoms) {
    return gen_random_bounded(atoms, 1.0, 42);
}

void BM_ThurstonNormExact(benchmark::State& state) {
    MeasuredLamination lam = random_lamination(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(thurston_norm(lam).value);
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ThurstonNormExact)->RangeMultiplier(2)->Range(8, 64)->Complexity();

void BM_ThurstonNormSampled(benchmark::State& state) {
    MeasuredLamination lam = random_lamination(16);
    std::uint64_t samples = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(thurston_norm_sampled(lam, samples, 1).value);
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(samples));
}
BENCHMARK(BM_ThurstonNormSampled)->Arg(1000)->Arg(10000);

void BM_BoundaryMapEval(benchmark::State& state) {
    MeasuredLamination lam = gen_dyadic_family(static_cast<int>(state.range(0)),
                                               weight_rule_pow2());
    CircleMap f = EarthquakeMap(EarthquakeSpec::with_default_base(lam)).boundary_map();
    std::mt19937_64 rng = seeded_engine(7);
    std::uniform_real_distribution<double> uni(0.0, kTau);
    // Warm the per-stratum cache so steady-state evaluation is measured.
    for (int i = 0; i < 4096; ++i) f.apply_angle(uni(rng));
    for (auto _ : state) benchmark::DoNotOptimize(f.apply_angle(uni(rng)));
}
BENCHMARK(BM_BoundaryMapEval)->Arg(4)->Arg(6)->Arg(8);

void BM_CocycleBetweenStrata(benchmark::State& state) {
    MeasuredLamination lam = random_lamination(32);
    std::mt19937_64 rng = seeded_engine(9);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    std::vector<StratumSignature> strata;
    while (strata.size() < 64) {
        DiskPoint z(0.9 * std::sqrt(uni(rng)) * unit(kTau * uni(rng)));
        StratumSignature sig = lam.stratum_of(z);
        bool on = false;
        for (Side s : sig) on = on || s == Side::On;
        if (!on) strata.push_back(std::move(sig));
    }
    std::size_t i = 0;
    for (auto _ : state) {
        const auto& a = strata[i % strata.size()];
        const auto& b = strata[(i + 17) % strata.size()];
        benchmark::DoNotOptimize(cocycle(lam, a, b));
        ++i;
    }
}
BENCHMARK(BM_CocycleBetweenStrata);

void BM_WeakStarDiscrepancy(benchmark::State& state) {
    MeasuredLamination mu = gen_dyadic_family(static_cast<int>(state.range(0)),
                                              weight_rule_constant(1.0));
    MeasuredLamination nu = scale_weights(mu, 0.875);
    for (auto _ : state) benchmark::DoNotOptimize(weak_star_discrepancy(mu, nu));
}
BENCHMARK(BM_WeakStarDiscrepancy)->Arg(3)->Arg(5);

void BM_QsConstantEstimate(benchmark::State& state) {
    CircleMap f = EarthquakeMap(EarthquakeSpec::with_default_base(random_lamination(12)))
                      .boundary_map();
    std::uint64_t samples = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(qs_constant_estimate(f, samples, 4).cr_max);
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(samples));
}
BENCHMARK(BM_QsConstantEstimate)->Arg(1000)->Arg(4000);

void BM_BarycentricExtension(benchmark::State& state) {
    CircleMap f = EarthquakeMap(EarthquakeSpec::with_default_base(
                                    MeasuredLamination({Atom{Geodesic(0.9, 2.7), 0.7}})))
                      .boundary_map();
    ExtensionOptions opts;
    opts.quadrature = static_cast<int>(state.range(0));
    DiskPoint z(0.31, -0.22);
    for (auto _ : state) benchmark::DoNotOptimize(barycentric_extension(f, z, opts).value);
}
BENCHMARK(BM_BarycentricExtension)->Arg(256)->Arg(1024)->Arg(4096);

}  // namespace

BENCHMARK_MAIN();
