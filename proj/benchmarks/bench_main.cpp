#include <benchmark/benchmark.h>

#include <random>

#include <qdef/qdef.hpp>

using namespace qdef;

namespace {

std::vector<Couplings2<double>> make_couplings2(size_t n) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    std::vector<Couplings2<double>> out;
    out.reserve(n);
    for (size_t i = 0; i < n; ++i) out.emplace_back(u(rng), u(rng), u(rng), u(rng), u(rng));
    return out;
}

std::vector<Couplings3<double>> make_couplings3(size_t n) {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    std::uniform_real_distribution<double> uh(0.1, 5.0);
    std::vector<Couplings3<double>> out;
    out.reserve(n);
    for (size_t i = 0; i < n; ++i)
        out.emplace_back(uh(rng), u(rng), u(rng), u(rng),
                         Couplings2<double>(u(rng), u(rng), u(rng), u(rng), u(rng)));
    return out;
}

void BM_ClassifyCouplings2(benchmark::State& state) {
    const auto cs = make_couplings2(1024);
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(classify_couplings2(cs[i++ & 1023]));
    }
}
BENCHMARK(BM_ClassifyCouplings2);

void BM_QuarticNonneg(benchmark::State& state) {
    const auto cs = make_couplings2(1024);
    size_t i = 0;
    for (auto _ : state) {
        const auto& c = cs[i++ & 1023];
        benchmark::DoNotOptimize(quartic_nonneg(QuarticPoly<double>(c.l40, c.l31, c.l22, c.l13, c.l04)));
    }
}
BENCHMARK(BM_QuarticNonneg);

void BM_MinQuarticExact(benchmark::State& state) {
    const auto cs = make_couplings2(1024);
    size_t i = 0;
    for (auto _ : state) {
        const auto& c = cs[i++ & 1023];
        const QuarticPoly<double> p(std::fabs(c.l40) + 0.1, c.l31, c.l22, c.l13,
                                    std::fabs(c.l04) + 0.1);
        benchmark::DoNotOptimize(min_quartic_exact(p));
    }
}
BENCHMARK(BM_MinQuarticExact);

void BM_ClassifyCouplings3(benchmark::State& state) {
    const auto cs = make_couplings3(1024);
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(classify_couplings3(cs[i++ & 1023]));
    }
}
BENCHMARK(BM_ClassifyCouplings3);

void BM_MinPotential3(benchmark::State& state) {
    const auto cs = make_couplings3(256);
    SphereScanOptions opt;
    opt.outer_samples = static_cast<int>(state.range(0));
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(min_potential3(cs[i++ & 255], opt));
    }
}
BENCHMARK(BM_MinPotential3)->Arg(1024)->Arg(4096);

} // namespace

BENCHMARK_MAIN();
