// Serial (jobs = 1) against OpenMP (jobs > 1) for the exhaustive kernels.

#include <benchmark/benchmark.h>

#include <random>

#include "zsr/coloring.hpp"
#include "zsr/ramsey.hpp"
#include "zsr/zerosum.hpp"

using namespace zsr;

namespace {

SearchLimits jobs(const benchmark::State& state) {
    SearchLimits l;
    l.jobs = static_cast<int>(state.range(0));
    return l;
}

void BM_Davenport(benchmark::State& state) {
    const Group g = Group::parse("3,3,3");
    const auto limits = jobs(state);
    for (auto _ : state) benchmark::DoNotOptimize(davenport(g, limits).value);
}
BENCHMARK(BM_Davenport)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_EgzKemnitz(benchmark::State& state) {
    const Group g = Group::parse("3,3");
    const auto limits = jobs(state);
    for (auto _ : state) benchmark::DoNotOptimize(egz_invariant(g, 3, limits).value);
}
BENCHMARK(BM_EgzKemnitz)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_EgzZ4Squared(benchmark::State& state) {
    const Group g = Group::parse("4,4");
    const auto limits = jobs(state);
    for (auto _ : state) benchmark::DoNotOptimize(egz_invariant(g, 4, limits).value);
}
BENCHMARK(BM_EgzZ4Squared)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_FamilyMatching(benchmark::State& state) {
    const Group g = Group::parse("3");
    std::mt19937 rng(3);
    std::vector<int> colors(binomial(9, 3));
    for (auto& x : colors) x = 1 + static_cast<int>(rng() % 2);
    const Coloring c(g, 9, 3, colors);
    const auto limits = jobs(state);
    for (auto _ : state)
        benchmark::DoNotOptimize(find_zero_sum_family(c, {FamilyKind::matching, 0}, 3, limits).status);
}
BENCHMARK(BM_FamilyMatching)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_RamseyStarZ4(benchmark::State& state) {
    RamseyOptions o;
    o.limits = jobs(state);
    o.star_bound = false;
    const RamseyQuery q{Group::parse("4"), 2, 4, {FamilyKind::hyperstar, 0}};
    for (auto _ : state) benchmark::DoNotOptimize(exact_ramsey(q, o).lower);
}
BENCHMARK(BM_RamseyStarZ4)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_RamseyIntersectingZ3(benchmark::State& state) {
    RamseyOptions o;
    o.limits = jobs(state);
    const RamseyQuery q{Group::parse("3"), 3, 3, {FamilyKind::intersecting, 0}};
    for (auto _ : state) benchmark::DoNotOptimize(exact_ramsey(q, o).lower);
}
BENCHMARK(BM_RamseyIntersectingZ3)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_RamseyMatchingZ2(benchmark::State& state) {
    RamseyOptions o;
    o.limits = jobs(state);
    const RamseyQuery q{Group::parse("2"), 2, 4, {FamilyKind::matching, 0}};
    for (auto _ : state) benchmark::DoNotOptimize(exact_ramsey(q, o).lower);
}
BENCHMARK(BM_RamseyMatchingZ2)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
