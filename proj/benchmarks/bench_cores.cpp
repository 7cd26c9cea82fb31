// Microbenchmarks for the exhaustive-search cores and the counting paths
// they lean on. Inputs are fixed per size so runs are comparable.

#include <bicover/cover.hpp>
#include <bicover/gadget.hpp>
#include <bicover/matrix.hpp>
#include <bicover/witness.hpp>

#include <benchmark/benchmark.h>

#include <random>

using namespace bicover;

namespace
{
    CoverSpec truncated_star(int n)
    {
        auto cover = star_decomposition(n);
        cover.bicliques.resize(n - 2);
        return cover;
    }

    IntegerMatrix random_matrix(int rows, int cols, std::uint64_t seed)
    {
        std::mt19937_64 rng(seed);
        IntegerMatrix a{ rows, cols, {} };
        for (int i = 0; i < rows * cols; ++i)
            a.entries.push_back(static_cast<long long>(rng() % 11) - 5);
        return a;
    }
}

static void BM_VerifyCover(benchmark::State & state)
{
    const auto cover = star_decomposition(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_cover(cover));
}
BENCHMARK(BM_VerifyCover)->Arg(32)->Arg(128)->Arg(512);

static void BM_EdgeMultiplicities(benchmark::State & state)
{
    const auto cover = recursive_decomposition(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(edge_multiplicities(cover));
}
BENCHMARK(BM_EdgeMultiplicities)->Arg(32)->Arg(128)->Arg(512);

static void BM_PatternCollisionExhaustive(benchmark::State & state)
{
    const auto cover = truncated_star(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(find_pattern_collision(cover, 3,
                SearchStrategy::exhaustive, 0, 1000000));
}
BENCHMARK(BM_PatternCollisionExhaustive)->Arg(6)->Arg(8)->Arg(10);

static void BM_PatternCollisionBirthday(benchmark::State & state)
{
    // few bicliques relative to n: the regime where sampling beats scanning
    auto cover = star_decomposition(static_cast<int>(state.range(0)));
    cover.bicliques.resize(3);
    for (auto _ : state)
        benchmark::DoNotOptimize(find_pattern_collision(cover,
                static_cast<int>(state.range(0)), SearchStrategy::birthday, 1, 1000000));
}
BENCHMARK(BM_PatternCollisionBirthday)->Arg(8)->Arg(12)->Arg(16);

static void BM_KernelSearch(benchmark::State & state)
{
    // three fixed bicliques leave the kernel search real work at bound 1..2
    CoverSpec cover{ static_cast<int>(state.range(0)), {
            { { 1, 2 }, { 3 } }, { { 2, 3 }, { 4 } }, { { 1, 4 }, { 2 } } } };
    for (auto _ : state)
        benchmark::DoNotOptimize(witness_by_kernel_search(cover, 2));
}
BENCHMARK(BM_KernelSearch)->Arg(6)->Arg(8)->Arg(10);

static void BM_Refute(benchmark::State & state)
{
    const auto cover = truncated_star(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(refute(cover));
}
BENCHMARK(BM_Refute)->Arg(6)->Arg(10)->Arg(14);

static void BM_QuadraticDefect(benchmark::State & state)
{
    const int n = static_cast<int>(state.range(0));
    const auto cover = star_decomposition(n);
    std::mt19937_64 rng(5);
    std::vector<long long> tau;
    for (int i = 0; i < n; ++i)
        tau.push_back(static_cast<long long>(rng() % 17) - 8);
    for (auto _ : state)
        benchmark::DoNotOptimize(quadratic_defect(tau, cover));
}
BENCHMARK(BM_QuadraticDefect)->Arg(32)->Arg(128);

static void BM_BuildGadgets(benchmark::State & state)
{
    const int parts = static_cast<int>(state.range(0));
    PartSizes sizes;
    for (int i = 0; i < parts; ++i) {
        sizes.p.push_back(3);
        sizes.q.push_back(3);
    }
    for (auto _ : state)
        benchmark::DoNotOptimize(build_gadgets(sizes));
}
BENCHMARK(BM_BuildGadgets)->Arg(4)->Arg(8)->Arg(16);

static void BM_MatrixCollision(benchmark::State & state)
{
    const auto a = random_matrix(2, static_cast<int>(state.range(0)), 11);
    for (auto _ : state)
        benchmark::DoNotOptimize(matrix_collision(a, 6, SearchStrategy::exhaustive, 0, 2000000));
}
BENCHMARK(BM_MatrixCollision)->Arg(5)->Arg(7);

BENCHMARK_MAIN();
