#include <benchmark/benchmark.h>

#include <random>

#include "diagcat/commutant.hpp"
#include "diagcat/galois.hpp"
#include "diagcat/graph.hpp"
#include "diagcat/snf.hpp"

using namespace diagcat;

namespace {

IntMat random_matrix(std::mt19937& rng, std::size_t n, int bound) {
    std::uniform_int_distribution<int> d(-bound, bound);
    IntMat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
    return m;
}

void bm_smith_normal_form(benchmark::State& state) {
    std::mt19937 rng(1);
    IntMat m = random_matrix(rng, static_cast<std::size_t>(state.range(0)), 9);
    for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}

void bm_kernel_lattice(benchmark::State& state) {
    std::mt19937 rng(2);
    std::size_t n = static_cast<std::size_t>(state.range(0));
    IntMat m = random_matrix(rng, n, 4);
    for (std::size_t j = 0; j < n; ++j) m(n / 2, j) = m(0, j);  // force a kernel
    for (auto _ : state) benchmark::DoNotOptimize(kernel_lattice(m));
}

void bm_solve_many(benchmark::State& state) {
    std::mt19937 rng(3);
    std::size_t n = static_cast<std::size_t>(state.range(0));
    IntMat a = random_matrix(rng, n, 4);
    IntMat b = a * random_matrix(rng, n, 3);  // consistent by construction
    for (auto _ : state) benchmark::DoNotOptimize(solve_many_int(a, b));
}

void bm_compute_end_regular(benchmark::State& state) {
    // regular stage of the cyclic group of the given order
    std::size_t n = static_cast<std::size_t>(state.range(0));
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) table[i][j] = (i + j) % n;
    auto g = FiniteGroup::from_table(table);
    GSet reg = GSet::regular(g);
    std::vector<std::size_t> phi(n);
    for (std::size_t a = 0; a < n; ++a) phi[a] = a;
    auto t = build_galois_diagram<Int>(g, reg, {phi});
    for (auto _ : state) benchmark::DoNotOptimize(compute_end(t, t.diagram));
}

void bm_relative_homology(benchmark::State& state) {
    std::mt19937 rng(4);
    std::size_t n = static_cast<std::size_t>(state.range(0));
    GraphPair p;
    p.degree = 1;
    for (std::size_t i = 0; i < n; ++i) p.x.vertices.push_back("v" + std::to_string(i));
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t i = 0; i < 2 * n; ++i)
        p.x.edges.push_back({"e" + std::to_string(i), p.x.vertices[pick(rng)],
                             p.x.vertices[pick(rng)]});
    for (auto _ : state) benchmark::DoNotOptimize(relative_homology(p));
}

}  // namespace

BENCHMARK(bm_smith_normal_form)->Arg(8)->Arg(16)->Arg(32);
BENCHMARK(bm_kernel_lattice)->Arg(8)->Arg(16)->Arg(32);
BENCHMARK(bm_solve_many)->Arg(8)->Arg(16)->Arg(32);
BENCHMARK(bm_compute_end_regular)->Arg(4)->Arg(6)->Arg(8);
BENCHMARK(bm_relative_homology)->Arg(10)->Arg(20);

BENCHMARK_MAIN();
