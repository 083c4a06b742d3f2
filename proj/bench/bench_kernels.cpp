// Serial against OpenMP paths for the three hot kernels. Set
// OMP_NUM_THREADS to compare thread counts.
#include <bolalg/algebra.hpp>
#include <bolalg/cohomology.hpp>
#include <bolalg/linalg.hpp>
#include <bolalg/representation.hpp>

#include <benchmark/benchmark.h>

#include <random>

using namespace bolalg;

namespace {

Mat random_matrix(std::size_t rows, std::size_t cols, unsigned seed) {
    std::mt19937 gen(seed);
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
    Mat m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = Scalar(num(gen), den(gen));
    return m;
}

// Associated Bol algebra of the 4-dimensional Maltsev algebra
// e1e2 = -e2, e1e3 = -e3, e1e4 = e4, e2e3 = 2e4.
BolAlgebra four_dim() {
    auto v = [](std::size_t a, int s) {
        Vec x(4);
        x[a] = s;
        return x;
    };
    return maltsev_to_bol(MaltsevAlgebra::from_entries(4, {{0, 1, v(1, -1)}, {0, 2, v(2, -1)}, {0, 3, v(3, 1)},
                                                           {1, 2, v(3, 2)}}));
}

void BM_rref_reference(benchmark::State& st) {
    const Mat m = random_matrix(st.range(0), st.range(0), 7);
    for (auto _ : st) benchmark::DoNotOptimize(reference::rref(m));
}

template <Exec E>
void BM_rref(benchmark::State& st) {
    const Mat m = random_matrix(st.range(0), st.range(0), 7);
    for (auto _ : st) benchmark::DoNotOptimize(rref(m, E));
}

template <Exec E>
void BM_cocycle_constraints(benchmark::State& st) {
    const Representation r = adjoint_representation(four_dim());
    for (auto _ : st) benchmark::DoNotOptimize(cocycle_constraints(r, E));
}

template <Exec E>
void BM_coboundary_matrix(benchmark::State& st) {
    const Representation r = adjoint_representation(four_dim());
    for (auto _ : st) benchmark::DoNotOptimize(coboundary_matrix(r, E));
}

template <Exec E>
void BM_verify_bol(benchmark::State& st) {
    const BolAlgebra b = four_dim();
    for (auto _ : st) benchmark::DoNotOptimize(verify_bol(b, E));
}

} // namespace

BENCHMARK(BM_rref_reference)->Arg(24)->Arg(48)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_rref<Exec::serial>)->Arg(24)->Arg(48)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_rref<Exec::parallel>)->Arg(24)->Arg(48)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_cocycle_constraints<Exec::serial>)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_cocycle_constraints<Exec::parallel>)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_coboundary_matrix<Exec::serial>)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_coboundary_matrix<Exec::parallel>)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_verify_bol<Exec::serial>)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_verify_bol<Exec::parallel>)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
