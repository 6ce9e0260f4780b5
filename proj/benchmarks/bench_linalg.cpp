#include <benchmark/benchmark.h>

#include <quiverhom/matrix.hpp>

using namespace quiverhom;

namespace {

void rank_prime(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    Rng rng(1);
    // rank n/2 so elimination does real work on the zero rows too
    auto m = random_matrix(n, n / 2, FieldSpec{}, rng) * random_matrix(n / 2, n, FieldSpec{}, rng);
    for (auto _: state) benchmark::DoNotOptimize(rank(m));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(rank_prime)->RangeMultiplier(2)->Range(16, 256)->Complexity(benchmark::oNCubed);

void rank_rational(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    Rng rng(2);
    const auto q = FieldSpec::rationals();
    auto m = random_matrix(n, n, q, rng, {9});
    for (auto _: state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(rank_rational)->RangeMultiplier(2)->Range(8, 64);

void kernel_prime(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    Rng rng(3);
    auto m = random_matrix(n / 2, n, FieldSpec{}, rng);
    for (auto _: state) benchmark::DoNotOptimize(kernel_basis(m));
}
BENCHMARK(kernel_prime)->RangeMultiplier(2)->Range(16, 128);

} // namespace
