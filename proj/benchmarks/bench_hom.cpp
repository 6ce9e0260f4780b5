#include <benchmark/benchmark.h>

#include <algorithm>

#include <quiverhom/exceptional.hpp>
#include <quiverhom/roots.hpp>
#include <quiverhom/suites.hpp>

using namespace quiverhom;

namespace {

// the largest exceptional representation of each extended E graph at level 1
std::vector<Representation> biggest_pair(const char* graph) {
    auto q = named_graph(graph);
    auto roots = real_roots_extended(q, 1);
    std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) { return a.total() > b.total(); });
    std::vector<Representation> out;
    for (const auto& r: roots) {
        auto res = construct_exceptional(q, r, {});
        if (auto* rep = std::get_if<Representation>(&res)) out.push_back(*rep);
        if (out.size() == 2) break;
    }
    return out;
}

void assemble(benchmark::State& state, const char* graph) {
    auto reps = biggest_pair(graph);
    for (auto _: state) benchmark::DoNotOptimize(assemble_F(reps[0], reps[1]));
    state.counters["cols"] = static_cast<double>(assemble_F(reps[0], reps[1]).cols());
}
BENCHMARK_CAPTURE(assemble, E6t, "E6t");
BENCHMARK_CAPTURE(assemble, E8t, "E8t");

void hom(benchmark::State& state, const char* graph) {
    auto reps = biggest_pair(graph);
    for (auto _: state) benchmark::DoNotOptimize(hom_report(reps[0], reps[1]));
}
BENCHMARK_CAPTURE(hom, E6t, "E6t");
BENCHMARK_CAPTURE(hom, E7t, "E7t");
BENCHMARK_CAPTURE(hom, E8t, "E8t");

void e6_pair_table(benchmark::State& state) {
    auto q = named_graph("E6");
    auto set = construct_all(q, positive_roots(q), {});
    for (auto _: state) benchmark::DoNotOptimize(pair_table(set.reps, set.labels));
}
BENCHMARK(e6_pair_table)->Unit(benchmark::kMillisecond);

void e8_roots(benchmark::State& state) {
    auto q = named_graph("E8");
    for (auto _: state) benchmark::DoNotOptimize(positive_roots(q));
}
BENCHMARK(e8_roots)->Unit(benchmark::kMicrosecond);

void construct_e8(benchmark::State& state) {
    auto q = named_graph("E8");
    auto roots = positive_roots(q);
    for (auto _: state) benchmark::DoNotOptimize(construct_all(q, roots, {}));
}
BENCHMARK(construct_e8)->Unit(benchmark::kMillisecond);

} // namespace
