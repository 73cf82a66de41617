#include <causekit/causal.hpp>
#include <causekit/hitset.hpp>
#include <causekit/repair.hpp>
#include <causekit/support.hpp>

#include <benchmark/benchmark.h>

#include <string>

using namespace causekit;

namespace {

// {a(i), b(i) : i = 1..n} with q :- a(X), b(X): n disjoint witnesses, so
// a(1) has 2^(n-1) contingency sets and responsibility 1/n.
struct Matching {
    Instance instance;
    UCQ query;
};

Matching matching(std::size_t n) {
    std::string text;
    for (std::size_t i = 1; i <= n; ++i)
        text += "a(" + std::to_string(i) + "). b(" + std::to_string(i) + ").\n";
    return {parse_instance(text), as_query(parse_program("q :- a(X), b(X)."))};
}

void BM_Responsibility(benchmark::State& state) {
    const auto m = matching(static_cast<std::size_t>(state.range(0)));
    const auto t = parse_tuple("a(1)");
    for (auto _ : state)
        benchmark::DoNotOptimize(responsibility(m.instance, m.query, t));
}
BENCHMARK(BM_Responsibility)->DenseRange(4, 16, 4);

void BM_Contingencies(benchmark::State& state) {
    const auto m = matching(static_cast<std::size_t>(state.range(0)));
    const auto t = parse_tuple("a(1)");
    for (auto _ : state)
        benchmark::DoNotOptimize(minimal_contingencies(m.instance, m.query, t));
}
BENCHMARK(BM_Contingencies)->DenseRange(4, 12, 4);

void BM_SupportFamily(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::string text;
    for (std::size_t i = 0; i < n; ++i)
        text += "r(c" + std::to_string(i) + ",c" + std::to_string((i * 7 + 3) % n) + "). s(c" + std::to_string(i) +
                ").\n";
    const auto d = parse_instance(text);
    const auto q = as_query(parse_program("q :- s(X), r(X,Y), s(Y)."));
    for (auto _ : state)
        benchmark::DoNotOptimize(support_family(q, d));
}
BENCHMARK(BM_SupportFamily)->RangeMultiplier(4)->Range(16, 1024);

// Path graph: its minimal vertex covers number grows like Fibonacci.
void BM_MinimalHittingSets(benchmark::State& state) {
    const auto n = static_cast<Vertex>(state.range(0));
    VertexSet vertices;
    std::vector<VertexSet> edges;
    for (Vertex i = 0; i < n; ++i) {
        vertices.push_back(i);
        if (i + 1 < n)
            edges.push_back({i, i + 1});
    }
    const Hypergraph h(vertices, edges);
    for (auto _ : state)
        benchmark::DoNotOptimize(minimal_hitting_sets(h));
}
BENCHMARK(BM_MinimalHittingSets)->DenseRange(8, 24, 8);

void BM_Repairs(benchmark::State& state) {
    const auto m = matching(static_cast<std::size_t>(state.range(0)));
    const auto sigma = ucq_to_dcs(m.query);
    for (auto _ : state)
        benchmark::DoNotOptimize(repairs(m.instance, sigma, Semantics::cardinality));
}
BENCHMARK(BM_Repairs)->DenseRange(4, 12, 4);

} // namespace

BENCHMARK_MAIN();
