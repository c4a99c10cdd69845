#include <benchmark/benchmark.h>

#include "legtri/arrows.hpp"
#include "legtri/delannoy.hpp"
#include "legtri/pulling.hpp"
#include "legtri/simion.hpp"

using namespace legtri;

namespace {

void BM_EnumerateFaces(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto faces = enumerate_faces(n);
    benchmark::DoNotOptimize(faces);
  }
}
BENCHMARK(BM_EnumerateFaces)->Arg(3)->Arg(4)->Arg(5)->Arg(6);

void BM_PullTriangulate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PullOrder order = make_order(n, OrderScheme::SimionCanonical);
  for (auto _ : state) {
    auto tri = pull_triangulate(n, order);
    benchmark::DoNotOptimize(tri);
  }
}
BENCHMARK(BM_PullTriangulate)->Arg(3)->Arg(4)->Arg(5);

void BM_PullTriangulateLex(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PullOrder order = make_order(n, OrderScheme::Lex);
  for (auto _ : state) {
    auto tri = pull_triangulate(n, order);
    benchmark::DoNotOptimize(tri);
  }
}
BENCHMARK(BM_PullTriangulateLex)->Arg(3)->Arg(4)->Arg(5);

void BM_CompatibilityPredicate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto arrows = all_arrows(n);
  for (auto _ : state) {
    long long compatible = 0;
    for (const Arrow& a : arrows)
      for (const Arrow& b : arrows) {
        if (a == b) continue;
        compatible += arrows_compatible(a, b) ? 1 : 0;
      }
    benchmark::DoNotOptimize(compatible);
  }
}
BENCHMARK(BM_CompatibilityPredicate)->Arg(6)->Arg(8);

void BM_PathEncodingRoundTrip(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<int> nodes(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) nodes[static_cast<size_t>(i)] = i + 1;
  const auto words = all_balanced_words(n);
  for (auto _ : state) {
    for (const std::string& w : words) {
      const Digraph g = dp_inverse(w, nodes);
      benchmark::DoNotOptimize(dp(g));
    }
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) *
                          static_cast<int64_t>(words.size()));
}
BENCHMARK(BM_PathEncodingRoundTrip)->Arg(3)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
