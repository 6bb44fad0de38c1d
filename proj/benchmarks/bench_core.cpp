#include <benchmark/benchmark.h>

#include "c2eff/pages.hpp"

namespace {

using namespace c2eff;

void BM_F2MultiplyWindow(benchmark::State& state) {
    auto basis = f2_enumerate(Window::centered(12, 12));
    for (auto _ : state)
        for (const auto& [dx, x] : basis)
            for (const auto& [dy, y] : basis)
                benchmark::DoNotOptimize(f2_multiply(x, y));
}
BENCHMARK(BM_F2MultiplyWindow);

void BM_E1Enumerate(benchmark::State& state) {
    Window win = Window::centered(static_cast<int>(state.range(0)),
                                  static_cast<int>(state.range(0)),
                                  static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(e1_enumerate(win));
}
BENCHMARK(BM_E1Enumerate)->Arg(8)->Arg(16);

void BM_E1D1Window(benchmark::State& state) {
    auto basis = e1_enumerate(Window::centered(10, 10, 12));
    for (auto _ : state)
        for (const auto& b : basis) benchmark::DoNotOptimize(e1_d1(b));
}
BENCHMARK(BM_E1D1Window);

void BM_E2GroupWindow(benchmark::State& state) {
    Window win = Window::centered(static_cast<int>(state.range(0)),
                                  static_cast<int>(state.range(0)),
                                  static_cast<int>(state.range(0)));
    for (auto _ : state) {
        // fresh engine each pass so the homology is actually recomputed
        E2Engine engine;
        for (int s = win.s_min; s <= win.s_max; ++s)
            for (int w = win.w_min; w <= win.w_max; ++w)
                for (int q = 0; q <= win.q_max; ++q) {
                    TriDegree t{s, q, w};
                    if (!engine.basis(t).empty())
                        benchmark::DoNotOptimize(engine.group(t));
                }
    }
}
BENCHMARK(BM_E2GroupWindow)->Arg(6)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
