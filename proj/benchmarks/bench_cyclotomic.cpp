#include <benchmark/benchmark.h>

#include <random>

#include "chered/cyclotomic.hpp"

using namespace chered;

namespace {

std::vector<Cyc> sample_elements(long order, int count) {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 3);
    std::vector<Cyc> out;
    while (static_cast<int>(out.size()) < count) {
        std::vector<Rat> c(euler_phi(order));
        for (auto& x : c) x = rat(num(rng), den(rng));
        Cyc v = Cyc::from_coeffs(order, std::move(c));
        if (!v.is_zero()) out.push_back(std::move(v));
    }
    return out;
}

void BM_cyc_mul(benchmark::State& state) {
    const long order = state.range(0);
    const auto xs = sample_elements(order, 64);
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(xs[i % 64] * xs[(i + 1) % 64]);
        ++i;
    }
}
BENCHMARK(BM_cyc_mul)->Arg(8)->Arg(20)->Arg(24)->Arg(60);

void BM_cyc_inverse(benchmark::State& state) {
    const long order = state.range(0);
    const auto xs = sample_elements(order, 64);
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(xs[i % 64].inverse());
        ++i;
    }
}
BENCHMARK(BM_cyc_inverse)->Arg(8)->Arg(20)->Arg(24);

}  // namespace
