#include <benchmark/benchmark.h>

#include "chered/cherednik.hpp"

using namespace chered;

namespace {

// Gram assembly + rank per slice; the degree argument controls how deep
// the fraction growth gets.
void BM_gram_rank(benchmark::State& state) {
    const int degree = static_cast<int>(state.range(0));
    for (auto _ : state) {
        StandardModule mod(Params::even(8, rat(3, 2), rat(3, 2)), IrrepLabel::triv());
        long acc = 0;
        for (int n = 0; n <= degree; ++n) acc += mod.gram_rank(n);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_gram_rank)->Arg(8)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_singular_slice(benchmark::State& state) {
    const int degree = static_cast<int>(state.range(0));
    for (auto _ : state) {
        StandardModule mod(Params::odd(5, rat(2, 5)), IrrepLabel::tau(1));
        benchmark::DoNotOptimize(mod.singular_vectors(degree).dim());
    }
}
BENCHMARK(BM_singular_slice)->Arg(6)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

void BM_relation_check(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(algebra_relation_check(Params::even(6, rat(1, 3), rat(1, 5)),
                                                        static_cast<int>(state.range(0)))
                                     .pass);
    }
}
BENCHMARK(BM_relation_check)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
