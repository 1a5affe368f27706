#include <benchmark/benchmark.h>

#include "shiftlab/characters.hpp"
#include "shiftlab/qseries.hpp"
#include "shiftlab/shift.hpp"

using namespace shiftlab;

namespace {

// p(n) coefficients: big integers, so the GMP path runs
std::vector<BigInt> big_coeffs(long n) { return eta_inv_pow(1, n).coeffs(); }
// eta^r coefficients stay small and take the 128-bit path
std::vector<BigInt> small_coeffs(long n) { return eta_pow(1, n).coeffs(); }

void BM_conv_serial_big(benchmark::State& st) {
    auto a = big_coeffs(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(conv_serial(a, a, a.size()));
}

void BM_conv_parallel_big(benchmark::State& st) {
    auto a = big_coeffs(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(conv_parallel(a, a, a.size()));
}

void BM_conv_serial_small(benchmark::State& st) {
    auto a = small_coeffs(st.range(0));
    auto b = eta_inv_pow(3, st.range(0)).coeffs();
    for (auto& x : b) x %= 1000003;
    for (auto _ : st) benchmark::DoNotOptimize(conv_serial(a, b, a.size()));
}

void BM_conv_parallel_small(benchmark::State& st) {
    auto a = small_coeffs(st.range(0));
    auto b = eta_inv_pow(3, st.range(0)).coeffs();
    for (auto& x : b) x %= 1000003;
    for (auto _ : st) benchmark::DoNotOptimize(conv_parallel(a, b, a.size()));
}

const char* kTypes[] = {"B2", "A3", "C3", "B3"};

void BM_axioms_table_parallel(benchmark::State& st) {
    ShiftSystem sys(make_case(kTypes[st.range(0)], Variant::NonSuper, 3), true);
    for (auto _ : st) benchmark::DoNotOptimize(verify_axioms(sys, true));
}

void BM_axioms_table_serial(benchmark::State& st) {
    ShiftSystem sys(make_case(kTypes[st.range(0)], Variant::NonSuper, 3), false);
    for (auto _ : st) benchmark::DoNotOptimize(verify_axioms(sys, false));
}

void BM_axioms_reference(benchmark::State& st) {
    ShiftCase c = make_case(kTypes[st.range(0)], Variant::NonSuper, 3);
    for (auto _ : st) benchmark::DoNotOptimize(verify_axioms_reference(c));
}

void BM_table_build(benchmark::State& st) {
    ShiftCase c = make_case(kTypes[st.range(0)], Variant::NonSuper, 3);
    for (auto _ : st) benchmark::DoNotOptimize(ShiftSystem(c, st.range(1) != 0));
}

void BM_ft_char(benchmark::State& st) {
    ShiftSystem sys(make_case("A2", Variant::NonSuper, 2));
    for (auto _ : st) benchmark::DoNotOptimize(ft_char(sys, 0, CharKind::Ch, st.range(0)));
}

}  // namespace

BENCHMARK(BM_conv_serial_big)->Arg(1000)->Arg(5000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_conv_parallel_big)->Arg(1000)->Arg(5000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_conv_serial_small)->Arg(5000)->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_conv_parallel_small)->Arg(5000)->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_axioms_table_parallel)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_axioms_table_serial)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_axioms_reference)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_table_build)->ArgsProduct({{0, 1, 2, 3}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ft_char)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
