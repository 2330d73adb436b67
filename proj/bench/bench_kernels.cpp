// Serial reference kernels against their OpenMP counterparts.
// Thread count follows OMP_NUM_THREADS.

#include <map>

#include <benchmark/benchmark.h>

#include "bch/eulerian.hpp"
#include "bch/identities.hpp"
#include "bch/matrix.hpp"
#include "bch/series.hpp"

namespace {

std::vector<bch::Generator> mixed_args(std::int64_t n)
{
    std::vector<bch::Generator> args;
    for (std::int64_t i = 0; i < n; ++i)
        args.push_back(i % 3 == 0 ? bch::X : bch::Y);
    return args;
}

// (A|I) for all grade-m commutators, the largest elimination the library does.
bch::ExactMatrix commutator_matrix(std::size_t grade)
{
    auto comms = bch::enumerate_nested(grade).entries;
    std::map<bch::Word, std::size_t> cols;
    for (const auto& c : comms)
        for (const auto& [w, coeff] : bch::expand_nested(c))
            cols.emplace(w, 0);
    std::size_t j = 0;
    for (auto& [w, idx] : cols)
        idx = j++;
    bch::ExactMatrix a(comms.size(), cols.size());
    for (std::size_t r = 0; r < comms.size(); ++r)
        for (const auto& [w, coeff] : bch::expand_nested(comms[r]))
            a.at(r, cols.at(w)) = coeff;
    return a.augmented_with_identity();
}

void BM_VarphiNested(benchmark::State& state)
{
    auto args = mixed_args(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(bch::varphi_nested(args));
}

void BM_VarphiNestedSerial(benchmark::State& state)
{
    auto args = mixed_args(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(bch::serial::varphi_nested(args));
}

void BM_PhiM(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(bch::phi_m(static_cast<std::size_t>(state.range(0))));
}

void BM_PhiMSerial(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(bch::serial::phi_m(static_cast<std::size_t>(state.range(0))));
}

void BM_GaussJordan(benchmark::State& state)
{
    auto a = commutator_matrix(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(bch::gauss_jordan(a));
}

void BM_GaussJordanSerial(benchmark::State& state)
{
    auto a = commutator_matrix(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(bch::serial::gauss_jordan(a));
}

}  // namespace

BENCHMARK(BM_VarphiNested)->DenseRange(7, 9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VarphiNestedSerial)->DenseRange(7, 9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PhiM)->DenseRange(7, 9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PhiMSerial)->DenseRange(7, 9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GaussJordan)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GaussJordanSerial)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
