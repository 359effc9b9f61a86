#include <benchmark/benchmark.h>

#include "rook/ideals.hpp"
#include "rook/serial_reference.hpp"

using namespace rook;

namespace {

AlgebraElement big_element(int n) { return quasi_idempotent_e(canonical_tableau_row(Partition({2, 1}), n)); }

void BM_MulParallel(benchmark::State& st) {
  const AlgebraElement a = big_element(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(mul(a, a));
}
void BM_MulSerial(benchmark::State& st) {
  const AlgebraElement a = big_element(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(serial::mul(a, a));
}

void BM_PhiParallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(phi_matrix(static_cast<int>(st.range(0)), static_cast<int>(st.range(1))));
}
void BM_PhiSerial(benchmark::State& st) {
  for (auto _ : st)
    benchmark::DoNotOptimize(serial::phi_matrix(static_cast<int>(st.range(0)), static_cast<int>(st.range(1))));
}

std::vector<SparseVector> phi_rows(int m, int n, std::size_t& cols) {
  const auto phi = phi_matrix(m, n);
  cols = phi.cols();
  std::vector<SparseVector> rows;
  for (auto& [r, v] : phi.row_vectors()) rows.push_back(v);
  return rows;
}

void BM_RowReduceParallel(benchmark::State& st) {
  std::size_t cols = 0;
  const auto rows = phi_rows(static_cast<int>(st.range(0)), static_cast<int>(st.range(1)), cols);
  for (auto _ : st) benchmark::DoNotOptimize(row_reduce(rows, cols));
}
void BM_RowReduceSerial(benchmark::State& st) {
  std::size_t cols = 0;
  const auto rows = phi_rows(static_cast<int>(st.range(0)), static_cast<int>(st.range(1)), cols);
  for (auto _ : st) benchmark::DoNotOptimize(serial::row_reduce(rows, cols));
}

}  // namespace

BENCHMARK(BM_MulParallel)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MulSerial)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PhiParallel)->Args({1, 4})->Args({2, 4})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PhiSerial)->Args({1, 4})->Args({2, 4})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RowReduceParallel)->Args({1, 3})->Args({1, 4})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RowReduceSerial)->Args({1, 3})->Args({1, 4})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
