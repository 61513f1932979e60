#include <benchmark/benchmark.h>

#include "harmonia/construct.hpp"
#include "harmonia/group.hpp"
#include "harmonia/oracle.hpp"
#include "harmonia/textio.hpp"

namespace {

void BM_Synthesize(benchmark::State& state, const char* spec) {
  const harmonia::FiniteGroup g = harmonia::make_builtin(spec);
  for (auto _ : state) {
    auto s = harmonia::synthesize(g);
    benchmark::DoNotOptimize(s.entries.data());
  }
}
BENCHMARK_CAPTURE(BM_Synthesize, cyclic81, "cyclic:81");
BENCHMARK_CAPTURE(BM_Synthesize, heisenberg3, "heisenberg:3");
BENCHMARK_CAPTURE(BM_Synthesize, frobenius13_3, "frobenius:13:3");
BENCHMARK_CAPTURE(BM_Synthesize, frobenius31_5, "frobenius:31:5");

void BM_ValidateTable(benchmark::State& state, const char* spec) {
  const harmonia::FiniteGroup g = harmonia::make_builtin(spec);
  std::vector<std::vector<harmonia::Element>> rows(g.order());
  for (int i = 0; i < g.order(); ++i) {
    const auto row = g.row(i);
    rows[i].assign(row.begin(), row.end());
  }
  for (auto _ : state) {
    auto validated = harmonia::from_cayley_table(rows);
    benchmark::DoNotOptimize(validated.order());
  }
}
BENCHMARK_CAPTURE(BM_ValidateTable, heisenberg3, "heisenberg:3");
BENCHMARK_CAPTURE(BM_ValidateTable, frobenius31_5, "frobenius:31:5");

void BM_DerivedSubgroup(benchmark::State& state, const char* spec) {
  const harmonia::FiniteGroup g = harmonia::make_builtin(spec);
  for (auto _ : state) {
    auto d = harmonia::derived_subgroup(g);
    benchmark::DoNotOptimize(d.members.data());
  }
}
BENCHMARK_CAPTURE(BM_DerivedSubgroup, heisenberg3, "heisenberg:3");
BENCHMARK_CAPTURE(BM_DerivedSubgroup, frobenius31_5, "frobenius:31:5");

void BM_SymmetricSearchExhaustive(benchmark::State& state, const char* spec) {
  const harmonia::FiniteGroup g = harmonia::make_builtin(spec);
  for (auto _ : state) {
    auto outcome = harmonia::search_symmetric_harmonious(g);
    benchmark::DoNotOptimize(outcome.nodes_visited);
  }
}
BENCHMARK_CAPTURE(BM_SymmetricSearchExhaustive, cyclic9, "cyclic:9");
BENCHMARK_CAPTURE(BM_SymmetricSearchExhaustive, cyclic13, "cyclic:13");
BENCHMARK_CAPTURE(BM_SymmetricSearchExhaustive, elementary2_3, "elementary2:3");

void BM_HarmoniousSearchExhaustive(benchmark::State& state, const char* spec) {
  const harmonia::FiniteGroup g = harmonia::make_builtin(spec);
  for (auto _ : state) {
    auto outcome = harmonia::search_harmonious(g);
    benchmark::DoNotOptimize(outcome.nodes_visited);
  }
}
BENCHMARK_CAPTURE(BM_HarmoniousSearchExhaustive, elementary2_3, "elementary2:3");
BENCHMARK_CAPTURE(BM_HarmoniousSearchExhaustive, cyclic7, "cyclic:7");

}  // namespace

BENCHMARK_MAIN();
