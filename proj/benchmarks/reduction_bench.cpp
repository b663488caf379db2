#include <benchmark/benchmark.h>

#include "pgsem/pregroup.hpp"

namespace {

using namespace pgsem;

// k nested "does not" frames around a transitive verb.
std::vector<SimpleType> stacked_negation(const TypeRegistry& reg, int k) {
  std::string text = "n n^r s j^l sigma";
  for (int i = 0; i < k; ++i) text += " sigma^r j j^l sigma";
  text += " sigma^r j n^l n";
  return parse_type(text, reg).simples;
}

TypeRegistry registry() {
  TypeRegistry reg;
  for (const char* n : {"n", "s", "j", "sigma"}) reg.add(n);
  return reg;
}

void BM_ReduceTo(benchmark::State& state) {
  const auto reg = registry();
  const TypePoset poset(reg.size());
  const auto types = stacked_negation(reg, static_cast<int>(state.range(0)));
  const auto target = parse_type("s", reg);
  for (auto _ : state) benchmark::DoNotOptimize(reduce_to(types, target, poset));
  state.SetComplexityN(static_cast<benchmark::IterationCount>(types.size()));
}
BENCHMARK(BM_ReduceTo)->RangeMultiplier(2)->Range(1, 32)->Complexity();

void BM_Greedy(benchmark::State& state) {
  const auto reg = registry();
  const TypePoset poset(reg.size());
  const auto types = stacked_negation(reg, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(greedy_reduce(types, poset));
}
BENCHMARK(BM_Greedy)->RangeMultiplier(2)->Range(1, 32);

}  // namespace
