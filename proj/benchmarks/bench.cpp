#include <benchmark/benchmark.h>

#include "swapkit/nmatrix.hpp"
#include "swapkit/random.hpp"
#include "swapkit/swap.hpp"

using namespace swapkit;

namespace {

const Logic kLogics[] = {Logic::CPLeP, Logic::MbC, Logic::MbCciw, Logic::MbCci,
                         Logic::Ci,    Logic::CPLe, Logic::LFI1o, Logic::Ciore};

void BM_FullSwap(benchmark::State& state) {
  const Logic l = kLogics[state.range(0)];
  const BoolAlg a(static_cast<unsigned>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(full_swap(l, a));
  state.SetLabel(std::string(logic_name(l)));
}
BENCHMARK(BM_FullSwap)->ArgsProduct({{1, 4, 6}, {1, 2, 3}});

void BM_Decide(benchmark::State& state) {
  const Logic l = kLogics[state.range(0)];
  const Nmatrix m = characteristic_matrix(l);
  Rng rng(7);
  std::vector<Formula> goals;
  for (int i = 0; i < 64; ++i) goals.push_back(random_formula(rng, {"p", "q", "r"}, static_cast<unsigned>(state.range(1))));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(decide(m, {}, goals[i++ % goals.size()]));
  state.SetLabel(std::string(logic_name(l)));
}
BENCHMARK(BM_Decide)->ArgsProduct({{1, 4, 6}, {3, 5}});

void BM_Characterize(benchmark::State& state) {
  const Logic l = kLogics[state.range(0)];
  const SwapStructure b = full_swap(l, BoolAlg(2));
  for (auto _ : state) benchmark::DoNotOptimize(characterize(l, b));
  state.SetLabel(std::string(logic_name(l)));
}
BENCHMARK(BM_Characterize)->DenseRange(1, 7);

void BM_Represent(benchmark::State& state) {
  const Logic l = kLogics[state.range(0)];
  const SwapStructure b = full_swap(l, BoolAlg(static_cast<unsigned>(state.range(1))));
  for (auto _ : state) benchmark::DoNotOptimize(represent(l, b));
  state.SetLabel(std::string(logic_name(l)));
}
BENCHMARK(BM_Represent)->ArgsProduct({{1, 4, 6}, {2, 3}});

}  // namespace

BENCHMARK_MAIN();
