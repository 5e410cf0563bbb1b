#include <benchmark/benchmark.h>

#include <vector>

#include "shepherd/ddpg/agent.hpp"
#include "shepherd/harness/trials.hpp"
#include "shepherd/hddpg/mission.hpp"

using namespace shepherd;

namespace {

void mission_batch(benchmark::State& state, harness::Execution exec, bool learned) {
  const ArenaConfig arena = Settings{}.arena(4, 4);
  const ddpg::DdpgAgent collect(ddpg::AgentConfig{}, 1), drive(ddpg::AgentConfig{}, 2);
  const hddpg::Controller controller = learned
                                           ? hddpg::learned_controller(collect, drive, std::nullopt)
                                           : hddpg::baseline_controller();
  const int trials = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto out = harness::run_mission_batch(controller, arena, Settings{}, 7, trials, 300, exec);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * trials);
}

void BM_BaselineBatchSerial(benchmark::State& s) { mission_batch(s, harness::Execution::Serial, false); }
void BM_BaselineBatchParallel(benchmark::State& s) { mission_batch(s, harness::Execution::Parallel, false); }
void BM_LearnedBatchSerial(benchmark::State& s) { mission_batch(s, harness::Execution::Serial, true); }
void BM_LearnedBatchParallel(benchmark::State& s) { mission_batch(s, harness::Execution::Parallel, true); }

BENCHMARK(BM_BaselineBatchSerial)->Arg(30)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_BaselineBatchParallel)->Arg(30)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_LearnedBatchSerial)->Arg(30)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_LearnedBatchParallel)->Arg(30)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_TrainStep(benchmark::State& state) {
  ddpg::DdpgAgent agent(ddpg::AgentConfig{}, 3);
  Rng rng(3);
  std::vector<ddpg::Transition> batch(32);
  for (auto& t : batch) {
    t.state = {uniform(rng, -2, 2), uniform(rng, -2, 2), uniform(rng, -2, 2), uniform(rng, -2, 2)};
    t.action = {uniform(rng, -1, 1), uniform(rng, -1, 1)};
    t.next_state = t.state;
    t.reward = 0.1;
  }
  for (auto _ : state) benchmark::DoNotOptimize(agent.train_step(batch));
}
BENCHMARK(BM_TrainStep)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
