#include <benchmark/benchmark.h>

#include "vmts/bonds.hpp"
#include "vmts/checkers.hpp"
#include "vmts/social.hpp"
#include "vmts/toychain.hpp"

using namespace vmts;

namespace {

AgentSet make_agents(int n) {
  AgentSet out;
  for (int i = 0; i < n; ++i) out.insert(AgentId(std::string(1, char('a' + i))));
  return out;
}

Configuration funded_gcb(const ProtocolInstance& inst) {
  Configuration c = inst.initial();
  for (const auto& p : inst.agents()) {
    Configuration willed = change_volition(p, {gcb::mint_key(p, 3, 1)}, c, inst.universe());
    c = fire({gcb::mint_txn(willed, p, 3, 1), {p}}, willed, inst.class_of());
  }
  return c;
}

void BM_SgGenerate(benchmark::State& state) {
  const AgentSet agents = make_agents(static_cast<int>(state.range(0)));
  ProtocolInstance inst(sg::sg_protocol(), agents, {});
  const Configuration c = inst.initial();
  for (auto _ : state) {
    benchmark::DoNotOptimize(sg::sg_generate(agents, c, {}));
  }
}
BENCHMARK(BM_SgGenerate)->Arg(5)->Arg(10);

void BM_GcbGenerate(benchmark::State& state) {
  const AgentSet agents = make_agents(4);
  ProtocolInstance inst(gcb::gcb_protocol(), agents, {3, 3, 2});
  const Configuration c = funded_gcb(inst);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gcb::gcb_generate(agents, c, {3, 3, 2}));
  }
}
BENCHMARK(BM_GcbGenerate);

void BM_ReplaySocialRun(benchmark::State& state) {
  const AgentSet agents = make_agents(4);
  ProtocolInstance inst(sg::sg_protocol(), agents, {});
  Trace trace{inst.initial(), {}, std::nullopt};
  Configuration c = trace.initial;
  const std::vector<AgentId> ids(agents.begin(), agents.end());
  for (std::size_t i = 0; i + 1 < ids.size(); ++i) {
    const ClassKey key = sg::befriend_key(ids[i], ids[i + 1]);
    for (const AgentId& who : {ids[i], ids[i + 1]}) {
      ClassKeySet v = c.at(who).volition;
      v.insert(key);
      c = change_volition(who, v, c, inst.universe());
      trace.steps.push_back(ChangeVolitionStep{who, std::move(v)});
    }
    GuardedTransaction gt{sg::befriend_txn(c, ids[i], ids[i + 1]), {ids[i], ids[i + 1]}};
    c = fire(gt, c, inst.class_of());
    trace.steps.push_back(FireStep{gt});
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(replay(trace, inst));
  }
}
BENCHMARK(BM_ReplaySocialRun);

void BM_CheckLassoBonds(benchmark::State& state) {
  const AgentSet agents = make_agents(4);
  ProtocolInstance inst(gcb::gcb_protocol(), agents, {1, 1, 1});
  Trace trace{inst.initial(), {}, 0};
  Configuration c = trace.initial;
  for (const auto& p : agents) {
    auto adv = gcb::advance_txn(c, p, std::get<gcb::GcbState>(c.at(p).machine).local_date + 1);
    GuardedTransaction gt{std::move(*adv), {}};
    c = fire(gt, c, inst.class_of());
    trace.steps.push_back(FireStep{gt});
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_lasso(trace, inst));
  }
}
BENCHMARK(BM_CheckLassoBonds);

void BM_ObliviousSocialPair(benchmark::State& state) {
  for (auto _ : state) {
    auto result = check_oblivious(sg::sg_protocol(), make_agents(1), {AgentId("z")},
                                  RunBounds{3, {}, 1'000'000}, Semantics::Terminal);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_ObliviousSocialPair);

void BM_GuardCheckToychain(benchmark::State& state) {
  const AgentId q("q"), r("r");
  for (auto _ : state) {
    auto result = guard_check(toychain::toychain_protocol({q, r}), {q}, {r},
                              RunBounds{3, {1, 2, 1}, 1'000'000});
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_GuardCheckToychain);

void BM_InteractivityWitnessBonds(benchmark::State& state) {
  const AgentSet left{AgentId("a")};
  const AgentSet right{AgentId("b")};
  for (auto _ : state) {
    auto result = find_interactivity_witness(gcb::gcb_protocol(), left, right,
                                             RunBounds{7, {1, 1, 1}, 10'000'000},
                                             Semantics::Lasso);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_InteractivityWitnessBonds);

}  // namespace

BENCHMARK_MAIN();
