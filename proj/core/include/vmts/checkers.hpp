#ifndef VMTS_CHECKERS_HPP_
#define VMTS_CHECKERS_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "vmts/interleaving.hpp"
#include "vmts/liveness.hpp"
#include "vmts/protocol.hpp"

namespace vmts {

// Bounds for run enumeration and state exploration: step count, generation
// bounds, and a node budget capping total search effort.
struct RunBounds {
  std::size_t max_steps = 4;
  GenerationBounds generation{};
  std::size_t node_budget = 10'000'000;
};

struct BudgetCounter {
  std::size_t used = 0;
  std::size_t limit = 0;
  bool exceeded = false;

  // False once the budget is exhausted.
  bool spend(std::size_t n = 1) {
    used += n;
    if (limit > 0 && used > limit) exceeded = true;
    return !exceeded;
  }
};

// All correct runs of the instance within the bounds, deduplicated by
// configuration sequence and ordered deterministically. Under terminal
// semantics these are the loopless runs with no enabled class at the end;
// under lasso semantics each enumerated prefix is closed with a canonical
// loop firing one member of every class enabled at the prefix end (prefixes
// whose loop is invalid or incorrect yield nothing). Change-volition steps
// toggle one key of a currently generated transaction whose guard contains
// the willing agent.
std::vector<Trace> enumerate_correct_runs(const ProtocolInstance& instance,
                                          Semantics semantics, const RunBounds& bounds,
                                          BudgetCounter& budget);

struct GuardCheckResult {
  bool ok = true;
  // One offender per offending class.
  std::vector<GuardedTransaction> offenders;
  bool budget_exceeded = false;
  std::size_t configurations_visited = 0;
};

// Explores the reachable configurations of the combined system within the
// bounds and checks that every cross-group transaction generated anywhere has
// a nonempty guard: the syntactic obliviousness condition.
GuardCheckResult guard_check(const ProtocolSpec& spec, const AgentSet& group_a,
                             const AgentSet& group_b, const RunBounds& bounds);

struct InterleavingCounterexample {
  Trace left;
  Trace right;
  InterleavingSchedule prefix_schedule;
  InterleavingSchedule loop_schedule;
  Trace combined;
  ClassKeySet pending;
  std::optional<StepFailure> replay_failure;  // set if the interleaving is not even a run
  std::optional<std::string> lasso_defect;
};

struct ObliviousResult {
  bool oblivious = false;
  std::optional<InterleavingCounterexample> counterexample;
  bool budget_exceeded = false;
  std::size_t nodes = 0;
  std::size_t runs_left = 0;
  std::size_t runs_right = 0;
  std::size_t interleavings_checked = 0;
};

// Enumerates all correct runs of both groups within the bounds and checks
// every interleaving of every pair for correctness in the combined system.
// Lasso runs are interleaved prefix-with-prefix and loop-with-loop, the
// combined loop firing both loops once each.
ObliviousResult check_oblivious(const ProtocolSpec& spec, const AgentSet& group_a,
                                const AgentSet& group_b, const RunBounds& bounds,
                                Semantics semantics);

struct WitnessResult {
  std::optional<Trace> witness;
  std::optional<ClassKey> cross_class;
  bool budget_exceeded = false;
  std::size_t nodes = 0;
};

// Searches for a correct run of the combined system that fires a transaction
// whose participants span both groups; such a step changes local states in
// both groups, so the run differs from every interleaving. Iterative
// deepening with cross-transaction-first move ordering, trying a search
// restricted to the least agent of each group before the full move set.
// Every returned witness is re-verified correct.
WitnessResult find_interactivity_witness(const ProtocolSpec& spec, const AgentSet& group_a,
                                         const AgentSet& group_b, const RunBounds& bounds,
                                         Semantics semantics);

struct GrassrootsResult {
  bool grassroots = false;
  ObliviousResult oblivious;
  WitnessResult interactivity;
  // "oblivious", "interactive", or empty when grassroots.
  std::string failed_conjunct;
};

GrassrootsResult check_grassroots(const ProtocolSpec& spec, const AgentSet& group_a,
                                  const AgentSet& group_b, const RunBounds& bounds,
                                  Semantics semantics);

}  // namespace vmts

#endif  // VMTS_CHECKERS_HPP_
