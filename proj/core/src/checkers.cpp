#include "vmts/checkers.hpp"

#include <algorithm>
#include <deque>

namespace vmts {

namespace {

struct Move {
  Step step;
  Configuration next;
  int rank = 0;  // lower expands first
};

bool txn_is_cross(const MachineTransaction& t, const AgentSet& group_a,
                  const AgentSet& group_b) {
  bool in_a = false;
  bool in_b = false;
  for (const auto& [p, s] : t.pre) {
    in_a = in_a || group_a.contains(p);
    in_b = in_b || group_b.contains(p);
  }
  return in_a && in_b;
}

struct MoveOptions {
  // Restrict fires to transactions whose participants lie inside this set and
  // wills to these agents (witness search, phase one).
  const AgentSet* only_agents = nullptr;
  // When set, rank cross-group moves first.
  const AgentSet* group_a = nullptr;
  const AgentSet* group_b = nullptr;
};

std::vector<Move> successor_moves(const Configuration& c, const ProtocolInstance& inst,
                                  const MoveOptions& opts) {
  const auto& transactions = inst.transactions_at(c);
  const bool ranked = opts.group_a != nullptr && opts.group_b != nullptr;
  std::vector<Move> moves;

  auto participants_allowed = [&](const MachineTransaction& t) {
    if (!opts.only_agents) return true;
    for (const auto& [p, s] : t.pre) {
      if (!opts.only_agents->contains(p)) return false;
    }
    return true;
  };

  // Fires: one move per distinct machine transaction with an enabled variant.
  std::set<MachineTransaction> fired;
  for (const auto& gt : transactions) {
    if (!participants_allowed(gt.txn)) continue;
    if (fired.contains(gt.txn)) continue;
    if (!enabled(gt, c, inst.class_of())) continue;
    fired.insert(gt.txn);
    const bool cross = ranked && txn_is_cross(gt.txn, *opts.group_a, *opts.group_b);
    Move m;
    m.step = FireStep{gt};
    m.next = fire(gt, c, inst.class_of());
    m.rank = cross ? 0 : 2;
    moves.push_back(std::move(m));
  }

  // Volition toggles: one key of a generated transaction whose guard contains
  // the willing agent, added or removed.
  ClassKeySet cross_keys;
  if (ranked) {
    for (const auto& gt : transactions) {
      if (txn_is_cross(gt.txn, *opts.group_a, *opts.group_b)) {
        cross_keys.insert(inst.class_key_of(gt.txn));
      }
    }
  }
  for (const auto& [agent, state] : c.agents()) {
    if (opts.only_agents && !opts.only_agents->contains(agent)) continue;
    ClassKeySet willable;
    for (const auto& gt : transactions) {
      if (!gt.guard.contains(agent)) continue;
      if (opts.only_agents && !participants_allowed(gt.txn)) continue;
      const ClassKey key = inst.class_key_of(gt.txn);
      if (inst.universe().contains(key)) willable.insert(key);
    }
    for (const auto& key : willable) {
      const bool adding = !state.volition.contains(key);
      ClassKeySet next_volition = state.volition;
      if (adding) {
        next_volition.insert(key);
      } else {
        next_volition.erase(key);
      }
      Move m;
      m.step = ChangeVolitionStep{agent, next_volition};
      Configuration next = c;
      next.at(agent).volition = std::move(next_volition);
      m.next = std::move(next);
      if (!ranked) {
        m.rank = 3;
      } else if (adding && cross_keys.contains(key)) {
        m.rank = 1;
      } else {
        m.rank = adding ? 3 : 4;
      }
      moves.push_back(std::move(m));
    }
  }

  if (ranked) {
    std::stable_sort(moves.begin(), moves.end(),
                     [](const Move& a, const Move& b) { return a.rank < b.rank; });
  }
  return moves;
}

// Appends, for each class enabled at `c`, one fire of an enabled member, in
// class order. Returns nullopt if some class loses all enabled members before
// its turn.
std::optional<std::vector<Step>> canonical_closing_loop(const Configuration& c,
                                                        const ProtocolInstance& inst) {
  std::vector<Step> loop;
  Configuration current = c;
  for (const auto& key : inst.enabled_class_set(c)) {
    bool found = false;
    for (const auto& gt : inst.transactions_at(current)) {
      if (!(inst.class_key_of(gt.txn) == key)) continue;
      if (!enabled(gt, current, inst.class_of())) continue;
      current = fire(gt, current, inst.class_of());
      loop.push_back(FireStep{gt});
      found = true;
      break;
    }
    if (!found) return std::nullopt;
  }
  return loop;
}

}  // namespace

std::vector<Trace> enumerate_correct_runs(const ProtocolInstance& instance,
                                          Semantics semantics, const RunBounds& bounds,
                                          BudgetCounter& budget) {
  std::vector<Trace> out;
  std::set<std::vector<Configuration>> seen;

  auto record_if_correct = [&](const std::vector<Configuration>& configs,
                               const std::vector<Step>& steps) {
    const Configuration& last = configs.back();
    const ClassKeySet enabled_now = instance.enabled_class_set(last);
    if (enabled_now.empty()) {
      // No obligation left: a correct finite run under either semantics.
      if (seen.insert(configs).second) {
        out.push_back(Trace{configs.front(), steps, std::nullopt});
      }
      return;
    }
    if (semantics != Semantics::Lasso) return;
    auto loop = canonical_closing_loop(last, instance);
    if (!loop || loop->empty()) return;
    Trace candidate{configs.front(), steps, steps.size()};
    candidate.steps.insert(candidate.steps.end(), loop->begin(), loop->end());
    budget.spend(loop->size());
    try {
      if (!check_lasso(candidate, instance).correct) return;
    } catch (const NotALassoError&) {
      return;
    } catch (const ReplayError&) {
      return;
    }
    std::vector<Configuration> full = replay_or_throw(candidate, instance);
    if (seen.insert(full).second) out.push_back(std::move(candidate));
  };

  std::vector<Configuration> configs{instance.initial()};
  std::vector<Step> steps;

  std::function<void()> dfs = [&]() {
    if (!budget.spend()) return;
    record_if_correct(configs, steps);
    if (steps.size() >= bounds.max_steps) return;
    for (auto& move : successor_moves(configs.back(), instance, {})) {
      configs.push_back(std::move(move.next));
      steps.push_back(std::move(move.step));
      dfs();
      configs.pop_back();
      steps.pop_back();
      if (budget.exceeded) return;
    }
  };
  dfs();
  return out;
}

GuardCheckResult guard_check(const ProtocolSpec& spec, const AgentSet& group_a,
                             const AgentSet& group_b, const RunBounds& bounds) {
  GuardCheckResult result;
  const AgentSet combined = agent_set_union(group_a, group_b);
  ProtocolInstance instance(spec, combined, bounds.generation);
  BudgetCounter budget{0, bounds.node_budget, false};

  ClassKeySet offending_classes;
  std::set<Configuration> visited;
  std::deque<std::pair<Configuration, std::size_t>> frontier;
  frontier.emplace_back(instance.initial(), 0);
  visited.insert(frontier.front().first);

  while (!frontier.empty()) {
    auto [c, depth] = std::move(frontier.front());
    frontier.pop_front();
    if (!budget.spend()) {
      result.budget_exceeded = true;
      break;
    }
    ++result.configurations_visited;
    for (const auto& gt : cross_transactions(spec, group_a, group_b, c, bounds.generation)) {
      if (!gt.guard.empty()) continue;
      const ClassKey key = instance.class_key_of(gt.txn);
      if (offending_classes.insert(key).second) {
        result.offenders.push_back(gt);
      }
    }
    if (depth >= bounds.max_steps) continue;
    for (auto& move : successor_moves(c, instance, {})) {
      if (visited.insert(move.next).second) {
        frontier.emplace_back(std::move(move.next), depth + 1);
      }
    }
  }
  result.ok = result.offenders.empty();
  return result;
}

namespace {

Trace slice(const Trace& t, std::size_t begin, std::size_t end) {
  Trace out;
  out.initial = t.initial;
  out.steps.assign(t.steps.begin() + begin, t.steps.begin() + end);
  return out;
}

Trace compose_interleaving(const Trace& left, const Trace& right,
                           const InterleavingSchedule& prefix_schedule,
                           const InterleavingSchedule& loop_schedule) {
  const Trace left_prefix = slice(left, 0, left.prefix_length());
  const Trace right_prefix = slice(right, 0, right.prefix_length());
  const Trace left_loop = slice(left, left.prefix_length(), left.steps.size());
  const Trace right_loop = slice(right, right.prefix_length(), right.steps.size());

  Trace combined = interleave(left_prefix, right_prefix, prefix_schedule);
  const Trace loop = interleave(left_loop, right_loop, loop_schedule);
  if (!loop.steps.empty()) {
    combined.loop_start = combined.steps.size();
    combined.steps.insert(combined.steps.end(), loop.steps.begin(), loop.steps.end());
  }
  return combined;
}

}  // namespace

ObliviousResult check_oblivious(const ProtocolSpec& spec, const AgentSet& group_a,
                                const AgentSet& group_b, const RunBounds& bounds,
                                Semantics semantics) {
  ObliviousResult result;
  BudgetCounter budget{0, bounds.node_budget, false};
  ProtocolInstance inst_a(spec, group_a, bounds.generation);
  ProtocolInstance inst_b(spec, group_b, bounds.generation);
  ProtocolInstance inst_u(spec, agent_set_union(group_a, group_b), bounds.generation);

  const std::vector<Trace> runs_a =
      enumerate_correct_runs(inst_a, semantics, bounds, budget);
  const std::vector<Trace> runs_b =
      enumerate_correct_runs(inst_b, semantics, bounds, budget);
  result.runs_left = runs_a.size();
  result.runs_right = runs_b.size();
  result.nodes = budget.used;
  if (budget.exceeded) {
    result.budget_exceeded = true;
    return result;
  }

  for (const auto& ra : runs_a) {
    for (const auto& rb : runs_b) {
      const auto prefix_schedules =
          all_schedules(ra.prefix_length(), rb.prefix_length());
      const auto loop_schedules = all_schedules(ra.loop_length(), rb.loop_length());
      for (const auto& ps : prefix_schedules) {
        for (const auto& ls : loop_schedules) {
          if (!budget.spend()) {
            result.budget_exceeded = true;
            result.nodes = budget.used;
            return result;
          }
          ++result.interleavings_checked;
          Trace combined = compose_interleaving(ra, rb, ps, ls);

          InterleavingCounterexample cex{ra, rb, ps, ls, combined, {}, std::nullopt,
                                         std::nullopt};
          try {
            const LivenessVerdict verdict = check_run(combined, inst_u);
            if (verdict.correct) continue;
            cex.pending = verdict.pending;
          } catch (const ReplayError& e) {
            cex.replay_failure = e.failure();  // not even a run of the union
          } catch (const NotALassoError& e) {
            cex.lasso_defect = e.what();
          }
          result.counterexample = std::move(cex);
          result.nodes = budget.used;
          return result;
        }
      }
    }
  }
  result.oblivious = true;
  result.nodes = budget.used;
  return result;
}

namespace {

struct WitnessSearch {
  const ProtocolInstance& instance;
  const AgentSet& group_a;
  const AgentSet& group_b;
  Semantics semantics;
  BudgetCounter& budget;

  std::vector<Configuration> configs;
  std::vector<Step> steps;
  std::optional<Trace> found;

  bool try_close(bool cross_fired) {
    if (!cross_fired) return false;
    const Configuration& last = configs.back();
    const ClassKeySet enabled_now = instance.enabled_class_set(last);
    Trace candidate{configs.front(), steps, std::nullopt};
    if (!enabled_now.empty()) {
      if (semantics != Semantics::Lasso) return false;
      auto loop = canonical_closing_loop(last, instance);
      if (!loop || loop->empty()) return false;
      candidate.loop_start = candidate.steps.size();
      candidate.steps.insert(candidate.steps.end(), loop->begin(), loop->end());
    }
    try {
      if (!check_run(candidate, instance).correct) return false;
    } catch (const NotALassoError&) {
      return false;
    } catch (const ReplayError&) {
      return false;
    }
    found = std::move(candidate);
    return true;
  }

  bool dfs(std::size_t depth_left, bool cross_fired, const MoveOptions& opts) {
    if (!budget.spend()) return false;
    if (try_close(cross_fired)) return true;
    if (depth_left == 0) return false;
    for (auto& move : successor_moves(configs.back(), instance, opts)) {
      bool next_cross = cross_fired;
      if (const auto* f = std::get_if<FireStep>(&move.step)) {
        next_cross = next_cross || txn_is_cross(f->gt.txn, group_a, group_b);
      }
      configs.push_back(std::move(move.next));
      steps.push_back(std::move(move.step));
      if (dfs(depth_left - 1, next_cross, opts)) return true;
      configs.pop_back();
      steps.pop_back();
      if (budget.exceeded) return false;
    }
    return false;
  }
};

}  // namespace

WitnessResult find_interactivity_witness(const ProtocolSpec& spec, const AgentSet& group_a,
                                         const AgentSet& group_b, const RunBounds& bounds,
                                         Semantics semantics) {
  WitnessResult result;
  BudgetCounter budget{0, bounds.node_budget, false};
  ProtocolInstance instance(spec, agent_set_union(group_a, group_b), bounds.generation);

  const AgentSet restricted{*group_a.begin(), *group_b.begin()};
  MoveOptions narrow{&restricted, &group_a, &group_b};
  MoveOptions full{nullptr, &group_a, &group_b};

  for (const MoveOptions& opts : {narrow, full}) {
    for (std::size_t depth = 1; depth <= bounds.max_steps && !budget.exceeded; ++depth) {
      WitnessSearch search{instance, group_a, group_b, semantics, budget,
                           {instance.initial()}, {}, std::nullopt};
      if (search.dfs(depth, false, opts)) {
        result.witness = std::move(search.found);
        for (const auto& step : result.witness->steps) {
          const auto* f = std::get_if<FireStep>(&step);
          if (f && txn_is_cross(f->gt.txn, group_a, group_b)) {
            result.cross_class = instance.class_key_of(f->gt.txn);
            break;
          }
        }
        result.nodes = budget.used;
        return result;
      }
    }
    if (budget.exceeded) break;
  }
  result.budget_exceeded = budget.exceeded;
  result.nodes = budget.used;
  return result;
}

GrassrootsResult check_grassroots(const ProtocolSpec& spec, const AgentSet& group_a,
                                  const AgentSet& group_b, const RunBounds& bounds,
                                  Semantics semantics) {
  GrassrootsResult result;
  result.oblivious = check_oblivious(spec, group_a, group_b, bounds, semantics);
  result.interactivity = find_interactivity_witness(spec, group_a, group_b, bounds, semantics);
  const bool oblivious_ok = result.oblivious.oblivious;
  const bool interactive_ok = result.interactivity.witness.has_value();
  result.grassroots = oblivious_ok && interactive_ok;
  if (!oblivious_ok) {
    result.failed_conjunct = "oblivious";
  } else if (!interactive_ok) {
    result.failed_conjunct = "interactive";
  }
  return result;
}

}  // namespace vmts
