#include "vmts/liveness.hpp"

#include <algorithm>
#include <sstream>

namespace vmts {

const char* to_string(Semantics s) {
  return s == Semantics::Terminal ? "terminal" : "lasso";
}

LivenessVerdict check_terminal(const Trace& trace, const ProtocolInstance& instance) {
  if (trace.loop_start) {
    throw std::invalid_argument("check_terminal requires a loopless trace");
  }
  const std::vector<Configuration> configs = replay_or_throw(trace, instance);
  LivenessVerdict verdict;
  verdict.pending = instance.enabled_class_set(configs.back());
  verdict.correct = verdict.pending.empty();
  if (!verdict.correct) {
    // Earliest position from which some pending class stays enabled through
    // the final configuration.
    std::size_t best = configs.size() - 1;
    for (const auto& k : verdict.pending) {
      std::size_t start = configs.size() - 1;
      while (start > 0) {
        const Configuration& prev = configs[start - 1];
        if (!class_enabled(k, prev, instance.transactions_at(prev), instance.class_of()))
          break;
        --start;
      }
      best = std::min(best, start);
    }
    verdict.witness_index = best;
  }
  return verdict;
}

namespace {

// Re-applies one loop step against `current`, resolving fire steps by class
// against the transactions generated there. Returns nullopt if the step is
// not re-applicable.
std::optional<Configuration> reapply_loop_step(const Step& step,
                                               const Configuration& current,
                                               const ProtocolInstance& instance) {
  if (const auto* cv = std::get_if<ChangeVolitionStep>(&step)) {
    try {
      return change_volition(cv->agent, cv->new_volition, current, instance.universe());
    } catch (const KernelError&) {
      return std::nullopt;
    }
  }
  const auto& fire_step = std::get<FireStep>(step);
  const ClassKey key = instance.class_key_of(fire_step.gt.txn);
  for (const auto& gt : instance.transactions_at(current)) {
    if (!(instance.class_key_of(gt.txn) == key)) continue;
    if (!enabled(gt, current, instance.class_of())) continue;
    return fire(gt, current, instance.class_of());
  }
  return std::nullopt;
}

std::map<AgentId, ClassKeySet> volition_map(const Configuration& c) {
  std::map<AgentId, ClassKeySet> out;
  for (const auto& [p, s] : c.agents()) out.emplace(p, s.volition);
  return out;
}

}  // namespace

LivenessVerdict check_lasso(const Trace& trace, const ProtocolInstance& instance) {
  if (!trace.loop_start) {
    throw std::invalid_argument("check_lasso requires a lasso trace");
  }
  const std::size_t loop_start = *trace.loop_start;
  const std::size_t n = trace.steps.size();
  if (loop_start >= n) {
    throw NotALassoError("loop segment is empty");
  }
  const std::vector<Configuration> configs = replay_or_throw(trace, instance);

  // One further loop iteration must replay with stationary volitions and
  // enabled-class structure at every position.
  std::vector<Configuration> next_iter;
  next_iter.push_back(configs[n]);
  for (std::size_t i = loop_start; i < n; ++i) {
    auto next = reapply_loop_step(trace.steps[i], next_iter.back(), instance);
    if (!next) {
      std::ostringstream os;
      os << "loop step " << i << " is not re-applicable after the loop";
      throw NotALassoError(os.str());
    }
    next_iter.push_back(std::move(*next));
  }
  for (std::size_t j = 0; j + loop_start <= n; ++j) {
    const Configuration& first = configs[loop_start + j];
    const Configuration& second = next_iter[j];
    if (volition_map(first) != volition_map(second)) {
      throw NotALassoError("volitional states do not recur around the loop");
    }
    if (instance.enabled_class_set(first) != instance.enabled_class_set(second)) {
      throw NotALassoError("enabled classes do not recur around the loop");
    }
  }

  // Classes enabled at every loop position, with no member fired in the loop.
  ClassKeySet perpetual = instance.enabled_class_set(configs[loop_start]);
  for (std::size_t i = loop_start + 1; i <= n && !perpetual.empty(); ++i) {
    const ClassKeySet here = instance.enabled_class_set(configs[i]);
    for (auto it = perpetual.begin(); it != perpetual.end();) {
      if (!here.contains(*it)) {
        it = perpetual.erase(it);
      } else {
        ++it;
      }
    }
  }
  ClassKeySet fired;
  for (std::size_t i = loop_start; i < n; ++i) {
    if (const auto* f = std::get_if<FireStep>(&trace.steps[i])) {
      fired.insert(instance.class_key_of(f->gt.txn));
    }
  }
  LivenessVerdict verdict;
  for (const auto& k : perpetual) {
    if (!fired.contains(k)) verdict.pending.insert(k);
  }
  verdict.correct = verdict.pending.empty();
  if (!verdict.correct) verdict.witness_index = loop_start;
  return verdict;
}

LivenessVerdict check_run(const Trace& trace, const ProtocolInstance& instance) {
  return trace.loop_start ? check_lasso(trace, instance)
                          : check_terminal(trace, instance);
}

}  // namespace vmts
