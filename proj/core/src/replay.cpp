#include "vmts/replay.hpp"

#include <sstream>

namespace vmts {

namespace {

std::optional<StepFailure> containment_violation(const Configuration& c,
                                                 const ClassKeySet& universe,
                                                 std::size_t index) {
  for (const auto& [p, state] : c.agents()) {
    for (const auto& k : state.volition) {
      if (!universe.contains(k)) {
        return StepFailure{index, KernelErrorCode::UnknownClass,
                           "volition of " + p.name() + " contains " + k.label() +
                               " outside the protocol universe"};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

ReplayOutcome replay(const Trace& trace, const ProtocolInstance& instance) {
  ReplayOutcome out;
  const ClassKeySet& universe = instance.universe();
  out.configs.push_back(trace.initial);
  if (auto violation = containment_violation(trace.initial, universe, 0)) {
    out.failure = std::move(violation);
    return out;
  }
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const Configuration& current = out.configs.back();
    try {
      Configuration next = std::visit(
          [&](const auto& step) -> Configuration {
            using T = std::decay_t<decltype(step)>;
            if constexpr (std::is_same_v<T, ChangeVolitionStep>) {
              return change_volition(step.agent, step.new_volition, current, universe);
            } else {
              return fire(step.gt, current, instance.class_of());
            }
          },
          trace.steps[i]);
      out.configs.push_back(std::move(next));
    } catch (const KernelError& e) {
      out.failure = StepFailure{i, e.code(), e.what()};
      return out;
    }
    if (auto violation = containment_violation(out.configs.back(), universe, i)) {
      out.failure = std::move(violation);
      return out;
    }
  }
  return out;
}

std::vector<Configuration> replay_or_throw(const Trace& trace,
                                           const ProtocolInstance& instance) {
  ReplayOutcome out = replay(trace, instance);
  if (!out.ok()) {
    std::ostringstream os;
    os << "replay failed at step " << out.failure->index << ": " << out.failure->reason;
    throw ReplayError(*out.failure, os.str());
  }
  return std::move(out.configs);
}

}  // namespace vmts
