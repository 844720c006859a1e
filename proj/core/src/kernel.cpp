#include "vmts/kernel.hpp"

#include <sstream>

namespace vmts {

const char* to_string(KernelErrorCode code) {
  switch (code) {
    case KernelErrorCode::DomainMismatch: return "DomainMismatch";
    case KernelErrorCode::Identity: return "Identity";
    case KernelErrorCode::NotEnabled: return "NotEnabled";
    case KernelErrorCode::NoChange: return "NoChange";
    case KernelErrorCode::UnknownClass: return "UnknownClass";
    case KernelErrorCode::UnknownAgent: return "UnknownAgent";
  }
  return "?";
}

Configuration merge_configurations(const Configuration& a, const Configuration& b) {
  std::map<AgentId, AgentState> merged = a.agents();
  for (const auto& [p, s] : b.agents()) merged.emplace(p, s);
  return Configuration(std::move(merged));
}

bool machine_precondition_holds(const MachineTransaction& t, const Configuration& c) {
  for (const auto& [p, pre_state] : t.pre) {
    if (!c.has_agent(p)) return false;
    if (!(c.at(p).machine == pre_state)) return false;
  }
  return true;
}

bool enabled(const GuardedTransaction& gt, const Configuration& c, const ClassOf& class_of) {
  if (!machine_precondition_holds(gt.txn, c)) return false;
  if (gt.guard.empty()) return true;
  const ClassKey key = class_of(gt.txn);
  for (const auto& q : gt.guard) {
    if (!c.has_agent(q)) return false;
    if (!c.at(q).volition.contains(key)) return false;
  }
  return true;
}

bool class_enabled(const ClassKey& k, const Configuration& c,
                   const std::set<GuardedTransaction>& candidates,
                   const ClassOf& class_of) {
  for (const auto& gt : candidates) {
    if (class_of(gt.txn) == k && enabled(gt, c, class_of)) return true;
  }
  return false;
}

Configuration fire(const GuardedTransaction& gt, const Configuration& c,
                   const ClassOf& class_of) {
  if (auto defect = validate_guarded(gt)) {
    throw KernelError(*defect == TxnDefect::Identity ? KernelErrorCode::Identity
                                                     : KernelErrorCode::DomainMismatch,
                      "malformed guarded transaction");
  }
  if (!enabled(gt, c, class_of)) {
    throw KernelError(KernelErrorCode::NotEnabled,
                      "guarded transaction is not enabled");
  }
  const ClassKey key = class_of(gt.txn);
  Configuration out = c;
  for (const auto& [p, post_state] : gt.txn.post) {
    out.at(p).machine = post_state;
  }
  // Discharge upon satisfaction: the fired class leaves every volition.
  for (auto& [p, state] : out.agents()) {
    state.volition.erase(key);
  }
  return out;
}

Configuration change_volition(const AgentId& p, const ClassKeySet& new_volition,
                              const Configuration& c, const ClassKeySet& universe) {
  if (!c.has_agent(p)) {
    throw KernelError(KernelErrorCode::UnknownAgent,
                      "agent " + p.name() + " is not in the configuration");
  }
  if (c.at(p).volition == new_volition) {
    throw KernelError(KernelErrorCode::NoChange,
                      "new volition equals the current one");
  }
  for (const auto& k : new_volition) {
    if (!universe.contains(k)) {
      throw KernelError(KernelErrorCode::UnknownClass,
                        "class " + k.label() + " is outside the protocol universe");
    }
  }
  Configuration out = c;
  out.at(p).volition = new_volition;
  return out;
}

namespace {

// c -> c2 matches the change-volition transition form: exactly one agent
// differs, only in its volition, and the new volition is inside the universe.
bool is_change_volition_transition(const Configuration& c, const Configuration& c2,
                                   const ClassKeySet& universe) {
  const AgentId* changed = nullptr;
  for (const auto& [p, state] : c.agents()) {
    const AgentState& after = c2.at(p);
    if (state == after) continue;
    if (changed != nullptr) return false;
    if (!(state.machine == after.machine)) return false;
    if (state.volition == after.volition) return false;
    for (const auto& k : after.volition) {
      if (!universe.contains(k)) return false;
    }
    changed = &p;
  }
  return changed != nullptr;
}

// c -> c2 matches the volitional-machine-transaction form for gt: gt is
// enabled in c, participants end at their post-states, non-participants are
// machine-stationary, and every volition loses exactly the fired class.
bool matches_fire_of(const GuardedTransaction& gt, const ClassKey& key,
                     const Configuration& c, const Configuration& c2,
                     const ClassOf& class_of) {
  if (!enabled(gt, c, class_of)) return false;
  for (const auto& [p, state] : c.agents()) {
    const AgentState& after = c2.at(p);
    auto post_it = gt.txn.post.find(p);
    if (post_it != gt.txn.post.end()) {
      if (!(after.machine == post_it->second)) return false;
    } else {
      if (!(after.machine == state.machine)) return false;
    }
    ClassKeySet expected = state.volition;
    expected.erase(key);
    if (after.volition != expected) return false;
  }
  return true;
}

}  // namespace

bool is_transition(const Configuration& c, const Configuration& c2,
                   const std::set<GuardedTransaction>& R, const ClassOf& class_of,
                   const ClassKeySet& universe) {
  if (c.domain() != c2.domain()) return false;
  if (c == c2) return false;  // transitions are pairs of non-identical states
  if (is_change_volition_transition(c, c2, universe)) return true;
  for (const auto& gt : R) {
    if (matches_fire_of(gt, class_of(gt.txn), c, c2, class_of)) return true;
  }
  return false;
}

ClassKeySet enabled_classes(const Configuration& c,
                            const std::set<GuardedTransaction>& candidates,
                            const ClassOf& class_of) {
  ClassKeySet out;
  for (const auto& gt : candidates) {
    const ClassKey key = class_of(gt.txn);
    if (out.contains(key)) continue;
    if (enabled(gt, c, class_of)) out.insert(key);
  }
  return out;
}

}  // namespace vmts
