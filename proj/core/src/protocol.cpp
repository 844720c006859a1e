#include "vmts/protocol.hpp"

namespace vmts {

std::set<GuardedTransaction> restrict_transactions(const ProtocolSpec& spec,
                                                   const AgentSet& agents,
                                                   const Configuration& c,
                                                   const GenerationBounds& bounds) {
  std::set<GuardedTransaction> out;
  for (auto& gt : spec.generate(agents, c, bounds)) {
    bool inside = true;
    for (const auto& p : gt.txn.participants()) {
      if (!agents.contains(p)) {
        inside = false;
        break;
      }
    }
    if (!inside) continue;
    bool states_valid = true;
    for (const auto& [p, s] : gt.txn.pre) {
      if (!spec.state_valid(agents, s)) states_valid = false;
    }
    for (const auto& [p, s] : gt.txn.post) {
      if (!spec.state_valid(agents, s)) states_valid = false;
    }
    if (!states_valid) continue;
    out.insert(std::move(gt));
  }
  return out;
}

std::set<GuardedTransaction> cross_transactions(const ProtocolSpec& spec,
                                                const AgentSet& group_a,
                                                const AgentSet& group_b,
                                                const Configuration& c,
                                                const GenerationBounds& bounds) {
  const AgentSet combined = agent_set_union(group_a, group_b);
  std::set<GuardedTransaction> out;
  for (auto& gt : restrict_transactions(spec, combined, c, bounds)) {
    bool touches_a = false;
    bool touches_b = false;
    for (const auto& p : gt.txn.participants()) {
      touches_a = touches_a || group_a.contains(p);
      touches_b = touches_b || group_b.contains(p);
    }
    if (touches_a && touches_b) out.insert(std::move(gt));
  }
  return out;
}

ProtocolInstance::ProtocolInstance(ProtocolSpec spec, AgentSet agents,
                                   GenerationBounds bounds)
    : spec_(std::move(spec)), agents_(std::move(agents)), bounds_(bounds) {}

const ClassKeySet& ProtocolInstance::universe() const {
  if (!universe_) universe_ = spec_.class_universe(agents_, bounds_);
  return *universe_;
}

ProtocolInstance::CacheEntry& ProtocolInstance::cache_entry(const Configuration& c) const {
  auto it = cache_.find(c);
  if (it == cache_.end()) {
    it = cache_.emplace(c, CacheEntry{restrict_transactions(spec_, agents_, c, bounds_),
                                      std::nullopt})
             .first;
  }
  return it->second;
}

const std::set<GuardedTransaction>& ProtocolInstance::transactions_at(
    const Configuration& c) const {
  return cache_entry(c).transactions;
}

ClassKeySet ProtocolInstance::enabled_class_set(const Configuration& c) const {
  CacheEntry& entry = cache_entry(c);
  if (!entry.enabled) {
    entry.enabled = enabled_classes(c, entry.transactions, spec_.class_of);
  }
  return *entry.enabled;
}

}  // namespace vmts
