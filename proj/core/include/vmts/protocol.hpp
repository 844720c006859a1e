#ifndef VMTS_PROTOCOL_HPP_
#define VMTS_PROTOCOL_HPP_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>

#include "vmts/configuration.hpp"
#include "vmts/kernel.hpp"
#include "vmts/transaction.hpp"

namespace vmts {

// Finitizes the infinite transaction sets of the platforms for checking:
// mint quantities and maturity dates range up to the bounds, and multiset
// payloads (swap sides and the like) carry at most max_multiset_size units.
struct GenerationBounds {
  std::uint64_t max_mint_quantity = 1;
  std::uint64_t max_date = 1;
  std::uint64_t max_multiset_size = 1;

  bool valid() const {
    return max_mint_quantity >= 1 && max_date >= 1 && max_multiset_size >= 1;
  }

  bool operator==(const GenerationBounds&) const = default;
};

// A protocol: one transition system per agent set, sharing an initial local
// state, with transactions produced by a generator near any configuration.
struct ProtocolSpec {
  std::string name;

  // Initial local state of an agent. Per-agent so that externally fixed
  // structure (bootnode flags and the like) can be seeded; initial states
  // agree across agent sets by construction.
  std::function<MachineState(const AgentId&)> initial_state_of;

  // Monotone in the agent set: valid for P implies valid for any superset.
  std::function<bool(const AgentSet&, const MachineState&)> state_valid;

  // Guarded transactions applicable near `c`, finitized by the bounds. Only
  // yields transactions whose participants lie inside the agent set and whose
  // pre/post states are valid for it.
  std::function<std::set<GuardedTransaction>(const AgentSet&, const Configuration&,
                                             const GenerationBounds&)>
      generate;

  std::function<ClassKey(const MachineTransaction&)> class_of;

  // The class keys of the protocol's transaction set over the agent set,
  // finitized by the bounds; the universe volitions are validated against.
  std::function<ClassKeySet(const AgentSet&, const GenerationBounds&)> class_universe;
};

// R(P)-members applicable near `c`: generated transactions filtered to
// participants ⊆ P with state-valid pre/post states.
std::set<GuardedTransaction> restrict_transactions(const ProtocolSpec& spec,
                                                   const AgentSet& agents,
                                                   const Configuration& c,
                                                   const GenerationBounds& bounds);

// Transactions generated over P ∪ P' near `c` whose participants intersect
// both groups. Requires disjoint nonempty groups.
std::set<GuardedTransaction> cross_transactions(const ProtocolSpec& spec,
                                                const AgentSet& group_a,
                                                const AgentSet& group_b,
                                                const Configuration& c,
                                                const GenerationBounds& bounds);

// A protocol bound to a fixed agent set and bounds; caches the class-key
// universe and memoizes per-configuration generation (replay and the
// checkers revisit the same configurations heavily). Cache memory grows with
// the distinct configurations visited, which the checkers' node budgets
// bound. References returned by transactions_at stay valid for the
// instance's lifetime. Not thread-safe; use one instance per search task.
class ProtocolInstance {
 public:
  ProtocolInstance(ProtocolSpec spec, AgentSet agents, GenerationBounds bounds);

  const ProtocolSpec& spec() const { return spec_; }
  const AgentSet& agents() const { return agents_; }
  const GenerationBounds& bounds() const { return bounds_; }

  Configuration initial() const {
    std::map<AgentId, AgentState> m;
    for (const auto& p : agents_) m.emplace(p, AgentState{{}, spec_.initial_state_of(p)});
    return Configuration(std::move(m));
  }

  const std::set<GuardedTransaction>& transactions_at(const Configuration& c) const;

  ClassKey class_key_of(const MachineTransaction& t) const { return spec_.class_of(t); }

  ClassOf class_of() const { return spec_.class_of; }

  const ClassKeySet& universe() const;

  ClassKeySet enabled_class_set(const Configuration& c) const;

 private:
  struct CacheEntry {
    std::set<GuardedTransaction> transactions;
    std::optional<ClassKeySet> enabled;
  };
  CacheEntry& cache_entry(const Configuration& c) const;

  ProtocolSpec spec_;
  AgentSet agents_;
  GenerationBounds bounds_;
  mutable std::optional<ClassKeySet> universe_;
  mutable std::map<Configuration, CacheEntry> cache_;
};

}  // namespace vmts

#endif  // VMTS_PROTOCOL_HPP_
