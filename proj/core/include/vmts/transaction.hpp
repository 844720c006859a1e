#ifndef VMTS_TRANSACTION_HPP_
#define VMTS_TRANSACTION_HPP_

#include <compare>
#include <map>
#include <optional>
#include <set>

#include "vmts/agent.hpp"
#include "vmts/machine_state.hpp"

namespace vmts {

// An atomic machine transaction: per-participant (pre, post) machine states.
// Participants are the agents whose states are preconditions of the
// transaction; a participant whose state does not change is stationary.
struct MachineTransaction {
  std::map<AgentId, MachineState> pre;
  std::map<AgentId, MachineState> post;

  AgentSet participants() const {
    AgentSet out;
    for (const auto& [p, s] : pre) out.insert(p);
    return out;
  }

  bool operator==(const MachineTransaction&) const = default;
  auto operator<=>(const MachineTransaction&) const = default;
};

// A machine transaction plus the subset of its participants whose volitions
// gate it. An empty guard means the transaction is purely mechanical.
struct GuardedTransaction {
  MachineTransaction txn;
  AgentSet guard;

  bool operator==(const GuardedTransaction&) const = default;
  auto operator<=>(const GuardedTransaction&) const = default;
};

enum class TxnDefect {
  DomainMismatch,  // pre/post not keyed off the same participant set
  Identity,        // pre equals post
  EmptyParticipants,
  GuardNotParticipants,
};

// Well-formedness of a machine transaction: nonempty participants, matching
// pre/post domains, and pre != post.
std::optional<TxnDefect> validate_transaction(const MachineTransaction& t);

// Also checks guard ⊆ participants.
std::optional<TxnDefect> validate_guarded(const GuardedTransaction& gt);

}  // namespace vmts

#endif  // VMTS_TRANSACTION_HPP_
