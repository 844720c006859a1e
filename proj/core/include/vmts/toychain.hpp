#ifndef VMTS_TOYCHAIN_HPP_
#define VMTS_TOYCHAIN_HPP_

#include <optional>
#include <set>

#include "vmts/protocol.hpp"

namespace vmts::toychain {

ClassKey mine_key(const AgentId& p, const std::string& block_id);
ClassKey propagate_key(const AgentId& from, const AgentId& to,
                       const std::vector<std::string>& chain);

// Appends the next deterministic block id ("p:<height>") to p's chain.
MachineTransaction mine_txn(const Configuration& c, const AgentId& p);

// Replaces `to`'s chain with `from`'s; nullopt unless `from`'s chain strictly
// extends `to`'s.
std::optional<MachineTransaction> propagate_txn(const Configuration& c,
                                                const AgentId& from, const AgentId& to);

// Mine at every agent, guarded by the miner; unguarded propagation between
// bootnode pairs with strictly extending chains. The unguarded propagation is
// what makes this protocol fail the obliviousness check.
std::set<GuardedTransaction> toychain_generate(const AgentSet& agents,
                                               const Configuration& c,
                                               const GenerationBounds& bounds);

ClassKey toychain_class_of(const MachineTransaction& t);

// Bootnode flags are fixed protocol structure, seeded into initial states.
ProtocolSpec toychain_protocol(const AgentSet& bootnodes);

}  // namespace vmts::toychain

#endif  // VMTS_TOYCHAIN_HPP_
