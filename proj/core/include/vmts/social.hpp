#ifndef VMTS_SOCIAL_HPP_
#define VMTS_SOCIAL_HPP_

#include <optional>
#include <set>

#include "vmts/protocol.hpp"

namespace vmts::sg {

ClassKey befriend_key(const AgentId& p, const AgentId& q);
ClassKey unfriend_key(const AgentId& p, const AgentId& q);
ClassKey child_befriend_key(const AgentId& r, const AgentId& s);
ClassKey child_unfriend_key(const AgentId& r, const AgentId& s);

// Transaction builders against the current configuration. The pre-states are
// read from `c`; legality (befriend requires q ∉ c_p, ...) is the kernel's
// business at enablement time.
MachineTransaction befriend_txn(const Configuration& c, const AgentId& p, const AgentId& q);
MachineTransaction unfriend_txn(const Configuration& c, const AgentId& p, const AgentId& q);
MachineTransaction child_befriend_txn(const Configuration& c, const AgentId& r,
                                      const AgentId& s, const ParentMap& parents);
MachineTransaction child_unfriend_txn(const Configuration& c, const AgentId& r,
                                      const AgentId& s, const ParentMap& parents);

// For each unordered pair {p,q}: one befriend guarded by both when they are
// not friends, or two unfriend variants guarded by either when they are.
std::set<GuardedTransaction> sg_generate(const AgentSet& agents, const Configuration& c,
                                         const GenerationBounds& bounds);

// Canonical class of an adult social-graph transaction. Throws
// std::invalid_argument if the transaction is not a social-graph one.
ClassKey sg_class_of(const MachineTransaction& t);

// Child transactions only: for each unordered child pair {r,s} with distinct
// parents p,q (four distinct agents): a child-befriend guarded by all four
// when the parents are friends and r,s are not, or four child-unfriend
// variants guarded by any one of the four when they are.
std::set<GuardedTransaction> csg_generate(const AgentSet& agents, const Configuration& c,
                                          const ParentMap& parents,
                                          const GenerationBounds& bounds);

// Classes of both adult and child social transactions.
ClassKey social_class_of(const MachineTransaction& t);

// q ∈ c_p iff p ∈ c_q for all pairs.
bool mutuality_check(const Configuration& c);

ProtocolSpec sg_protocol();

// Adult transactions among non-children plus child transactions among the
// children of `parents`; children befriend only children.
ProtocolSpec csg_protocol(const ParentMap& parents);

}  // namespace vmts::sg

#endif  // VMTS_SOCIAL_HPP_
