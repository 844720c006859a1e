#ifndef VMTS_BONDS_HPP_
#define VMTS_BONDS_HPP_

#include <optional>
#include <set>
#include <vector>

#include "vmts/protocol.hpp"
#include "vmts/trace.hpp"

namespace vmts::gcb {

ClassKey mint_key(const AgentId& p, std::uint64_t quantity, std::uint64_t date);
ClassKey advance_key(const AgentId& p);
// Attributes the multiset each side gives; Swap(p,q,x,y) and Swap(q,p,y,x)
// share a key.
ClassKey swap_key(const AgentId& p, const BondMultiset& x, const AgentId& q,
                  const BondMultiset& y);
ClassKey pay_key(const AgentId& payer, const AgentId& payee, const BondMultiset& bonds);

MachineTransaction mint_txn(const Configuration& c, const AgentId& p,
                            std::uint64_t quantity, std::uint64_t date);

// Advances p's local date to `to`; nullopt unless to > current date.
std::optional<MachineTransaction> advance_txn(const Configuration& c, const AgentId& p,
                                              std::uint64_t to);

// Exchange: p gives x, q gives y. nullopt when a side does not hold its
// multiset or when x equals y (an identity).
std::optional<MachineTransaction> exchange_txn(const Configuration& c, const AgentId& p,
                                               const BondMultiset& x, const AgentId& q,
                                               const BondMultiset& y);

// One-sided transfer of payee-issued coins mature at the payer.
std::optional<MachineTransaction> pay_txn(const Configuration& c, const AgentId& payer,
                                          const AgentId& payee, const BondMultiset& bonds);

// Redemption is the {redeemer}-guarded variant of the single-for-single
// exchange: the redeemer returns one mature issuer-bond and picks any single
// bond from the issuer's holdings.
std::optional<GuardedTransaction> redeem_gt(const Configuration& c, const AgentId& redeemer,
                                            const AgentId& issuer, const Bond& returned,
                                            const Bond& taken);

// Mint/Advance-date/Voluntary-swap/Pay/Redeem generators near `c`, finitized
// by the bounds.
std::set<GuardedTransaction> gcb_generate(const AgentSet& agents, const Configuration& c,
                                          const GenerationBounds& bounds);

// Canonical class of a coins-and-bonds transaction. Throws
// std::invalid_argument if the transaction is not one.
ClassKey gcb_class_of(const MachineTransaction& t);

// Conservation of money over a replayed run: at every configuration, for
// every issuer, the bonds of that issuer across all agents are exactly the
// ones minted in the preceding prefix.
bool conservation_check(const std::vector<Configuration>& configs,
                        const std::vector<Step>& steps);

ProtocolSpec gcb_protocol();

}  // namespace vmts::gcb

#endif  // VMTS_BONDS_HPP_
