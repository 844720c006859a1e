#ifndef VMTS_KERNEL_HPP_
#define VMTS_KERNEL_HPP_

#include <functional>
#include <set>

#include "vmts/configuration.hpp"
#include "vmts/errors.hpp"
#include "vmts/transaction.hpp"

namespace vmts {

// Maps a machine transaction to the canonical key of its equivalence class.
using ClassOf = std::function<ClassKey(const MachineTransaction&)>;

// True iff every participant's machine state in `c` equals the transaction's
// pre-state. False when a participant is outside the configuration's domain.
bool machine_precondition_holds(const MachineTransaction& t, const Configuration& c);

// A guarded transaction is enabled when the machine precondition holds and
// every guard's volition contains the transaction's class.
bool enabled(const GuardedTransaction& gt, const Configuration& c, const ClassOf& class_of);

// A class is enabled when some candidate guarded transaction of that class is
// enabled.
bool class_enabled(const ClassKey& k, const Configuration& c,
                   const std::set<GuardedTransaction>& candidates,
                   const ClassOf& class_of);

// Applies an enabled guarded transaction: participants' machine states move to
// the post-states, non-participants are stationary, and the transaction's
// class is discharged from every agent's volition. Throws KernelError
// (NotEnabled) otherwise.
Configuration fire(const GuardedTransaction& gt, const Configuration& c,
                   const ClassOf& class_of);

// Replaces agent `p`'s volitional state with `new_volition`. The new state
// must differ from the current one and every key must belong to `universe`
// (the class keys of the protocol instance's transaction set). Machine states
// are untouched. Throws KernelError (UnknownAgent, NoChange, UnknownClass).
Configuration change_volition(const AgentId& p, const ClassKeySet& new_volition,
                              const Configuration& c, const ClassKeySet& universe);

// Brute-force membership oracle for the transition relation induced by a set
// of guarded transactions over a fixed agent set: true iff c -> c2 is a
// change-volition of exactly one agent (with the new volition inside
// `universe`) or equals the result of firing some enabled member of `R`.
// Decided directly from the definitional equations, independently of fire().
bool is_transition(const Configuration& c, const Configuration& c2,
                   const std::set<GuardedTransaction>& R, const ClassOf& class_of,
                   const ClassKeySet& universe);

// Classes with an enabled member among `candidates`.
ClassKeySet enabled_classes(const Configuration& c,
                            const std::set<GuardedTransaction>& candidates,
                            const ClassOf& class_of);

}  // namespace vmts

#endif  // VMTS_KERNEL_HPP_
