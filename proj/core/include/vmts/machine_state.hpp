#ifndef VMTS_MACHINE_STATE_HPP_
#define VMTS_MACHINE_STATE_HPP_

#include <compare>
#include <variant>

#include "vmts/bonds_state.hpp"
#include "vmts/chain_state.hpp"
#include "vmts/social_state.hpp"

namespace vmts {

// Platform-tagged machine-state value. Two values compare equal iff they are
// structurally identical; the variant index participates in the ordering, so
// states of different platforms never compare equal.
using MachineState = std::variant<sg::SgState, gcb::GcbState, toychain::ChainState>;

}  // namespace vmts

#endif  // VMTS_MACHINE_STATE_HPP_
