#ifndef VMTS_SOCIAL_STATE_HPP_
#define VMTS_SOCIAL_STATE_HPP_

#include <compare>
#include <map>
#include <set>

#include "vmts/agent.hpp"

namespace vmts::sg {

// Local state of a social-graph agent: the set of current friends.
struct SgState {
  std::set<AgentId> friends;

  bool operator==(const SgState&) const = default;
  auto operator<=>(const SgState&) const = default;
};

// Child -> parent assignment for the child-safe variant. Fixed externally;
// not part of any agent state.
using ParentMap = std::map<AgentId, AgentId>;

}  // namespace vmts::sg

#endif  // VMTS_SOCIAL_STATE_HPP_
