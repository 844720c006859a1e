#ifndef VMTS_CONFIGURATION_HPP_
#define VMTS_CONFIGURATION_HPP_

#include <compare>
#include <map>

#include "vmts/agent.hpp"
#include "vmts/class_key.hpp"
#include "vmts/machine_state.hpp"

namespace vmts {

// State of one agent: the set of transaction classes its person is currently
// willing, and its machine state.
struct AgentState {
  ClassKeySet volition;
  MachineState machine;

  bool operator==(const AgentState&) const = default;
  auto operator<=>(const AgentState&) const = default;
};

// Agent configuration over a fixed finite agent set: one AgentState per agent.
class Configuration {
 public:
  Configuration() = default;
  explicit Configuration(std::map<AgentId, AgentState> agents)
      : agents_(std::move(agents)) {}

  static Configuration initial(const AgentSet& agents, const MachineState& s0) {
    std::map<AgentId, AgentState> m;
    for (const auto& p : agents) m.emplace(p, AgentState{{}, s0});
    return Configuration(std::move(m));
  }

  const std::map<AgentId, AgentState>& agents() const { return agents_; }
  std::map<AgentId, AgentState>& agents() { return agents_; }

  bool has_agent(const AgentId& p) const { return agents_.contains(p); }

  const AgentState& at(const AgentId& p) const { return agents_.at(p); }
  AgentState& at(const AgentId& p) { return agents_.at(p); }

  AgentSet domain() const {
    AgentSet out;
    for (const auto& [p, s] : agents_) out.insert(p);
    return out;
  }

  bool operator==(const Configuration&) const = default;
  auto operator<=>(const Configuration&) const = default;

 private:
  std::map<AgentId, AgentState> agents_;
};

// Union of two configurations over disjoint agent sets.
Configuration merge_configurations(const Configuration& a, const Configuration& b);

}  // namespace vmts

#endif  // VMTS_CONFIGURATION_HPP_
