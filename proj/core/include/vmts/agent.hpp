#ifndef VMTS_AGENT_HPP_
#define VMTS_AGENT_HPP_

#include <compare>
#include <ostream>
#include <set>
#include <string>
#include <utility>

namespace vmts {

// Opaque agent identifier (a person together with their machine). Ordering is
// lexicographic on the name and is the canonical order used everywhere a
// deterministic traversal is required.
class AgentId {
 public:
  AgentId() = default;
  explicit AgentId(std::string name) : name_(std::move(name)) {}

  const std::string& name() const { return name_; }

  bool operator==(const AgentId&) const = default;
  auto operator<=>(const AgentId&) const = default;

  friend std::ostream& operator<<(std::ostream& os, const AgentId& id) {
    return os << id.name_;
  }

 private:
  std::string name_;
};

using AgentSet = std::set<AgentId>;

inline AgentSet agent_set_union(const AgentSet& a, const AgentSet& b) {
  AgentSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}

inline bool agent_sets_disjoint(const AgentSet& a, const AgentSet& b) {
  for (const auto& x : a) {
    if (b.contains(x)) return false;
  }
  return true;
}

}  // namespace vmts

#endif  // VMTS_AGENT_HPP_
