#ifndef VMTS_CHAIN_STATE_HPP_
#define VMTS_CHAIN_STATE_HPP_

#include <compare>
#include <string>
#include <vector>

namespace vmts::toychain {

inline constexpr const char* kGenesisBlock = "genesis";

// Local state of a toy chain-propagation agent: a block chain rooted at the
// genesis marker, plus a bootnode flag. Bootnodes propagate chains to each
// other; ordinary agents only mine locally.
struct ChainState {
  std::vector<std::string> chain{kGenesisBlock};
  bool is_bootnode = false;

  bool operator==(const ChainState&) const = default;
  auto operator<=>(const ChainState&) const = default;
};

// True iff `longer` is a strict extension of `shorter` (proper prefix).
inline bool strictly_extends(const std::vector<std::string>& longer,
                             const std::vector<std::string>& shorter) {
  if (longer.size() <= shorter.size()) return false;
  for (std::size_t i = 0; i < shorter.size(); ++i) {
    if (longer[i] != shorter[i]) return false;
  }
  return true;
}

}  // namespace vmts::toychain

#endif  // VMTS_CHAIN_STATE_HPP_
