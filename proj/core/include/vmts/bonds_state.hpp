#ifndef VMTS_BONDS_STATE_HPP_
#define VMTS_BONDS_STATE_HPP_

#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <sstream>
#include <string>

#include "vmts/agent.hpp"

namespace vmts::gcb {

// A unit of debt issued by `issuer`, maturing at date `maturity`. A bond with
// maturity 0 is a coin for every holder.
struct Bond {
  AgentId issuer;
  std::uint64_t maturity = 0;

  bool operator==(const Bond&) const = default;
  auto operator<=>(const Bond&) const = default;

  friend std::ostream& operator<<(std::ostream& os, const Bond& b) {
    return os << b.issuer << '@' << b.maturity;
  }
};

// Finite multiset of bonds. No zero-count entries are ever stored, so
// structural equality of the underlying maps is multiset equality.
class BondMultiset {
 public:
  BondMultiset() = default;

  static BondMultiset single(Bond b, std::uint64_t count = 1) {
    BondMultiset m;
    m.add(b, count);
    return m;
  }

  void add(const Bond& b, std::uint64_t count) {
    if (count == 0) return;
    counts_[b] += count;
  }

  // Removes `count` copies of `b`; returns false (and leaves the multiset
  // unchanged) if fewer than `count` copies are held.
  bool remove(const Bond& b, std::uint64_t count) {
    auto it = counts_.find(b);
    if (it == counts_.end() || it->second < count) return false;
    it->second -= count;
    if (it->second == 0) counts_.erase(it);
    return true;
  }

  std::uint64_t count(const Bond& b) const {
    auto it = counts_.find(b);
    return it == counts_.end() ? 0 : it->second;
  }

  bool empty() const { return counts_.empty(); }

  // Total multiplicity.
  std::uint64_t size() const {
    std::uint64_t n = 0;
    for (const auto& [b, k] : counts_) n += k;
    return n;
  }

  bool contains_submultiset(const BondMultiset& other) const {
    for (const auto& [b, k] : other.counts_) {
      if (count(b) < k) return false;
    }
    return true;
  }

  BondMultiset united_with(const BondMultiset& other) const {
    BondMultiset out = *this;
    for (const auto& [b, k] : other.counts_) out.add(b, k);
    return out;
  }

  // Multiset difference; requires other ⊆ this.
  BondMultiset minus(const BondMultiset& other) const {
    BondMultiset out = *this;
    for (const auto& [b, k] : other.counts_) out.remove(b, k);
    return out;
  }

  const std::map<Bond, std::uint64_t>& entries() const { return counts_; }

  bool operator==(const BondMultiset&) const = default;
  auto operator<=>(const BondMultiset&) const = default;

  // Canonical rendering: {a@0,b@1x2}, sorted by bond, count suffix only
  // when greater than one.
  std::string to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& [b, k] : counts_) {
      if (!first) os << ',';
      first = false;
      os << b;
      if (k > 1) os << 'x' << k;
    }
    os << '}';
    return os.str();
  }

 private:
  std::map<Bond, std::uint64_t> counts_;
};

// Local state of a coins-and-bonds agent: bond holdings plus the local
// current date. There is no global date.
struct GcbState {
  BondMultiset holdings;
  std::uint64_t local_date = 0;

  bool operator==(const GcbState&) const = default;
  auto operator<=>(const GcbState&) const = default;
};

// Maturity is holder-relative: a bond is mature (a coin) for a holder whose
// local date has reached the bond's maturity date.
inline bool is_mature(const Bond& b, const GcbState& holder_state) {
  return b.maturity <= holder_state.local_date;
}

}  // namespace vmts::gcb

#endif  // VMTS_BONDS_STATE_HPP_
