#include "vmts/transaction.hpp"

namespace vmts {

std::optional<TxnDefect> validate_transaction(const MachineTransaction& t) {
  if (t.pre.empty()) return TxnDefect::EmptyParticipants;
  if (t.pre.size() != t.post.size()) return TxnDefect::DomainMismatch;
  for (const auto& [p, s] : t.pre) {
    if (!t.post.contains(p)) return TxnDefect::DomainMismatch;
  }
  if (t.pre == t.post) return TxnDefect::Identity;
  return std::nullopt;
}

std::optional<TxnDefect> validate_guarded(const GuardedTransaction& gt) {
  if (auto defect = validate_transaction(gt.txn)) return defect;
  for (const auto& q : gt.guard) {
    if (!gt.txn.pre.contains(q)) return TxnDefect::GuardNotParticipants;
  }
  return std::nullopt;
}

}  // namespace vmts
