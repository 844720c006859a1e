#include "vmts/bonds.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace vmts::gcb {

namespace {

const GcbState& state_of(const Configuration& c, const AgentId& p) {
  return std::get<GcbState>(c.at(p).machine);
}

// All nonempty sub-multisets of `m` with total multiplicity at most
// `max_total`, in canonical order.
std::vector<BondMultiset> submultisets(const BondMultiset& m, std::uint64_t max_total) {
  std::vector<std::pair<Bond, std::uint64_t>> entries(m.entries().begin(),
                                                      m.entries().end());
  std::vector<BondMultiset> out;
  BondMultiset current;
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t i,
                                                            std::uint64_t left) {
    if (i == entries.size()) {
      if (!current.empty()) out.push_back(current);
      return;
    }
    const auto& [bond, held] = entries[i];
    const std::uint64_t cap = std::min<std::uint64_t>(held, left);
    for (std::uint64_t take = 0; take <= cap; ++take) {
      if (take > 0) current.add(bond, take);
      rec(i + 1, left - take);
      if (take > 0) current.remove(bond, take);
    }
  };
  rec(0, max_total);
  return out;
}

BondMultiset issued_by_mature_at(const BondMultiset& holdings, const AgentId& issuer,
                                 std::uint64_t local_date) {
  BondMultiset out;
  for (const auto& [bond, count] : holdings.entries()) {
    if (bond.issuer == issuer && bond.maturity <= local_date) out.add(bond, count);
  }
  return out;
}

}  // namespace

ClassKey mint_key(const AgentId& p, std::uint64_t quantity, std::uint64_t date) {
  std::ostringstream os;
  os << "mint(" << p << ',' << quantity << ',' << date << ')';
  return ClassKey(os.str());
}

ClassKey advance_key(const AgentId& p) {
  return ClassKey("advance(" + p.name() + ")");
}

namespace {

// Common part of two multisets (pointwise minimum).
BondMultiset common_part(const BondMultiset& x, const BondMultiset& y) {
  BondMultiset out;
  for (const auto& [bond, count] : x.entries()) {
    const std::uint64_t other = y.count(bond);
    if (other > 0) out.add(bond, std::min(count, other));
  }
  return out;
}

}  // namespace

ClassKey swap_key(const AgentId& p, const BondMultiset& x, const AgentId& q,
                  const BondMultiset& y) {
  // An exchange of overlapping multisets is the same machine transaction as
  // the exchange of their reduced, disjoint forms; the key canonicalizes.
  const BondMultiset overlap = common_part(x, y);
  const BondMultiset xr = x.minus(overlap);
  const BondMultiset yr = y.minus(overlap);
  const bool ordered = p < q;
  const AgentId& a = ordered ? p : q;
  const AgentId& b = ordered ? q : p;
  const BondMultiset& xa = ordered ? xr : yr;
  const BondMultiset& yb = ordered ? yr : xr;
  std::ostringstream os;
  os << "swap(" << a << ':' << xa.to_string() << ',' << b << ':' << yb.to_string() << ')';
  return ClassKey(os.str());
}

ClassKey pay_key(const AgentId& payer, const AgentId& payee, const BondMultiset& bonds) {
  std::ostringstream os;
  os << "pay(" << payer << "->" << payee << ',' << bonds.to_string() << ')';
  return ClassKey(os.str());
}

MachineTransaction mint_txn(const Configuration& c, const AgentId& p,
                            std::uint64_t quantity, std::uint64_t date) {
  GcbState pre = state_of(c, p);
  GcbState post = pre;
  post.holdings.add(Bond{p, date}, quantity);
  return MachineTransaction{{{p, pre}}, {{p, post}}};
}

std::optional<MachineTransaction> advance_txn(const Configuration& c, const AgentId& p,
                                              std::uint64_t to) {
  GcbState pre = state_of(c, p);
  if (to <= pre.local_date) return std::nullopt;
  GcbState post = pre;
  post.local_date = to;
  return MachineTransaction{{{p, pre}}, {{p, post}}};
}

std::optional<MachineTransaction> exchange_txn(const Configuration& c, const AgentId& p,
                                               const BondMultiset& x, const AgentId& q,
                                               const BondMultiset& y) {
  const GcbState& p_pre = state_of(c, p);
  const GcbState& q_pre = state_of(c, q);
  if (!p_pre.holdings.contains_submultiset(x)) return std::nullopt;
  if (!q_pre.holdings.contains_submultiset(y)) return std::nullopt;
  // reduce to disjoint sides; a degenerate reduction is not an exchange
  const BondMultiset overlap = common_part(x, y);
  const BondMultiset xr = x.minus(overlap);
  const BondMultiset yr = y.minus(overlap);
  if (xr.empty() || yr.empty()) return std::nullopt;
  GcbState p_post = p_pre;
  GcbState q_post = q_pre;
  p_post.holdings = p_pre.holdings.minus(xr).united_with(yr);
  q_post.holdings = q_pre.holdings.minus(yr).united_with(xr);
  return MachineTransaction{{{p, p_pre}, {q, q_pre}}, {{p, p_post}, {q, q_post}}};
}

std::optional<MachineTransaction> pay_txn(const Configuration& c, const AgentId& payer,
                                          const AgentId& payee, const BondMultiset& bonds) {
  const GcbState& payer_pre = state_of(c, payer);
  const GcbState& payee_pre = state_of(c, payee);
  if (bonds.empty()) return std::nullopt;
  if (!payer_pre.holdings.contains_submultiset(bonds)) return std::nullopt;
  for (const auto& [bond, count] : bonds.entries()) {
    if (bond.issuer != payee) return std::nullopt;           // only payee-issued
    if (!is_mature(bond, payer_pre)) return std::nullopt;    // only coins at the payer
  }
  GcbState payer_post = payer_pre;
  GcbState payee_post = payee_pre;
  payer_post.holdings = payer_pre.holdings.minus(bonds);
  payee_post.holdings = payee_pre.holdings.united_with(bonds);
  return MachineTransaction{{{payer, payer_pre}, {payee, payee_pre}},
                            {{payer, payer_post}, {payee, payee_post}}};
}

std::optional<GuardedTransaction> redeem_gt(const Configuration& c, const AgentId& redeemer,
                                            const AgentId& issuer, const Bond& returned,
                                            const Bond& taken) {
  if (returned.issuer != issuer) return std::nullopt;
  if (!is_mature(returned, state_of(c, redeemer))) return std::nullopt;
  auto txn = exchange_txn(c, redeemer, BondMultiset::single(returned), issuer,
                          BondMultiset::single(taken));
  if (!txn) return std::nullopt;
  return GuardedTransaction{std::move(*txn), {redeemer}};
}

std::set<GuardedTransaction> gcb_generate(const AgentSet& agents, const Configuration& c,
                                          const GenerationBounds& bounds) {
  std::set<GuardedTransaction> out;
  for (const auto& p : agents) {
    const GcbState& sp = state_of(c, p);
    for (std::uint64_t k = 1; k <= bounds.max_mint_quantity; ++k) {
      for (std::uint64_t d = 0; d <= bounds.max_date; ++d) {
        out.insert(GuardedTransaction{mint_txn(c, p, k, d), {p}});
      }
    }
    auto adv = advance_txn(c, p, sp.local_date + 1);
    out.insert(GuardedTransaction{std::move(*adv), {}});  // unguarded
  }
  for (auto p = agents.begin(); p != agents.end(); ++p) {
    const GcbState& sp = state_of(c, *p);
    for (auto q = std::next(p); q != agents.end(); ++q) {
      const GcbState& sq = state_of(c, *q);
      const auto xs = submultisets(sp.holdings, bounds.max_multiset_size);
      const auto ys = submultisets(sq.holdings, bounds.max_multiset_size);
      for (const auto& x : xs) {
        for (const auto& y : ys) {
          if (!common_part(x, y).empty()) continue;  // duplicates a reduced swap
          auto txn = exchange_txn(c, *p, x, *q, y);
          if (!txn) continue;
          out.insert(GuardedTransaction{*txn, {*p, *q}});
          // Single-for-single exchanges returning a mature issuer-bond also
          // carry a redeemer-guarded variant.
          if (x.size() == 1 && y.size() == 1) {
            const Bond& xb = x.entries().begin()->first;
            const Bond& yb = y.entries().begin()->first;
            if (xb.issuer == *q && is_mature(xb, sp)) {
              out.insert(GuardedTransaction{*txn, {*p}});
            }
            if (yb.issuer == *p && is_mature(yb, sq)) {
              out.insert(GuardedTransaction{*txn, {*q}});
            }
          }
        }
      }
    }
  }
  for (const auto& payer : agents) {
    const GcbState& sp = state_of(c, payer);
    for (const auto& payee : agents) {
      if (payer == payee) continue;
      const BondMultiset coins = issued_by_mature_at(sp.holdings, payee, sp.local_date);
      for (const auto& x : submultisets(coins, bounds.max_multiset_size)) {
        auto txn = pay_txn(c, payer, payee, x);
        if (!txn) continue;
        out.insert(GuardedTransaction{std::move(*txn), {payer}});
      }
    }
  }
  return out;
}

namespace {

struct HoldingsDelta {
  BondMultiset gained;
  BondMultiset lost;
};

HoldingsDelta delta_of(const GcbState& pre, const GcbState& post) {
  HoldingsDelta d;
  for (const auto& [bond, count] : post.holdings.entries()) {
    const std::uint64_t before = pre.holdings.count(bond);
    if (count > before) d.gained.add(bond, count - before);
  }
  for (const auto& [bond, count] : pre.holdings.entries()) {
    const std::uint64_t after = post.holdings.count(bond);
    if (count > after) d.lost.add(bond, count - after);
  }
  return d;
}

[[noreturn]] void not_gcb() { throw std::invalid_argument("NotAGCBTransaction"); }

}  // namespace

ClassKey gcb_class_of(const MachineTransaction& t) {
  if (t.pre.size() == 1) {
    const AgentId& p = t.pre.begin()->first;
    const auto* pre = std::get_if<GcbState>(&t.pre.begin()->second);
    const auto* post = std::get_if<GcbState>(&t.post.begin()->second);
    if (!pre || !post) not_gcb();
    if (post->local_date > pre->local_date && post->holdings == pre->holdings) {
      return advance_key(p);
    }
    if (post->local_date == pre->local_date) {
      HoldingsDelta d = delta_of(*pre, *post);
      if (d.lost.empty() && d.gained.entries().size() == 1) {
        const auto& [bond, count] = *d.gained.entries().begin();
        if (bond.issuer == p) return mint_key(p, count, bond.maturity);
      }
    }
    not_gcb();
  }
  if (t.pre.size() == 2) {
    const AgentId& a = t.pre.begin()->first;
    const AgentId& b = std::next(t.pre.begin())->first;
    const auto* a_pre = std::get_if<GcbState>(&t.pre.at(a));
    const auto* b_pre = std::get_if<GcbState>(&t.pre.at(b));
    const auto* a_post = std::get_if<GcbState>(&t.post.at(a));
    const auto* b_post = std::get_if<GcbState>(&t.post.at(b));
    if (!a_pre || !b_pre || !a_post || !b_post) not_gcb();
    if (a_pre->local_date != a_post->local_date) not_gcb();
    if (b_pre->local_date != b_post->local_date) not_gcb();
    HoldingsDelta da = delta_of(*a_pre, *a_post);
    HoldingsDelta db = delta_of(*b_pre, *b_post);
    if (!(da.lost == db.gained) || !(db.lost == da.gained)) not_gcb();
    if (da.lost.empty() && db.lost.empty()) not_gcb();
    if (db.lost.empty()) {
      // One-sided transfer a -> b: a payment of b-issued coins.
      for (const auto& [bond, count] : da.lost.entries()) {
        if (bond.issuer != b || !is_mature(bond, *a_pre)) not_gcb();
      }
      return pay_key(a, b, da.lost);
    }
    if (da.lost.empty()) {
      for (const auto& [bond, count] : db.lost.entries()) {
        if (bond.issuer != a || !is_mature(bond, *b_pre)) not_gcb();
      }
      return pay_key(b, a, db.lost);
    }
    return swap_key(a, da.lost, b, db.lost);
  }
  not_gcb();
}

bool conservation_check(const std::vector<Configuration>& configs,
                        const std::vector<Step>& steps) {
  if (configs.empty()) return true;

  auto issued_totals = [](const Configuration& c) {
    std::map<AgentId, BondMultiset> totals;
    for (const auto& [holder, state] : c.agents()) {
      for (const auto& [bond, count] : std::get<GcbState>(state.machine).holdings.entries()) {
        totals[bond.issuer].add(bond, count);
      }
    }
    return totals;
  };

  // Baseline plus mint emissions of the preceding prefix.
  std::map<AgentId, BondMultiset> expected = issued_totals(configs.front());
  for (std::size_t i = 0; i < steps.size() && i + 1 < configs.size(); ++i) {
    if (const auto* f = std::get_if<FireStep>(&steps[i])) {
      const MachineTransaction& t = f->gt.txn;
      if (t.pre.size() == 1) {
        const auto& pre = std::get<GcbState>(t.pre.begin()->second);
        const auto& post = std::get<GcbState>(t.post.begin()->second);
        if (pre.local_date == post.local_date) {
          HoldingsDelta d = delta_of(pre, post);
          for (const auto& [bond, count] : d.gained.entries()) {
            expected[bond.issuer].add(bond, count);
          }
        }
      }
    }
    if (issued_totals(configs[i + 1]) != expected) return false;
  }
  return true;
}

namespace {

bool gcb_state_valid(const AgentSet& agents, const MachineState& s) {
  const auto* state = std::get_if<GcbState>(&s);
  if (!state) return false;
  for (const auto& [bond, count] : state->holdings.entries()) {
    if (!agents.contains(bond.issuer)) return false;
  }
  return true;
}

std::vector<BondMultiset> all_multisets(const std::vector<Bond>& types,
                                        std::uint64_t max_total) {
  BondMultiset full;
  for (const auto& b : types) full.add(b, max_total);
  return submultisets(full, max_total);
}

ClassKeySet gcb_universe(const AgentSet& agents, const GenerationBounds& bounds) {
  ClassKeySet out;
  std::vector<Bond> types;
  for (const auto& p : agents) {
    for (std::uint64_t d = 0; d <= bounds.max_date; ++d) types.push_back(Bond{p, d});
  }
  for (const auto& p : agents) {
    out.insert(advance_key(p));
    for (std::uint64_t k = 1; k <= bounds.max_mint_quantity; ++k) {
      for (std::uint64_t d = 0; d <= bounds.max_date; ++d) {
        out.insert(mint_key(p, k, d));
      }
    }
  }
  const auto multisets = all_multisets(types, bounds.max_multiset_size);
  for (auto p = agents.begin(); p != agents.end(); ++p) {
    for (auto q = std::next(p); q != agents.end(); ++q) {
      for (const auto& x : multisets) {
        for (const auto& y : multisets) {
          if (!common_part(x, y).empty()) continue;  // reduced forms only
          out.insert(swap_key(*p, x, *q, y));
        }
      }
    }
  }
  for (const auto& payer : agents) {
    for (const auto& payee : agents) {
      if (payer == payee) continue;
      std::vector<Bond> payee_types;
      for (std::uint64_t d = 0; d <= bounds.max_date; ++d) {
        payee_types.push_back(Bond{payee, d});
      }
      for (const auto& x : all_multisets(payee_types, bounds.max_multiset_size)) {
        out.insert(pay_key(payer, payee, x));
      }
    }
  }
  return out;
}

}  // namespace

ProtocolSpec gcb_protocol() {
  ProtocolSpec spec;
  spec.name = "gcb";
  spec.initial_state_of = [](const AgentId&) { return MachineState{GcbState{}}; };
  spec.state_valid = gcb_state_valid;
  spec.generate = [](const AgentSet& agents, const Configuration& c,
                     const GenerationBounds& bounds) {
    return gcb_generate(agents, c, bounds);
  };
  spec.class_of = gcb_class_of;
  spec.class_universe = gcb_universe;
  return spec;
}

}  // namespace vmts::gcb
