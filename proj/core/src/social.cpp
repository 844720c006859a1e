#include "vmts/social.hpp"

#include <algorithm>
#include <stdexcept>

namespace vmts::sg {

namespace {

std::pair<AgentId, AgentId> sorted_pair(const AgentId& a, const AgentId& b) {
  return a < b ? std::pair{a, b} : std::pair{b, a};
}

ClassKey pair_key(const char* kind, const AgentId& a, const AgentId& b) {
  auto [x, y] = sorted_pair(a, b);
  return ClassKey(std::string(kind) + "(" + x.name() + "," + y.name() + ")");
}

const SgState& state_of(const Configuration& c, const AgentId& p) {
  return std::get<SgState>(c.at(p).machine);
}

}  // namespace

ClassKey befriend_key(const AgentId& p, const AgentId& q) {
  return pair_key("befriend", p, q);
}
ClassKey unfriend_key(const AgentId& p, const AgentId& q) {
  return pair_key("unfriend", p, q);
}
ClassKey child_befriend_key(const AgentId& r, const AgentId& s) {
  return pair_key("child-befriend", r, s);
}
ClassKey child_unfriend_key(const AgentId& r, const AgentId& s) {
  return pair_key("child-unfriend", r, s);
}

MachineTransaction befriend_txn(const Configuration& c, const AgentId& p, const AgentId& q) {
  SgState p_pre = state_of(c, p);
  SgState q_pre = state_of(c, q);
  SgState p_post = p_pre;
  SgState q_post = q_pre;
  p_post.friends.insert(q);
  q_post.friends.insert(p);
  return MachineTransaction{{{p, p_pre}, {q, q_pre}}, {{p, p_post}, {q, q_post}}};
}

MachineTransaction unfriend_txn(const Configuration& c, const AgentId& p, const AgentId& q) {
  SgState p_pre = state_of(c, p);
  SgState q_pre = state_of(c, q);
  SgState p_post = p_pre;
  SgState q_post = q_pre;
  p_post.friends.erase(q);
  q_post.friends.erase(p);
  return MachineTransaction{{{p, p_pre}, {q, q_pre}}, {{p, p_post}, {q, q_post}}};
}

namespace {

MachineTransaction child_pair_txn(const Configuration& c, const AgentId& r,
                                  const AgentId& s, const ParentMap& parents,
                                  bool befriend) {
  const AgentId& p = parents.at(r);
  const AgentId& q = parents.at(s);
  MachineTransaction t = befriend ? befriend_txn(c, r, s) : unfriend_txn(c, r, s);
  // Parents are stationary participants: their states are preconditions.
  t.pre.emplace(p, c.at(p).machine);
  t.pre.emplace(q, c.at(q).machine);
  t.post.emplace(p, c.at(p).machine);
  t.post.emplace(q, c.at(q).machine);
  return t;
}

}  // namespace

MachineTransaction child_befriend_txn(const Configuration& c, const AgentId& r,
                                      const AgentId& s, const ParentMap& parents) {
  return child_pair_txn(c, r, s, parents, true);
}

MachineTransaction child_unfriend_txn(const Configuration& c, const AgentId& r,
                                      const AgentId& s, const ParentMap& parents) {
  return child_pair_txn(c, r, s, parents, false);
}

std::set<GuardedTransaction> sg_generate(const AgentSet& agents, const Configuration& c,
                                         const GenerationBounds& bounds) {
  (void)bounds;  // the social graph is finite as-is
  std::set<GuardedTransaction> out;
  for (auto p = agents.begin(); p != agents.end(); ++p) {
    for (auto q = std::next(p); q != agents.end(); ++q) {
      if (state_of(c, *p).friends.contains(*q)) {
        MachineTransaction t = unfriend_txn(c, *p, *q);
        out.insert(GuardedTransaction{t, {*p}});
        out.insert(GuardedTransaction{t, {*q}});
      } else {
        out.insert(GuardedTransaction{befriend_txn(c, *p, *q), {*p, *q}});
      }
    }
  }
  return out;
}

namespace {

struct PairDelta {
  AgentId p, q;
  bool added;  // mutual add (befriend shape) vs mutual remove
};

// Recognizes the mutual add/remove shape on the two active agents of a
// social transaction; nullopt otherwise.
std::optional<PairDelta> active_pair_delta(const MachineTransaction& t,
                                           const AgentId& a, const AgentId& b) {
  const auto* a_pre = std::get_if<SgState>(&t.pre.at(a));
  const auto* b_pre = std::get_if<SgState>(&t.pre.at(b));
  const auto* a_post = std::get_if<SgState>(&t.post.at(a));
  const auto* b_post = std::get_if<SgState>(&t.post.at(b));
  if (!a_pre || !b_pre || !a_post || !b_post) return std::nullopt;

  SgState a_plus = *a_pre;
  a_plus.friends.insert(b);
  SgState b_plus = *b_pre;
  b_plus.friends.insert(a);
  if (!a_pre->friends.contains(b) && *a_post == a_plus && *b_post == b_plus) {
    return PairDelta{a, b, true};
  }
  SgState a_minus = *a_pre;
  a_minus.friends.erase(b);
  SgState b_minus = *b_pre;
  b_minus.friends.erase(a);
  if (a_pre->friends.contains(b) && *a_post == a_minus && *b_post == b_minus) {
    return PairDelta{a, b, false};
  }
  return std::nullopt;
}

}  // namespace

ClassKey sg_class_of(const MachineTransaction& t) {
  if (t.pre.size() == 2 && t.post.size() == 2) {
    const AgentId& a = t.pre.begin()->first;
    const AgentId& b = std::next(t.pre.begin())->first;
    if (auto delta = active_pair_delta(t, a, b)) {
      return delta->added ? befriend_key(a, b) : unfriend_key(a, b);
    }
  }
  throw std::invalid_argument("NotASocialGraphTransaction");
}

ClassKey social_class_of(const MachineTransaction& t) {
  if (t.pre.size() == 2) return sg_class_of(t);
  if (t.pre.size() == 4) {
    // Child transactions: two active children, two stationary parents.
    std::vector<AgentId> active;
    for (const auto& [p, s] : t.pre) {
      if (!(t.post.at(p) == s)) active.push_back(p);
    }
    if (active.size() == 1) {
      // One-sided updates arise when the removed friendship was asymmetric.
      for (const auto& [p, s] : t.pre) {
        if (p == active[0]) continue;
        if (auto delta = active_pair_delta(t, active[0], p)) {
          return delta->added ? child_befriend_key(active[0], p)
                              : child_unfriend_key(active[0], p);
        }
      }
    }
    if (active.size() == 2) {
      if (auto delta = active_pair_delta(t, active[0], active[1])) {
        return delta->added ? child_befriend_key(active[0], active[1])
                            : child_unfriend_key(active[0], active[1]);
      }
    }
  }
  throw std::invalid_argument("NotASocialGraphTransaction");
}

std::set<GuardedTransaction> csg_generate(const AgentSet& agents, const Configuration& c,
                                          const ParentMap& parents,
                                          const GenerationBounds& bounds) {
  (void)bounds;
  std::set<GuardedTransaction> out;
  for (auto r = parents.begin(); r != parents.end(); ++r) {
    for (auto s = std::next(r); s != parents.end(); ++s) {
      const AgentId& child_r = r->first;
      const AgentId& child_s = s->first;
      const AgentId& parent_p = r->second;
      const AgentId& parent_q = s->second;
      if (!agents.contains(child_r) || !agents.contains(child_s)) continue;
      if (!agents.contains(parent_p) || !agents.contains(parent_q)) continue;
      if (parent_p == parent_q) continue;  // four distinct agents required
      const AgentSet four{child_r, child_s, parent_p, parent_q};
      if (four.size() != 4) continue;
      if (state_of(c, child_r).friends.contains(child_s)) {
        MachineTransaction t = child_unfriend_txn(c, child_r, child_s, parents);
        for (const auto& g : four) out.insert(GuardedTransaction{t, {g}});
      } else if (state_of(c, parent_p).friends.contains(parent_q)) {
        out.insert(GuardedTransaction{child_befriend_txn(c, child_r, child_s, parents), four});
      }
    }
  }
  return out;
}

bool mutuality_check(const Configuration& c) {
  for (const auto& [p, sp] : c.agents()) {
    for (const auto& q : std::get<SgState>(sp.machine).friends) {
      if (!c.has_agent(q)) return false;
      if (!std::get<SgState>(c.at(q).machine).friends.contains(p)) return false;
    }
  }
  return true;
}

namespace {

bool sg_state_valid(const AgentSet& agents, const MachineState& s) {
  const auto* state = std::get_if<SgState>(&s);
  if (!state) return false;
  for (const auto& f : state->friends) {
    if (!agents.contains(f)) return false;
  }
  return true;
}

ClassKeySet sg_universe(const AgentSet& agents) {
  ClassKeySet out;
  for (auto p = agents.begin(); p != agents.end(); ++p) {
    for (auto q = std::next(p); q != agents.end(); ++q) {
      out.insert(befriend_key(*p, *q));
      out.insert(unfriend_key(*p, *q));
    }
  }
  return out;
}

}  // namespace

ProtocolSpec sg_protocol() {
  ProtocolSpec spec;
  spec.name = "sg";
  spec.initial_state_of = [](const AgentId&) { return MachineState{SgState{}}; };
  spec.state_valid = sg_state_valid;
  spec.generate = [](const AgentSet& agents, const Configuration& c,
                     const GenerationBounds& bounds) {
    return sg_generate(agents, c, bounds);
  };
  spec.class_of = sg_class_of;
  spec.class_universe = [](const AgentSet& agents, const GenerationBounds&) {
    return sg_universe(agents);
  };
  return spec;
}

ProtocolSpec csg_protocol(const ParentMap& parents) {
  AgentSet children;
  for (const auto& [child, parent] : parents) children.insert(child);

  ProtocolSpec spec;
  spec.name = "csg";
  spec.initial_state_of = [](const AgentId&) { return MachineState{SgState{}}; };
  spec.state_valid = sg_state_valid;
  spec.generate = [parents, children](const AgentSet& agents, const Configuration& c,
                                      const GenerationBounds& bounds) {
    // Adults follow the plain social-graph rules among themselves; children
    // befriend only children, under parental consent.
    AgentSet adults;
    for (const auto& p : agents) {
      if (!children.contains(p)) adults.insert(p);
    }
    std::set<GuardedTransaction> out;
    if (adults.size() >= 2) {
      for (auto& gt : sg_generate(adults, c, bounds)) out.insert(std::move(gt));
    }
    for (auto& gt : csg_generate(agents, c, parents, bounds)) out.insert(std::move(gt));
    return out;
  };
  spec.class_of = social_class_of;
  spec.class_universe = [parents, children](const AgentSet& agents,
                                            const GenerationBounds&) {
    AgentSet adults;
    for (const auto& p : agents) {
      if (!children.contains(p)) adults.insert(p);
    }
    ClassKeySet out = sg_universe(adults);
    for (auto r = parents.begin(); r != parents.end(); ++r) {
      for (auto s = std::next(r); s != parents.end(); ++s) {
        if (r->second == s->second) continue;
        if (!agents.contains(r->first) || !agents.contains(s->first)) continue;
        out.insert(child_befriend_key(r->first, s->first));
        out.insert(child_unfriend_key(r->first, s->first));
      }
    }
    return out;
  };
  return spec;
}

}  // namespace vmts::sg
