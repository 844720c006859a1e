#include "vmts/toychain.hpp"

#include <sstream>
#include <stdexcept>

namespace vmts::toychain {

namespace {

const ChainState& state_of(const Configuration& c, const AgentId& p) {
  return std::get<ChainState>(c.at(p).machine);
}

std::string join_chain(const std::vector<std::string>& chain) {
  std::string out = "[";
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i > 0) out += '|';
    out += chain[i];
  }
  out += ']';
  return out;
}

}  // namespace

ClassKey mine_key(const AgentId& p, const std::string& block_id) {
  return ClassKey("mine(" + p.name() + "," + block_id + ")");
}

ClassKey propagate_key(const AgentId& from, const AgentId& to,
                       const std::vector<std::string>& chain) {
  return ClassKey("propagate(" + from.name() + "->" + to.name() + "," +
                  join_chain(chain) + ")");
}

MachineTransaction mine_txn(const Configuration& c, const AgentId& p) {
  ChainState pre = state_of(c, p);
  ChainState post = pre;
  post.chain.push_back(p.name() + ":" + std::to_string(pre.chain.size()));
  return MachineTransaction{{{p, pre}}, {{p, post}}};
}

std::optional<MachineTransaction> propagate_txn(const Configuration& c,
                                                const AgentId& from, const AgentId& to) {
  ChainState from_pre = state_of(c, from);
  ChainState to_pre = state_of(c, to);
  if (!strictly_extends(from_pre.chain, to_pre.chain)) return std::nullopt;
  ChainState to_post = to_pre;
  to_post.chain = from_pre.chain;
  to_post.is_bootnode = to_pre.is_bootnode;
  return MachineTransaction{{{from, from_pre}, {to, to_pre}},
                            {{from, from_pre}, {to, to_post}}};
}

std::set<GuardedTransaction> toychain_generate(const AgentSet& agents,
                                               const Configuration& c,
                                               const GenerationBounds& bounds) {
  (void)bounds;
  std::set<GuardedTransaction> out;
  for (const auto& p : agents) {
    out.insert(GuardedTransaction{mine_txn(c, p), {p}});
  }
  for (const auto& from : agents) {
    if (!state_of(c, from).is_bootnode) continue;
    for (const auto& to : agents) {
      if (from == to || !state_of(c, to).is_bootnode) continue;
      if (auto txn = propagate_txn(c, from, to)) {
        out.insert(GuardedTransaction{std::move(*txn), {}});  // unguarded
      }
    }
  }
  return out;
}

ClassKey toychain_class_of(const MachineTransaction& t) {
  if (t.pre.size() == 1) {
    const AgentId& p = t.pre.begin()->first;
    const auto* pre = std::get_if<ChainState>(&t.pre.begin()->second);
    const auto* post = std::get_if<ChainState>(&t.post.begin()->second);
    if (pre && post && post->chain.size() == pre->chain.size() + 1 &&
        strictly_extends(post->chain, pre->chain) &&
        post->is_bootnode == pre->is_bootnode) {
      return mine_key(p, post->chain.back());
    }
  }
  if (t.pre.size() == 2) {
    for (const auto& [from, from_state] : t.pre) {
      for (const auto& [to, to_state] : t.pre) {
        if (from == to) continue;
        const auto* from_pre = std::get_if<ChainState>(&from_state);
        const auto* to_pre = std::get_if<ChainState>(&to_state);
        const auto* from_post = std::get_if<ChainState>(&t.post.at(from));
        const auto* to_post = std::get_if<ChainState>(&t.post.at(to));
        if (!from_pre || !to_pre || !from_post || !to_post) continue;
        if (!(*from_post == *from_pre)) continue;
        if (to_post->chain != from_pre->chain) continue;
        if (!strictly_extends(from_pre->chain, to_pre->chain)) continue;
        return propagate_key(from, to, from_pre->chain);
      }
    }
  }
  throw std::invalid_argument("NotAToychainTransaction");
}

ProtocolSpec toychain_protocol(const AgentSet& bootnodes) {
  ProtocolSpec spec;
  spec.name = "toychain";
  spec.initial_state_of = [bootnodes](const AgentId& p) {
    ChainState s;
    s.is_bootnode = bootnodes.contains(p);
    return MachineState{s};
  };
  spec.state_valid = [](const AgentSet&, const MachineState& s) {
    const auto* state = std::get_if<ChainState>(&s);
    return state && !state->chain.empty() && state->chain.front() == kGenesisBlock;
  };
  spec.generate = toychain_generate;
  spec.class_of = toychain_class_of;
  // Willable classes are the mine classes; propagation is unguarded and so
  // never willed. Chain heights are finitized by max_date.
  spec.class_universe = [](const AgentSet& agents, const GenerationBounds& bounds) {
    ClassKeySet out;
    for (const auto& p : agents) {
      for (std::uint64_t h = 1; h <= bounds.max_date; ++h) {
        out.insert(mine_key(p, p.name() + ":" + std::to_string(h)));
      }
    }
    return out;
  };
  return spec;
}

}  // namespace vmts::toychain
