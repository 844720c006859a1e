#include "scenario.hpp"

#include <fstream>
#include <sstream>

#include "vmts/bonds.hpp"
#include "vmts/toychain.hpp"

namespace vmts::cli {

namespace {

[[noreturn]] void fail(const std::string& message) { throw ScenarioError(message); }

const Json& require_field(const Json& j, const char* name, const char* where) {
  auto it = j.find(name);
  if (it == j.end()) fail(std::string(where) + ": missing field '" + name + "'");
  return *it;
}

std::string require_string(const Json& j, const char* name, const char* where) {
  const Json& f = require_field(j, name, where);
  if (!f.is_string()) fail(std::string(where) + ": field '" + name + "' must be a string");
  return f.get<std::string>();
}

std::uint64_t require_nat(const Json& j, const char* name, const char* where) {
  const Json& f = require_field(j, name, where);
  if (!f.is_number_unsigned()) {
    fail(std::string(where) + ": field '" + name + "' must be a non-negative integer");
  }
  return f.get<std::uint64_t>();
}

AgentId require_agent(const Json& j, const char* name, const char* where,
                      const AgentSet& agents) {
  AgentId id(require_string(j, name, where));
  if (!agents.contains(id)) {
    fail(std::string(where) + ": unknown agent '" + id.name() + "'");
  }
  return id;
}

std::pair<AgentId, AgentId> require_agent_pair(const Json& j, const char* where,
                                               const AgentSet& agents) {
  const Json& f = require_field(j, "agents", where);
  if (!f.is_array() || f.size() != 2 || !f[0].is_string() || !f[1].is_string()) {
    fail(std::string(where) + ": 'agents' must be a pair of agent names");
  }
  AgentId a(f[0].get<std::string>());
  AgentId b(f[1].get<std::string>());
  if (a == b) fail(std::string(where) + ": 'agents' must name two distinct agents");
  if (!agents.contains(a)) fail(std::string(where) + ": unknown agent '" + a.name() + "'");
  if (!agents.contains(b)) fail(std::string(where) + ": unknown agent '" + b.name() + "'");
  return {a, b};
}

// Bond literal: [issuer, maturity].
gcb::Bond parse_bond(const Json& j, const char* where, const AgentSet& agents) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_number_unsigned()) {
    fail(std::string(where) + ": bond literal must be [issuer, maturity]");
  }
  gcb::Bond b{AgentId(j[0].get<std::string>()), j[1].get<std::uint64_t>()};
  if (!agents.contains(b.issuer)) {
    fail(std::string(where) + ": unknown bond issuer '" + b.issuer.name() + "'");
  }
  return b;
}

// Bond multiset literal: [[issuer, maturity, count], ...].
gcb::BondMultiset parse_multiset(const Json& j, const char* where, const AgentSet& agents) {
  if (!j.is_array()) fail(std::string(where) + ": expected an array of bond triples");
  gcb::BondMultiset out;
  for (const Json& entry : j) {
    if (!entry.is_array() || entry.size() != 3 || !entry[0].is_string() ||
        !entry[1].is_number_unsigned() || !entry[2].is_number_unsigned() ||
        entry[2].get<std::uint64_t>() == 0) {
      fail(std::string(where) + ": bond triple must be [issuer, maturity, count>=1]");
    }
    gcb::Bond b{AgentId(entry[0].get<std::string>()), entry[1].get<std::uint64_t>()};
    if (!agents.contains(b.issuer)) {
      fail(std::string(where) + ": unknown bond issuer '" + b.issuer.name() + "'");
    }
    out.add(b, entry[2].get<std::uint64_t>());
  }
  return out;
}

void validate_op_spec(const Scenario& s, const Json& spec, bool is_fire, const char* where) {
  if (!spec.is_object()) fail(std::string(where) + ": op spec must be an object");
  const std::string op = require_string(spec, "op", where);
  auto child_of = [&](const AgentId& a) { return s.parents.contains(a); };

  if (s.protocol == ProtocolKind::Sg || s.protocol == ProtocolKind::Csg) {
    if (op == "befriend" || op == "unfriend") {
      auto [a, b] = require_agent_pair(spec, where, s.agents);
      if (s.protocol == ProtocolKind::Csg && (child_of(a) || child_of(b))) {
        fail(std::string(where) + ": children may only use child-befriend/child-unfriend");
      }
      if (is_fire && spec.contains("by")) {
        if (op == "befriend") fail(std::string(where) + ": befriend has a fixed guard");
        AgentId by = require_agent(spec, "by", where, s.agents);
        if (by != a && by != b) fail(std::string(where) + ": 'by' must be a participant");
      }
      return;
    }
    if (s.protocol == ProtocolKind::Csg &&
        (op == "child-befriend" || op == "child-unfriend")) {
      auto [a, b] = require_agent_pair(spec, where, s.agents);
      if (!child_of(a)) fail(std::string(where) + ": MissingParent for '" + a.name() + "'");
      if (!child_of(b)) fail(std::string(where) + ": MissingParent for '" + b.name() + "'");
      if (s.parents.at(a) == s.parents.at(b)) {
        fail(std::string(where) + ": children must have distinct parents");
      }
      if (is_fire && spec.contains("by")) {
        if (op == "child-befriend") {
          fail(std::string(where) + ": child-befriend has a fixed guard");
        }
        AgentId by = require_agent(spec, "by", where, s.agents);
        const AgentSet four{a, b, s.parents.at(a), s.parents.at(b)};
        if (!four.contains(by)) fail(std::string(where) + ": 'by' must be a participant");
      }
      return;
    }
  }
  if (s.protocol == ProtocolKind::Gcb) {
    if (op == "mint") {
      require_agent(spec, "agent", where, s.agents);
      if (require_nat(spec, "quantity", where) == 0) {
        fail(std::string(where) + ": mint quantity must be positive");
      }
      require_nat(spec, "date", where);
      return;
    }
    if (op == "advance") {
      require_agent(spec, "agent", where, s.agents);
      if (spec.contains("to")) {
        if (!is_fire) fail(std::string(where) + ": 'to' is only meaningful on fire steps");
        require_nat(spec, "to", where);
      }
      return;
    }
    if (op == "swap") {
      require_agent_pair(spec, where, s.agents);
      parse_multiset(require_field(spec, "x", where), where, s.agents);
      parse_multiset(require_field(spec, "y", where), where, s.agents);
      return;
    }
    if (op == "pay") {
      AgentId payer = require_agent(spec, "payer", where, s.agents);
      AgentId payee = require_agent(spec, "payee", where, s.agents);
      if (payer == payee) fail(std::string(where) + ": payer and payee must differ");
      parse_multiset(require_field(spec, "bonds", where), where, s.agents);
      return;
    }
    if (op == "redeem") {
      AgentId redeemer = require_agent(spec, "redeemer", where, s.agents);
      AgentId issuer = require_agent(spec, "issuer", where, s.agents);
      if (redeemer == issuer) fail(std::string(where) + ": redeemer and issuer must differ");
      parse_bond(require_field(spec, "returned", where), where, s.agents);
      parse_bond(require_field(spec, "taken", where), where, s.agents);
      return;
    }
  }
  if (s.protocol == ProtocolKind::Toychain) {
    if (op == "mine") {
      require_agent(spec, "agent", where, s.agents);
      return;
    }
    if (op == "propagate") {
      AgentId from = require_agent(spec, "from", where, s.agents);
      AgentId to = require_agent(spec, "to", where, s.agents);
      if (from == to) fail(std::string(where) + ": propagate endpoints must differ");
      if (!s.bootnodes.contains(from) || !s.bootnodes.contains(to)) {
        fail(std::string(where) + ": propagate runs between bootnodes");
      }
      return;
    }
  }
  fail(std::string(where) + ": unknown op '" + op + "' for protocol " +
       to_string(s.protocol));
}

void validate_step(const Scenario& s, const Json& step, std::size_t index) {
  const std::string where = "steps[" + std::to_string(index) + "]";
  if (!step.is_object()) fail(where + ": must be an object");
  const std::string kind = require_string(step, "kind", where.c_str());
  if (kind == "will") {
    require_agent(step, "agent", where.c_str(), s.agents);
    const bool has_set = step.contains("set");
    const bool has_delta = step.contains("add") || step.contains("remove");
    if (has_set == has_delta) {
      fail(where + ": a will step carries either 'set' or 'add'/'remove'");
    }
    for (const char* field : {"set", "add", "remove"}) {
      if (!step.contains(field)) continue;
      if (!step[field].is_array()) {
        fail(where + ": '" + field + "' must be an array");
      }
      for (const Json& spec : step[field]) {
        validate_op_spec(s, spec, false, where.c_str());
      }
    }
    return;
  }
  if (kind == "fire") {
    validate_op_spec(s, step, true, where.c_str());
    return;
  }
  fail(where + ": 'kind' must be \"will\" or \"fire\"");
}

AgentSet parse_agent_list(const Json& j, const char* where) {
  if (!j.is_array() || j.empty()) fail(std::string(where) + ": must be a nonempty array");
  AgentSet out;
  for (const Json& entry : j) {
    if (!entry.is_string()) fail(std::string(where) + ": agent names must be strings");
    AgentId id(entry.get<std::string>());
    if (!out.insert(id).second) {
      fail(std::string(where) + ": duplicate agent '" + id.name() + "'");
    }
  }
  return out;
}

}  // namespace

const char* to_string(ProtocolKind kind) {
  switch (kind) {
    case ProtocolKind::Sg: return "sg";
    case ProtocolKind::Csg: return "csg";
    case ProtocolKind::Gcb: return "gcb";
    case ProtocolKind::Toychain: return "toychain";
  }
  return "?";
}

Scenario parse_scenario(const std::string& json_text) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(std::string("scenario is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) fail("scenario must be a JSON object");

  Scenario s;
  const std::string protocol = require_string(j, "protocol", "scenario");
  if (protocol == "sg") {
    s.protocol = ProtocolKind::Sg;
  } else if (protocol == "csg") {
    s.protocol = ProtocolKind::Csg;
  } else if (protocol == "gcb") {
    s.protocol = ProtocolKind::Gcb;
  } else if (protocol == "toychain") {
    s.protocol = ProtocolKind::Toychain;
  } else {
    fail("scenario: protocol must be one of sg, csg, gcb, toychain");
  }

  s.agents = parse_agent_list(require_field(j, "agents", "scenario"), "scenario.agents");

  if (j.contains("parents") != (s.protocol == ProtocolKind::Csg)) {
    fail("scenario: 'parents' is present iff protocol is csg");
  }
  if (s.protocol == ProtocolKind::Csg) {
    const Json& parents = j["parents"];
    if (!parents.is_object() || parents.empty()) {
      fail("scenario.parents: must be a nonempty object mapping child to parent");
    }
    for (const auto& [child_name, parent_json] : parents.items()) {
      if (!parent_json.is_string()) fail("scenario.parents: parent names must be strings");
      AgentId child(child_name);
      AgentId parent(parent_json.get<std::string>());
      if (child == parent) fail("scenario.parents: no agent is its own parent");
      if (!s.agents.contains(child)) {
        fail("scenario.parents: unknown child '" + child_name + "'");
      }
      if (!s.agents.contains(parent)) {
        fail("scenario.parents: unknown parent '" + parent.name() + "'");
      }
      s.parents.emplace(child, parent);
    }
    for (const auto& [child, parent] : s.parents) {
      if (s.parents.contains(parent)) {
        fail("scenario.parents: children and parents must be distinct agents");
      }
    }
  }

  if (j.contains("bootnodes") != (s.protocol == ProtocolKind::Toychain)) {
    fail("scenario: 'bootnodes' is present iff protocol is toychain");
  }
  if (s.protocol == ProtocolKind::Toychain) {
    s.bootnodes = parse_agent_list(j["bootnodes"], "scenario.bootnodes");
    for (const auto& b : s.bootnodes) {
      if (!s.agents.contains(b)) {
        fail("scenario.bootnodes: unknown agent '" + b.name() + "'");
      }
    }
  }

  if (j.contains("bounds")) {
    const Json& bounds = j["bounds"];
    if (!bounds.is_object()) fail("scenario.bounds: must be an object");
    if (bounds.contains("max_mint_quantity")) {
      s.bounds.max_mint_quantity =
          require_nat(bounds, "max_mint_quantity", "scenario.bounds");
    }
    if (bounds.contains("max_date")) {
      s.bounds.max_date = require_nat(bounds, "max_date", "scenario.bounds");
    }
    if (bounds.contains("max_multiset_size")) {
      s.bounds.max_multiset_size =
          require_nat(bounds, "max_multiset_size", "scenario.bounds");
    }
    if (!s.bounds.valid()) fail("scenario.bounds: all bounds must be >= 1");
  }

  if (j.contains("groups")) {
    const Json& groups = j["groups"];
    if (!groups.is_array() || groups.size() != 2) {
      fail("scenario.groups: must be a pair of agent lists");
    }
    AgentSet a = parse_agent_list(groups[0], "scenario.groups[0]");
    AgentSet b = parse_agent_list(groups[1], "scenario.groups[1]");
    if (!agent_sets_disjoint(a, b)) fail("scenario.groups: groups must be disjoint");
    for (const auto& p : agent_set_union(a, b)) {
      if (!s.agents.contains(p)) fail("scenario.groups: unknown agent '" + p.name() + "'");
    }
    if (agent_set_union(a, b) != s.agents) {
      fail("scenario.groups: groups must cover all agents");
    }
    s.groups = {std::move(a), std::move(b)};
  }

  if (j.contains("steps")) {
    const Json& steps = j["steps"];
    if (!steps.is_array()) fail("scenario.steps: must be an array");
    for (const Json& step : steps) s.steps.push_back(step);
  }
  for (std::size_t i = 0; i < s.steps.size(); ++i) validate_step(s, s.steps[i], i);

  if (j.contains("loop_start")) {
    const std::uint64_t loop_start = require_nat(j, "loop_start", "scenario");
    if (loop_start >= s.steps.size()) {
      fail("scenario.loop_start: must index a step (loop segment nonempty)");
    }
    s.loop_start = static_cast<std::size_t>(loop_start);
  }
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open scenario file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario(buffer.str());
}

ProtocolSpec scenario_protocol(const Scenario& scenario) {
  switch (scenario.protocol) {
    case ProtocolKind::Sg: return sg::sg_protocol();
    case ProtocolKind::Csg: return sg::csg_protocol(scenario.parents);
    case ProtocolKind::Gcb: return gcb::gcb_protocol();
    case ProtocolKind::Toychain: return toychain::toychain_protocol(scenario.bootnodes);
  }
  fail("unreachable protocol kind");
}

ProtocolInstance scenario_instance(const Scenario& scenario) {
  return ProtocolInstance(scenario_protocol(scenario), scenario.agents, scenario.bounds);
}

namespace {

[[noreturn]] void not_applicable(const std::string& reason) {
  throw KernelError(KernelErrorCode::NotEnabled, reason);
}

std::string next_block_id(const Configuration& c, const AgentId& p) {
  const auto& chain = std::get<toychain::ChainState>(c.at(p).machine).chain;
  return p.name() + ":" + std::to_string(chain.size());
}

}  // namespace

ClassKey resolve_class_spec(const Scenario& scenario, const Json& spec,
                            const Configuration& c) {
  const std::string op = spec.at("op").get<std::string>();
  if (op == "befriend" || op == "unfriend" || op == "child-befriend" ||
      op == "child-unfriend") {
    AgentId a(spec.at("agents")[0].get<std::string>());
    AgentId b(spec.at("agents")[1].get<std::string>());
    if (op == "befriend") return sg::befriend_key(a, b);
    if (op == "unfriend") return sg::unfriend_key(a, b);
    if (op == "child-befriend") return sg::child_befriend_key(a, b);
    return sg::child_unfriend_key(a, b);
  }
  if (op == "mint") {
    return gcb::mint_key(AgentId(spec.at("agent").get<std::string>()),
                         spec.at("quantity").get<std::uint64_t>(),
                         spec.at("date").get<std::uint64_t>());
  }
  if (op == "advance") {
    return gcb::advance_key(AgentId(spec.at("agent").get<std::string>()));
  }
  if (op == "swap") {
    AgentId a(spec.at("agents")[0].get<std::string>());
    AgentId b(spec.at("agents")[1].get<std::string>());
    return gcb::swap_key(a, parse_multiset(spec.at("x"), "swap.x", scenario.agents), b,
                         parse_multiset(spec.at("y"), "swap.y", scenario.agents));
  }
  if (op == "pay") {
    return gcb::pay_key(AgentId(spec.at("payer").get<std::string>()),
                        AgentId(spec.at("payee").get<std::string>()),
                        parse_multiset(spec.at("bonds"), "pay.bonds", scenario.agents));
  }
  if (op == "redeem") {
    // Redemption is a guarded variant of the single-for-single swap class.
    AgentId redeemer(spec.at("redeemer").get<std::string>());
    AgentId issuer(spec.at("issuer").get<std::string>());
    gcb::Bond returned = parse_bond(spec.at("returned"), "redeem.returned", scenario.agents);
    gcb::Bond taken = parse_bond(spec.at("taken"), "redeem.taken", scenario.agents);
    return gcb::swap_key(redeemer, gcb::BondMultiset::single(returned), issuer,
                         gcb::BondMultiset::single(taken));
  }
  if (op == "mine") {
    AgentId p(spec.at("agent").get<std::string>());
    return toychain::mine_key(p, next_block_id(c, p));
  }
  if (op == "propagate") {
    AgentId from(spec.at("from").get<std::string>());
    AgentId to(spec.at("to").get<std::string>());
    return toychain::propagate_key(
        from, to, std::get<toychain::ChainState>(c.at(from).machine).chain);
  }
  fail("unknown op in class spec: " + op);
}

std::vector<GuardedTransaction> resolve_fire(const Scenario& scenario, const Json& step,
                                             const Configuration& c) {
  const std::string op = step.at("op").get<std::string>();
  std::vector<GuardedTransaction> candidates;

  if (op == "befriend") {
    AgentId a(step.at("agents")[0].get<std::string>());
    AgentId b(step.at("agents")[1].get<std::string>());
    candidates.push_back({sg::befriend_txn(c, a, b), {a, b}});
  } else if (op == "unfriend") {
    AgentId a(step.at("agents")[0].get<std::string>());
    AgentId b(step.at("agents")[1].get<std::string>());
    MachineTransaction t = sg::unfriend_txn(c, a, b);
    candidates.push_back({t, {a}});
    candidates.push_back({t, {b}});
  } else if (op == "child-befriend") {
    AgentId a(step.at("agents")[0].get<std::string>());
    AgentId b(step.at("agents")[1].get<std::string>());
    const AgentId& pa = scenario.parents.at(a);
    const AgentId& pb = scenario.parents.at(b);
    // consent precondition: the parents must be friends
    if (!std::get<sg::SgState>(c.at(pa).machine).friends.contains(pb)) {
      not_applicable("child-befriend requires the parents to be friends");
    }
    candidates.push_back({sg::child_befriend_txn(c, a, b, scenario.parents), {a, b, pa, pb}});
  } else if (op == "child-unfriend") {
    AgentId a(step.at("agents")[0].get<std::string>());
    AgentId b(step.at("agents")[1].get<std::string>());
    MachineTransaction t = sg::child_unfriend_txn(c, a, b, scenario.parents);
    for (const AgentId& g : {a, b, scenario.parents.at(a), scenario.parents.at(b)}) {
      candidates.push_back({t, {g}});
    }
  } else if (op == "mint") {
    AgentId p(step.at("agent").get<std::string>());
    candidates.push_back({gcb::mint_txn(c, p, step.at("quantity").get<std::uint64_t>(),
                                        step.at("date").get<std::uint64_t>()),
                          {p}});
  } else if (op == "advance") {
    AgentId p(step.at("agent").get<std::string>());
    const auto& state = std::get<gcb::GcbState>(c.at(p).machine);
    const std::uint64_t to =
        step.contains("to") ? step.at("to").get<std::uint64_t>() : state.local_date + 1;
    auto txn = gcb::advance_txn(c, p, to);
    if (!txn) not_applicable("advance target date must exceed the current local date");
    candidates.push_back({std::move(*txn), {}});
  } else if (op == "swap") {
    AgentId a(step.at("agents")[0].get<std::string>());
    AgentId b(step.at("agents")[1].get<std::string>());
    auto txn =
        gcb::exchange_txn(c, a, parse_multiset(step.at("x"), "swap.x", scenario.agents),
                          b, parse_multiset(step.at("y"), "swap.y", scenario.agents));
    if (!txn) not_applicable("swap sides must be held and differ");
    candidates.push_back({std::move(*txn), {a, b}});
  } else if (op == "pay") {
    AgentId payer(step.at("payer").get<std::string>());
    AgentId payee(step.at("payee").get<std::string>());
    auto txn = gcb::pay_txn(c, payer, payee,
                            parse_multiset(step.at("bonds"), "pay.bonds", scenario.agents));
    if (!txn) not_applicable("payment bonds must be payee-issued coins held by the payer");
    candidates.push_back({std::move(*txn), {payer}});
  } else if (op == "redeem") {
    AgentId redeemer(step.at("redeemer").get<std::string>());
    AgentId issuer(step.at("issuer").get<std::string>());
    auto gt = gcb::redeem_gt(
        c, redeemer, issuer,
        parse_bond(step.at("returned"), "redeem.returned", scenario.agents),
        parse_bond(step.at("taken"), "redeem.taken", scenario.agents));
    if (!gt) not_applicable("redemption needs a mature issuer-bond and a held counter-bond");
    candidates.push_back(std::move(*gt));
  } else if (op == "mine") {
    AgentId p(step.at("agent").get<std::string>());
    candidates.push_back({toychain::mine_txn(c, p), {p}});
  } else if (op == "propagate") {
    AgentId from(step.at("from").get<std::string>());
    AgentId to(step.at("to").get<std::string>());
    auto txn = toychain::propagate_txn(c, from, to);
    if (!txn) not_applicable("propagation needs a strictly extending source chain");
    candidates.push_back({std::move(*txn), {}});
  } else {
    fail("unknown fire op: " + op);
  }

  if (step.contains("by")) {
    const AgentId by(step.at("by").get<std::string>());
    std::erase_if(candidates,
                  [&](const GuardedTransaction& gt) { return !gt.guard.contains(by); });
    if (candidates.empty()) not_applicable("no guard variant matches 'by'");
  }
  return candidates;
}

ScriptReplay replay_script(const Scenario& scenario, const ProtocolInstance& instance) {
  ScriptReplay out;
  out.trace.initial = instance.initial();
  out.trace.loop_start = scenario.loop_start;
  out.configs.push_back(out.trace.initial);

  for (std::size_t i = 0; i < scenario.steps.size(); ++i) {
    const Json& raw = scenario.steps[i];
    const Configuration& current = out.configs.back();
    try {
      if (raw.at("kind").get<std::string>() == "will") {
        const AgentId agent(raw.at("agent").get<std::string>());
        ClassKeySet next_volition;
        if (raw.contains("set")) {
          for (const Json& spec : raw["set"]) {
            next_volition.insert(resolve_class_spec(scenario, spec, current));
          }
        } else {
          next_volition = current.at(agent).volition;
          if (raw.contains("add")) {
            for (const Json& spec : raw["add"]) {
              next_volition.insert(resolve_class_spec(scenario, spec, current));
            }
          }
          if (raw.contains("remove")) {
            for (const Json& spec : raw["remove"]) {
              next_volition.erase(resolve_class_spec(scenario, spec, current));
            }
          }
        }
        Configuration next =
            change_volition(agent, next_volition, current, instance.universe());
        out.trace.steps.push_back(ChangeVolitionStep{agent, std::move(next_volition)});
        out.fired.push_back(std::nullopt);
        out.configs.push_back(std::move(next));
      } else {
        const auto candidates = resolve_fire(scenario, raw, current);
        const GuardedTransaction* chosen = nullptr;
        for (const auto& gt : candidates) {
          if (enabled(gt, current, instance.class_of())) {
            chosen = &gt;
            break;
          }
        }
        if (!chosen) not_applicable("no guard variant of the transaction is enabled");
        Configuration next = fire(*chosen, current, instance.class_of());
        out.fired.push_back(instance.class_key_of(chosen->txn));
        out.trace.steps.push_back(FireStep{*chosen});
        out.configs.push_back(std::move(next));
      }
    } catch (const KernelError& e) {
      out.failed_index = i;
      out.failure_reason = std::string(to_string(e.code())) + ": " + e.what();
      return out;
    }
  }
  return out;
}

}  // namespace vmts::cli
