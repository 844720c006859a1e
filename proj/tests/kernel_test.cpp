#include <doctest.h>

#include <random>

#include "vmts/kernel.hpp"
#include "vmts/social.hpp"

using namespace vmts;

namespace {

const AgentId kP("p");
const AgentId kQ("q");
const AgentId kR("r");

Configuration sg_config(std::map<AgentId, std::set<AgentId>> friends,
                        std::map<AgentId, ClassKeySet> volitions = {}) {
  std::map<AgentId, AgentState> agents;
  for (auto& [id, fs] : friends) {
    AgentState state;
    state.machine = sg::SgState{std::move(fs)};
    if (auto it = volitions.find(id); it != volitions.end()) state.volition = it->second;
    agents.emplace(id, std::move(state));
  }
  return Configuration(std::move(agents));
}

ClassKeySet sg_universe_for(const AgentSet& agents) {
  return sg::sg_protocol().class_universe(agents, {});
}

}  // namespace

TEST_CASE("validate_transaction accepts a befriend and rejects degenerate shapes") {
  Configuration c = sg_config({{kP, {}}, {kQ, {}}});
  MachineTransaction befriend = sg::befriend_txn(c, kP, kQ);
  CHECK(!validate_transaction(befriend).has_value());

  MachineTransaction identity = befriend;
  identity.post = identity.pre;
  CHECK(validate_transaction(identity) == TxnDefect::Identity);

  MachineTransaction missing = befriend;
  missing.post.erase(kQ);
  CHECK(validate_transaction(missing) == TxnDefect::DomainMismatch);

  MachineTransaction renamed = befriend;
  auto node = renamed.post.extract(kQ);
  node.key() = kR;
  renamed.post.insert(std::move(node));
  CHECK(validate_transaction(renamed) == TxnDefect::DomainMismatch);

  CHECK(validate_transaction(MachineTransaction{}) == TxnDefect::EmptyParticipants);
}

TEST_CASE("validate_guarded rejects guards outside the participants") {
  Configuration c = sg_config({{kP, {}}, {kQ, {}}});
  GuardedTransaction gt{sg::befriend_txn(c, kP, kQ), {kR}};
  CHECK(validate_guarded(gt) == TxnDefect::GuardNotParticipants);
}

TEST_CASE("machine precondition matches exact states") {
  Configuration empty = sg_config({{kP, {}}, {kQ, {}}});
  MachineTransaction befriend = sg::befriend_txn(empty, kP, kQ);
  CHECK(machine_precondition_holds(befriend, empty));

  // q already a friend of p: the recorded pre-state no longer matches.
  Configuration friends = sg_config({{kP, {kQ}}, {kQ, {kP}}});
  CHECK(!machine_precondition_holds(befriend, friends));

  // participant outside the configuration's domain
  Configuration only_p = sg_config({{kP, {}}});
  CHECK(!machine_precondition_holds(befriend, only_p));
}

TEST_CASE("enabled combines the machine precondition with guard volitions") {
  const ClassKey key = sg::befriend_key(kP, kQ);
  Configuration both = sg_config({{kP, {}}, {kQ, {}}}, {{kP, {key}}, {kQ, {key}}});
  GuardedTransaction gt{sg::befriend_txn(both, kP, kQ), {kP, kQ}};
  CHECK(enabled(gt, both, sg::sg_class_of));

  Configuration only_p = sg_config({{kP, {}}, {kQ, {}}}, {{kP, {key}}});
  CHECK(!enabled(gt, only_p, sg::sg_class_of));

  // empty guard: enabled whenever the machine precondition is met
  GuardedTransaction unguarded{gt.txn, {}};
  Configuration unwilling = sg_config({{kP, {}}, {kQ, {}}});
  CHECK(enabled(unguarded, unwilling, sg::sg_class_of));
}

TEST_CASE("class_enabled holds when any guard variant is enabled") {
  const ClassKey key = sg::unfriend_key(kP, kQ);
  Configuration c =
      sg_config({{kP, {kQ}}, {kQ, {kP}}}, {{kQ, {key}}});  // only q wills
  MachineTransaction txn = sg::unfriend_txn(c, kP, kQ);
  std::set<GuardedTransaction> candidates{{txn, {kP}}, {txn, {kQ}}};
  CHECK(class_enabled(key, c, candidates, sg::sg_class_of));

  Configuration unwilling = sg_config({{kP, {kQ}}, {kQ, {kP}}});
  CHECK(!class_enabled(key, unwilling, candidates, sg::sg_class_of));

  // no candidate matching the machine precondition
  Configuration strangers = sg_config({{kP, {}}, {kQ, {}}}, {{kQ, {key}}});
  CHECK(!class_enabled(key, strangers, candidates, sg::sg_class_of));
}

TEST_CASE("fire applies post-states, keeps others stationary, discharges everywhere") {
  const ClassKey key = sg::befriend_key(kP, kQ);
  Configuration c = sg_config({{kP, {}}, {kQ, {}}, {kR, {}}},
                              {{kP, {key}}, {kQ, {key}}, {kR, {key}}});
  GuardedTransaction gt{sg::befriend_txn(c, kP, kQ), {kP, kQ}};
  Configuration after = fire(gt, c, sg::sg_class_of);

  CHECK(std::get<sg::SgState>(after.at(kP).machine).friends == std::set<AgentId>{kQ});
  CHECK(std::get<sg::SgState>(after.at(kQ).machine).friends == std::set<AgentId>{kP});
  CHECK(after.at(kR).machine == c.at(kR).machine);
  for (const auto& [id, state] : after.agents()) {
    CHECK(!state.volition.contains(key));
  }
  CHECK(after != c);

  // oracle agrees that the result is a transition
  const auto R = sg::sg_generate({kP, kQ, kR}, c, {});
  CHECK(is_transition(c, after, R, sg::sg_class_of, sg_universe_for({kP, kQ, kR})));

  Configuration unwilling = sg_config({{kP, {}}, {kQ, {}}, {kR, {}}});
  CHECK_THROWS_AS(fire(gt, unwilling, sg::sg_class_of), KernelError);
}

TEST_CASE("change_volition replaces one agent's volition and nothing else") {
  const AgentSet agents{kP, kQ};
  const ClassKeySet universe = sg_universe_for(agents);
  const ClassKey key = sg::befriend_key(kP, kQ);
  Configuration c = sg_config({{kP, {}}, {kQ, {}}});

  Configuration willed = change_volition(kP, {key}, c, universe);
  CHECK(willed.at(kP).volition == ClassKeySet{key});
  CHECK(willed.at(kQ) == c.at(kQ));
  CHECK(willed.at(kP).machine == c.at(kP).machine);

  CHECK_THROWS_AS(change_volition(kP, {}, c, universe), KernelError);  // NoChange
  CHECK_THROWS_AS(change_volition(kR, {key}, c, universe), KernelError);

  // a key of a transaction over agents outside the instance set
  const ClassKey foreign = sg::befriend_key(kP, kR);
  try {
    change_volition(kP, {foreign}, c, universe);
    FAIL("expected UnknownClass");
  } catch (const KernelError& e) {
    CHECK(e.code() == KernelErrorCode::UnknownClass);
  }
}

TEST_CASE("is_transition decides both transition forms and rejects junk") {
  const AgentSet agents{kP, kQ};
  const ClassKeySet universe = sg_universe_for(agents);
  const ClassKey key = sg::befriend_key(kP, kQ);
  Configuration c = sg_config({{kP, {}}, {kQ, {}}}, {{kP, {key}}, {kQ, {key}}});
  const auto R = sg::sg_generate(agents, c, {});

  CHECK(!is_transition(c, c, R, sg::sg_class_of, universe));

  // change-volition form
  Configuration willed = c;
  willed.at(kP).volition = {};
  CHECK(is_transition(c, willed, R, sg::sg_class_of, universe));

  // two volitions changed at once is not a transition
  Configuration both = willed;
  both.at(kQ).volition = {};
  CHECK(!is_transition(c, both, R, sg::sg_class_of, universe));

  // machine changes with no matching generated transaction
  Configuration junk = c;
  std::get<sg::SgState>(junk.at(kP).machine).friends = {kQ};
  std::get<sg::SgState>(junk.at(kQ).machine).friends = {};
  junk.at(kP).volition.erase(key);
  CHECK(!is_transition(c, junk, R, sg::sg_class_of, universe));

  // fire result without the discharge is rejected
  GuardedTransaction gt{sg::befriend_txn(c, kP, kQ), {kP, kQ}};
  Configuration fired = fire(gt, c, sg::sg_class_of);
  CHECK(is_transition(c, fired, R, sg::sg_class_of, universe));
  Configuration undischarged = fired;
  undischarged.at(kQ).volition.insert(key);
  CHECK(!is_transition(c, undischarged, R, sg::sg_class_of, universe));
}

TEST_CASE("guard monotonicity: shrinking a guard preserves enablement") {
  std::mt19937 rng(20260808u);
  const AgentSet agents{kP, kQ, kR};
  const std::vector<AgentId> ids(agents.begin(), agents.end());
  const ClassKeySet universe = sg_universe_for(agents);
  const std::vector<ClassKey> keys(universe.begin(), universe.end());

  for (int sample = 0; sample < 500; ++sample) {
    std::map<AgentId, std::set<AgentId>> friends;
    std::map<AgentId, ClassKeySet> volitions;
    for (const auto& id : ids) {
      std::set<AgentId> fs;
      for (const auto& other : ids) {
        if (other != id && rng() % 2 == 0) fs.insert(other);
      }
      friends[id] = std::move(fs);
      ClassKeySet v;
      for (const auto& k : keys) {
        if (rng() % 3 == 0) v.insert(k);
      }
      volitions[id] = std::move(v);
    }
    Configuration c = sg_config(std::move(friends), std::move(volitions));
    for (const auto& gt : sg::sg_generate(agents, c, {})) {
      if (!enabled(gt, c, sg::sg_class_of)) continue;
      // every subset of the guard also enables
      std::vector<AgentId> guard(gt.guard.begin(), gt.guard.end());
      for (std::size_t mask = 0; mask < (1u << guard.size()); ++mask) {
        AgentSet sub;
        for (std::size_t bit = 0; bit < guard.size(); ++bit) {
          if (mask & (1u << bit)) sub.insert(guard[bit]);
        }
        CHECK(enabled(GuardedTransaction{gt.txn, sub}, c, sg::sg_class_of));
      }
    }
  }
}

TEST_CASE("closure compositionality: transitions of a union are the union of transitions") {
  std::mt19937 rng(7u);
  const AgentSet agents{kP, kQ, kR};
  const ClassKeySet universe = sg_universe_for(agents);

  auto fire_successors = [&](const Configuration& c, const std::set<GuardedTransaction>& R) {
    std::set<Configuration> out;
    for (const auto& gt : R) {
      if (enabled(gt, c, sg::sg_class_of)) out.insert(fire(gt, c, sg::sg_class_of));
    }
    return out;
  };

  for (int sample = 0; sample < 200; ++sample) {
    std::map<AgentId, std::set<AgentId>> friends;
    std::map<AgentId, ClassKeySet> volitions;
    const std::vector<AgentId> ids(agents.begin(), agents.end());
    for (const auto& id : ids) {
      std::set<AgentId> fs;
      for (const auto& other : ids) {
        if (other != id && rng() % 2 == 0) fs.insert(other);
      }
      friends[id] = std::move(fs);
    }
    const std::vector<ClassKey> keys(universe.begin(), universe.end());
    for (const auto& id : ids) {
      ClassKeySet v;
      for (const auto& k : keys) {
        if (rng() % 2 == 0) v.insert(k);
      }
      volitions[id] = std::move(v);
    }
    Configuration c = sg_config(std::move(friends), std::move(volitions));

    const auto all = sg::sg_generate(agents, c, {});
    std::set<GuardedTransaction> left, right;
    for (const auto& gt : all) {
      (rng() % 2 == 0 ? left : right).insert(gt);
    }
    std::set<GuardedTransaction> both = left;
    both.insert(right.begin(), right.end());

    auto combined = fire_successors(c, both);
    auto split = fire_successors(c, left);
    for (auto& s : fire_successors(c, right)) split.insert(s);
    CHECK(combined == split);
  }
}

TEST_CASE("well-formedness: equal class keys imply equal participant sets") {
  const AgentSet agents{kP, kQ, kR};
  Configuration empty = sg_config({{kP, {}}, {kQ, {}}, {kR, {}}});
  Configuration friends = sg_config({{kP, {kQ, kR}}, {kQ, {kP}}, {kR, {kP}}});
  std::map<ClassKey, AgentSet> seen;
  for (const Configuration& c : {empty, friends}) {
    for (const auto& gt : sg::sg_generate(agents, c, {})) {
      const ClassKey key = sg::sg_class_of(gt.txn);
      auto [it, inserted] = seen.emplace(key, gt.txn.participants());
      CHECK(it->second == gt.txn.participants());
    }
  }
}
