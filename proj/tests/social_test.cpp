#include <doctest.h>

#include <functional>
#include <random>

#include "vmts/kernel.hpp"
#include "vmts/social.hpp"

using namespace vmts;

namespace {

const AgentId kP("p");
const AgentId kQ("q");
const AgentId kR("r");
const AgentId kS("s");

Configuration sg_config(std::map<AgentId, std::set<AgentId>> friends) {
  std::map<AgentId, AgentState> agents;
  for (auto& [id, fs] : friends) {
    agents.emplace(id, AgentState{{}, sg::SgState{std::move(fs)}});
  }
  return Configuration(std::move(agents));
}

std::set<ClassKey> keys_of(const std::set<GuardedTransaction>& gts,
                           const ClassOf& class_of) {
  std::set<ClassKey> out;
  for (const auto& gt : gts) out.insert(class_of(gt.txn));
  return out;
}

}  // namespace

TEST_CASE("sg_generate: befriend for strangers, two unfriend variants for friends") {
  Configuration strangers = sg_config({{kP, {}}, {kQ, {}}});
  auto gts = sg::sg_generate({kP, kQ}, strangers, {});
  REQUIRE(gts.size() == 1);
  const auto& gt = *gts.begin();
  CHECK(sg::sg_class_of(gt.txn) == sg::befriend_key(kP, kQ));
  CHECK(gt.guard == AgentSet{kP, kQ});

  Configuration friends = sg_config({{kP, {kQ}}, {kQ, {kP}}});
  auto gts2 = sg::sg_generate({kP, kQ}, friends, {});
  REQUIRE(gts2.size() == 2);
  std::set<AgentSet> guards;
  for (const auto& g : gts2) {
    CHECK(sg::sg_class_of(g.txn) == sg::unfriend_key(kP, kQ));
    guards.insert(g.guard);
  }
  CHECK(guards == std::set<AgentSet>{{kP}, {kQ}});

  // singleton agent set: no pair, nothing generated
  Configuration alone = sg_config({{kP, {}}});
  CHECK(sg::sg_generate({kP}, alone, {}).empty());
}

TEST_CASE("befriend/unfriend exclusivity per pair at every configuration") {
  for (bool friends : {false, true}) {
    Configuration c = friends ? sg_config({{kP, {kQ}}, {kQ, {kP}}, {kR, {}}})
                              : sg_config({{kP, {}}, {kQ, {}}, {kR, {}}});
    auto keys = keys_of(sg::sg_generate({kP, kQ, kR}, c, {}), sg::sg_class_of);
    CHECK(keys.contains(sg::befriend_key(kP, kQ)) != friends);
    CHECK(keys.contains(sg::unfriend_key(kP, kQ)) == friends);
    CHECK(keys.contains(sg::befriend_key(kP, kR)));
    CHECK(!keys.contains(sg::unfriend_key(kP, kR)));
  }
}

TEST_CASE("sg_class_of: unordered pairs and shared keys across guard variants") {
  Configuration c = sg_config({{kP, {}}, {kQ, {}}});
  CHECK(sg::sg_class_of(sg::befriend_txn(c, kP, kQ)) ==
        sg::sg_class_of(sg::befriend_txn(c, kQ, kP)));
  CHECK(sg::befriend_key(kP, kQ) == sg::befriend_key(kQ, kP));

  Configuration friends = sg_config({{kP, {kQ}}, {kQ, {kP}}});
  MachineTransaction uf = sg::unfriend_txn(friends, kP, kQ);
  GuardedTransaction by_p{uf, {kP}};
  GuardedTransaction by_q{uf, {kQ}};
  CHECK(sg::sg_class_of(by_p.txn) == sg::sg_class_of(by_q.txn));

  // a transaction that is not a social-graph one
  MachineTransaction junk;
  junk.pre.emplace(kP, sg::SgState{});
  junk.post.emplace(kP, sg::SgState{{kQ}});
  CHECK_THROWS_AS(sg::sg_class_of(junk), std::invalid_argument);
}

TEST_CASE("csg_generate: parental consent gates child befriending") {
  const sg::ParentMap parents{{kR, kP}, {kS, kQ}};
  const AgentSet agents{kP, kQ, kR, kS};

  // parents not friends: no child-befriend
  Configuration cold = sg_config({{kP, {}}, {kQ, {}}, {kR, {}}, {kS, {}}});
  CHECK(sg::csg_generate(agents, cold, parents, {}).empty());

  // parents friends: child-befriend guarded by all four
  Configuration warm = sg_config({{kP, {kQ}}, {kQ, {kP}}, {kR, {}}, {kS, {}}});
  auto gts = sg::csg_generate(agents, warm, parents, {});
  REQUIRE(gts.size() == 1);
  CHECK(gts.begin()->guard == AgentSet{kP, kQ, kR, kS});
  CHECK(gts.begin()->txn.participants() == AgentSet{kP, kQ, kR, kS});
  CHECK(sg::social_class_of(gts.begin()->txn) == sg::child_befriend_key(kR, kS));

  // children friends: four unfriend variants, each guarded by one agent
  Configuration linked =
      sg_config({{kP, {kQ}}, {kQ, {kP}}, {kR, {kS}}, {kS, {kR}}});
  auto unfriends = sg::csg_generate(agents, linked, parents, {});
  REQUIRE(unfriends.size() == 4);
  std::set<AgentSet> guards;
  for (const auto& gt : unfriends) {
    CHECK(sg::social_class_of(gt.txn) == sg::child_unfriend_key(kR, kS));
    guards.insert(gt.guard);
  }
  CHECK(guards == std::set<AgentSet>{{kP}, {kQ}, {kR}, {kS}});
}

TEST_CASE("csg_generate skips same-parent pairs") {
  const sg::ParentMap parents{{kR, kP}, {kS, kP}};
  Configuration c = sg_config({{kP, {}}, {kR, {}}, {kS, {}}});
  CHECK(sg::csg_generate({kP, kR, kS}, c, parents, {}).empty());
}

TEST_CASE("csg protocol mixes adult and child transactions") {
  const sg::ParentMap parents{{kR, kP}, {kS, kQ}};
  ProtocolSpec spec = sg::csg_protocol(parents);
  ProtocolInstance inst(spec, {kP, kQ, kR, kS}, {});

  auto keys0 = keys_of(inst.transactions_at(inst.initial()), spec.class_of);
  CHECK(keys0.contains(sg::befriend_key(kP, kQ)));         // adults befriend freely
  CHECK(!keys0.contains(sg::befriend_key(kR, kS)));        // children never adult-befriend
  CHECK(!keys0.contains(sg::befriend_key(kP, kR)));        // no child-adult pairs
  CHECK(!keys0.contains(sg::child_befriend_key(kR, kS)));  // consent missing

  CHECK(inst.universe().contains(sg::child_befriend_key(kR, kS)));
  CHECK(inst.universe().contains(sg::child_unfriend_key(kR, kS)));
  CHECK(!inst.universe().contains(sg::befriend_key(kP, kR)));
}

TEST_CASE("mutuality_check on hand-built configurations") {
  CHECK(sg::mutuality_check(sg_config({{kP, {}}, {kQ, {}}})));
  CHECK(sg::mutuality_check(sg_config({{kP, {kQ}}, {kQ, {kP}}})));
  CHECK(!sg::mutuality_check(sg_config({{kP, {kQ}}, {kQ, {}}})));
}

TEST_CASE("mutuality and the one-edge delta hold along random social runs") {
  std::mt19937 rng(99u);
  const AgentSet agents{kP, kQ, kR, kS};
  ProtocolInstance inst(sg::sg_protocol(), agents, {});

  auto edges = [](const Configuration& c) {
    std::set<std::pair<AgentId, AgentId>> out;
    for (const auto& [p, state] : c.agents()) {
      for (const auto& q : std::get<sg::SgState>(state.machine).friends) {
        out.insert(p < q ? std::pair{p, q} : std::pair{q, p});
      }
    }
    return out;
  };

  for (int run = 0; run < 50; ++run) {
    Configuration c = inst.initial();
    for (int step = 0; step < 30; ++step) {
      std::vector<std::pair<bool, Configuration>> moves;  // (is_fire, successor)
      const auto& gts = inst.transactions_at(c);
      for (const auto& gt : gts) {
        const ClassKey key = inst.class_key_of(gt.txn);
        for (const auto& g : gt.guard) {
          ClassKeySet v = c.at(g).volition;
          if (v.contains(key)) {
            v.erase(key);
          } else {
            v.insert(key);
          }
          moves.emplace_back(false, change_volition(g, v, c, inst.universe()));
        }
        if (enabled(gt, c, inst.class_of())) {
          moves.emplace_back(true, fire(gt, c, inst.class_of()));
        }
      }
      if (moves.empty()) break;
      auto& [is_fire, next] = moves[rng() % moves.size()];
      CHECK(sg::mutuality_check(next));
      const auto before = edges(c);
      const auto after = edges(next);
      if (is_fire) {
        std::set<std::pair<AgentId, AgentId>> diff;
        std::set_symmetric_difference(before.begin(), before.end(), after.begin(),
                                      after.end(), std::inserter(diff, diff.begin()));
        CHECK(diff.size() == 1);
      } else {
        CHECK(before == after);
      }
      c = std::move(next);
    }
  }
}
