#include <doctest.h>

#include "vmts/bonds.hpp"
#include "vmts/kernel.hpp"
#include "vmts/replay.hpp"

using namespace vmts;
using gcb::Bond;
using gcb::BondMultiset;
using gcb::GcbState;

namespace {

const AgentId kP("p");
const AgentId kQ("q");

Configuration gcb_config(std::map<AgentId, GcbState> states) {
  std::map<AgentId, AgentState> agents;
  for (auto& [id, s] : states) agents.emplace(id, AgentState{{}, std::move(s)});
  return Configuration(std::move(agents));
}

std::set<ClassKey> keys_of(const std::set<GuardedTransaction>& gts) {
  std::set<ClassKey> out;
  for (const auto& gt : gts) out.insert(gcb::gcb_class_of(gt.txn));
  return out;
}

}  // namespace

TEST_CASE("maturity is holder-relative") {
  CHECK(gcb::is_mature(Bond{kQ, 0}, GcbState{{}, 0}));  // a coin from day one
  // the same bond seen by two holders with different local dates
  CHECK(!gcb::is_mature(Bond{kQ, 5}, GcbState{{}, 3}));
  CHECK(gcb::is_mature(Bond{kQ, 5}, GcbState{{}, 7}));
}

TEST_CASE("gcb_generate: empty holdings yield mints and advances only") {
  Configuration c = gcb_config({{kP, {}}});
  auto gts = gcb::gcb_generate({kP}, c, {1, 1, 1});
  auto keys = keys_of(gts);
  CHECK(keys == std::set<ClassKey>{gcb::mint_key(kP, 1, 0), gcb::mint_key(kP, 1, 1),
                                   gcb::advance_key(kP)});
  for (const auto& gt : gts) {
    const auto key = gcb::gcb_class_of(gt.txn);
    if (key == gcb::advance_key(kP)) {
      CHECK(gt.guard.empty());  // advance-date is unguarded
    } else {
      CHECK(gt.guard == AgentSet{kP});
    }
  }
}

TEST_CASE("gcb_generate: redemption variants and the redeemer's free choice") {
  // p holds a mature q-bond; q holds two distinct bonds.
  BondMultiset p_holdings = BondMultiset::single(Bond{kQ, 0});
  BondMultiset q_holdings = BondMultiset::single(Bond{kQ, 3});
  q_holdings.add(Bond{kP, 1}, 1);
  Configuration c =
      gcb_config({{kP, {p_holdings, 0}}, {kQ, {q_holdings, 0}}});

  auto gts = gcb::gcb_generate({kP, kQ}, c, {1, 1, 1});
  // redeemer-guarded single-for-single exchanges returning the mature q-bond:
  // one per bond q holds; plus the plain payment of that coin
  std::set<ClassKey> payer_guarded;
  for (const auto& gt : gts) {
    if (gt.guard != AgentSet{kP}) continue;
    if (gt.txn.participants() != AgentSet{kP, kQ}) continue;
    payer_guarded.insert(gcb::gcb_class_of(gt.txn));
  }
  CHECK(payer_guarded ==
        std::set<ClassKey>{
            gcb::swap_key(kP, BondMultiset::single(Bond{kQ, 0}), kQ,
                          BondMultiset::single(Bond{kQ, 3})),
            gcb::swap_key(kP, BondMultiset::single(Bond{kQ, 0}), kQ,
                          BondMultiset::single(Bond{kP, 1})),
            gcb::pay_key(kP, kQ, BondMultiset::single(Bond{kQ, 0}))});
}

TEST_CASE("gcb_generate: immature bonds are neither payable nor redeemable") {
  // p holds an immature q-bond (maturity 2, local date 0)
  Configuration c = gcb_config(
      {{kP, {BondMultiset::single(Bond{kQ, 2}), 0}},
       {kQ, {BondMultiset::single(Bond{kQ, 0}), 0}}});
  auto gts = gcb::gcb_generate({kP, kQ}, c, {1, 2, 1});
  for (const auto& gt : gts) {
    if (gt.guard == AgentSet{kP} && gt.txn.participants() == AgentSet{kP, kQ}) {
      FAIL("unexpected pay/redeem variant: ", gcb::gcb_class_of(gt.txn).label());
    }
  }
  // swaps still offered (guarded by both)
  bool swap_found = false;
  for (const auto& gt : gts) {
    if (gt.guard == AgentSet{kP, kQ}) swap_found = true;
  }
  CHECK(swap_found);
}

TEST_CASE("class keys: mints by payload, advances by agent, swaps unordered") {
  Configuration day0 = gcb_config({{kP, {}}, {kQ, {}}});
  Configuration day3 = gcb_config({{kP, {{}, 3}}, {kQ, {{}, 1}}});

  CHECK(gcb::gcb_class_of(gcb::mint_txn(day0, kP, 3, 0)) ==
        gcb::gcb_class_of(gcb::mint_txn(day3, kP, 3, 0)));
  CHECK(gcb::gcb_class_of(gcb::mint_txn(day0, kP, 3, 0)) !=
        gcb::gcb_class_of(gcb::mint_txn(day0, kP, 2, 0)));

  CHECK(gcb::gcb_class_of(*gcb::advance_txn(day0, kP, 1)) ==
        gcb::gcb_class_of(*gcb::advance_txn(day3, kP, 9)));

  const BondMultiset x = BondMultiset::single(Bond{kP, 0});
  const BondMultiset y = BondMultiset::single(Bond{kQ, 1});
  CHECK(gcb::swap_key(kP, x, kQ, y) == gcb::swap_key(kQ, y, kP, x));
  CHECK(gcb::swap_key(kP, x, kQ, y) != gcb::swap_key(kP, y, kQ, x));

  MachineTransaction junk;
  junk.pre.emplace(kP, sg::SgState{});
  junk.post.emplace(kP, sg::SgState{{kQ}});
  CHECK_THROWS_AS(gcb::gcb_class_of(junk), std::invalid_argument);
}

TEST_CASE("pay transactions classify by payer, payee, and multiset") {
  BondMultiset coins;
  coins.add(Bond{kQ, 0}, 2);
  Configuration c = gcb_config({{kP, {coins, 0}}, {kQ, {}}});
  auto txn = gcb::pay_txn(c, kP, kQ, coins);
  REQUIRE(txn.has_value());
  CHECK(gcb::gcb_class_of(*txn) == gcb::pay_key(kP, kQ, coins));

  // paying with bonds not issued by the payee is not a GCB transaction
  BondMultiset own = BondMultiset::single(Bond{kP, 0});
  Configuration c2 = gcb_config({{kP, {own, 0}}, {kQ, {}}});
  CHECK(!gcb::pay_txn(c2, kP, kQ, own).has_value());
}

TEST_CASE("conservation of money over a scripted mint/swap/pay/redeem/advance run") {
  ProtocolInstance inst(gcb::gcb_protocol(), {kP, kQ}, {3, 3, 2});
  Configuration c = inst.initial();
  std::vector<Configuration> configs{c};
  std::vector<Step> steps;

  auto apply_fire = [&](const GuardedTransaction& gt) {
    for (const auto& g : gt.guard) {
      if (!c.at(g).volition.contains(inst.class_key_of(gt.txn))) {
        ClassKeySet v = c.at(g).volition;
        v.insert(inst.class_key_of(gt.txn));
        c = change_volition(g, v, c, inst.universe());
        steps.push_back(ChangeVolitionStep{g, std::move(v)});
        configs.push_back(c);
      }
    }
    c = fire(gt, c, inst.class_of());
    steps.push_back(FireStep{gt});
    configs.push_back(c);
  };

  apply_fire({gcb::mint_txn(c, kP, 3, 0), {kP}});
  apply_fire({gcb::mint_txn(c, kQ, 2, 1), {kQ}});
  // after Mint(p,3,0): three p-coins in circulation, all at p
  {
    BondMultiset expected;
    expected.add(Bond{kP, 0}, 3);
    CHECK(std::get<GcbState>(c.at(kP).machine).holdings == expected);
  }
  // swap one p-coin for one q-bond
  apply_fire({*gcb::exchange_txn(c, kP, BondMultiset::single(Bond{kP, 0}), kQ,
                                 BondMultiset::single(Bond{kQ, 1})),
              {kP, kQ}});
  // advance p so the q-bond matures there, then pay it back to q
  apply_fire({*gcb::advance_txn(c, kP, 1), {}});
  apply_fire({*gcb::pay_txn(c, kP, kQ, BondMultiset::single(Bond{kQ, 1})), {kP}});
  // q redeems its mature p-coin against a fresh p-bond
  apply_fire({gcb::mint_txn(c, kP, 1, 2), {kP}});
  apply_fire(*gcb::redeem_gt(c, kQ, kP, Bond{kP, 0}, Bond{kP, 2}));

  CHECK(gcb::conservation_check(configs, steps));

  // tampering with a holding breaks conservation
  std::get<GcbState>(configs.back().at(kP).machine).holdings.add(Bond{kP, 0}, 1);
  CHECK(!gcb::conservation_check(configs, steps));
}

TEST_CASE("advance-date monotonicity along replays") {
  ProtocolInstance inst(gcb::gcb_protocol(), {kP, kQ}, {1, 1, 1});
  Configuration c = inst.initial();
  std::vector<Step> steps;
  Trace trace{c, {}, std::nullopt};
  for (int i = 0; i < 4; ++i) {
    auto adv = gcb::advance_txn(c, i % 2 == 0 ? kP : kQ, i / 2 + 1);
    REQUIRE(adv.has_value());
    GuardedTransaction gt{*adv, {}};
    c = fire(gt, c, inst.class_of());
    trace.steps.push_back(FireStep{gt});
  }
  auto configs = replay_or_throw(trace, inst);
  for (std::size_t i = 1; i < configs.size(); ++i) {
    for (const auto& [id, state] : configs[i].agents()) {
      CHECK(std::get<GcbState>(state.machine).local_date >=
            std::get<GcbState>(configs[i - 1].at(id).machine).local_date);
    }
  }
  // advance classes are enabled at every configuration
  for (const auto& config : configs) {
    for (const AgentId& id : {kP, kQ}) {
      CHECK(class_enabled(gcb::advance_key(id), config, inst.transactions_at(config),
                          inst.class_of()));
    }
  }
}
