// Copyright 2026 The Pentaform Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "pentaform/errors.hpp"
#include "pentaform/fixtures.hpp"
#include "pentaform/game.hpp"
#include "pentaform/stationary.hpp"

namespace pentaform {
namespace {

Profile pr(std::initializer_list<std::pair<const char*, Rational>> xs) {
  Profile out;
  for (const auto& [k, x] : xs) out.emplace(k, XReal(x));
  return out;
}

Strategy sf(const char* e, const char* f) { return Strategy{{{"jE", e}, {"jI", f}}}; }

ValueFunction f1_values() {
  return ValueFunction{{{"5", pr({{"Ent", 0}, {"Inc", 0}})},
                        {"6", pr({{"Ent", -1}, {"Inc", 3}})}}};
}

// A bounded truncation of a stationary system whose boundary is priced by
// sigma's class values, together with sigma replicated onto it.
struct Truncation {
  StationarySystem sys;
  Instantiation inst;
  Strategy s;
  Truncation(StationarySystem system, const StationaryStrategy& sigma,
             std::size_t d)
      : sys(std::move(system)),
        inst(instantiate(sys, d, InstantiateMode::kBounded,
                         BoundaryPricing::continuation(
                             continuation_values(sys, sigma)))),
        s(induced_strategy(sys, sigma, inst)) {}
  const Game& game() const { return *inst.game; }
  ValueFunction constant(const Label& k, const Rational& x) const {
    ValueFunction v;
    for (const auto& t : game().partition().subroots()) v.values[t][k] = XReal(x);
    return v;
  }
};

Truncation ann_in() {
  auto sys = fixtures::ann();
  const auto sigma = fixtures::always(sys, "in");
  return Truncation(std::move(sys), sigma, 8);
}

Truncation bob_out() {
  auto sys = fixtures::bob();
  const auto sigma = fixtures::always(sys, "out");
  return Truncation(std::move(sys), sigma, 8);
}

Truncation cry_wolf(std::size_t d) {
  return Truncation(fixtures::cry_wolf(), fixtures::cry_wolf_equilibrium(), d);
}

TEST(Game, RejectsPlayersOutsideStakeholders) {
  const auto g = fixtures::entrant_incumbent();
  EXPECT_THROW(Game(g.form(), {"Ent"}, g.utilities()), DomainError);
  auto partial = g.utilities();
  partial.erase("9");
  EXPECT_THROW(Game(g.form(), g.stakeholders(), partial), DomainError);
}

TEST(UtilityOfRun, Examples) {
  const auto g = fixtures::entrant_incumbent();
  EXPECT_EQ(utility_of_run(g, pentaform::Run{{"5", "6", "8"}}),
            pr({{"Ent", -1}, {"Inc", 3}}));
  const auto cw = cry_wolf(2);
  const auto& u = utility_of_run(
      cw.game(), pentaform::Run{{"", "1", "3", "6", "62", "65"}});
  EXPECT_EQ(u.at("Kid"), XReal(Rational(2, 5)));
  EXPECT_EQ(u.at("Wolf"), XReal(Rational(1, 2) + Rational(1, 18)));
  EXPECT_EQ(u.size(), 3u);
  EXPECT_THROW(utility_of_run(g, pentaform::Run{{"5", "6"}}), DomainError);
}

TEST(NashCheck, EntrantIncumbent) {
  const auto g = fixtures::entrant_incumbent();
  EXPECT_TRUE(nash_check(g, sf("e~", "f")).holds);
  // Entering against f~ is a Nash equilibrium for the entrant (0 either
  // way) but the incumbent gains 3 > 2 by fighting.
  const auto v = nash_check(g, sf("e", "f~"));
  ASSERT_FALSE(v.holds);
  EXPECT_EQ(v.witness->agent, "Inc");
  // The threat equilibrium is Nash: the incumbent is never reached.
  EXPECT_TRUE(nash_check(g, sf("e~", "f~")).holds);
}

TEST(NashCheck, SingleStrategyGame) {
  const auto p = make_pentaform({{"A", "j", "r", "x", "y"}});
  const Game g(p, {"A"}, {{"y", pr({{"A", 1}})}});
  EXPECT_TRUE(nash_check(g, Strategy{{{"j", "x"}}}).holds);
}

TEST(NashCheck, AgreesWithEnumeration) {
  const auto g = fixtures::entrant_incumbent();
  for (const auto& c : oracle::all_choices(g.form().quintuples(), g.form().situations())) {
    EXPECT_EQ(nash_check(g, Strategy{c}).holds,
              oracle::nash(g.form().quintuples(), g.utilities(), c));
  }
}

TEST(SpeCheckDirect, EntrantIncumbent) {
  const auto g = fixtures::entrant_incumbent();
  EXPECT_TRUE(spe_check_direct(g, sf("e~", "f")).holds);
  const auto v = spe_check_direct(g, sf("e", "f"));
  ASSERT_FALSE(v.holds);
  EXPECT_EQ(v.witness->subroot, "5");
  EXPECT_EQ(v.witness->agent, "Ent");
  EXPECT_EQ(v.witness->current.at("Ent"), XReal(-1));
  EXPECT_EQ(v.witness->alternative.at("Ent"), XReal(0));
  EXPECT_FALSE(spe_check_direct(g, sf("e~", "f~")).holds);
}

TEST(SpeCheckDirect, SingleSubrootMatchesNash) {
  const auto g = fixtures::one_situation_game();
  for (const auto& a : {"0", "1"}) {
    const Strategy s{{{"B", a}}};
    EXPECT_EQ(spe_check_direct(g, s).holds, nash_check(g, s).holds);
  }
}

TEST(Admissible, Examples) {
  const auto ann = ann_in();
  EXPECT_TRUE(admissible(ann.game(), ann.constant("Ann", Rational(1, 2))).holds);
  EXPECT_TRUE(admissible(fixtures::entrant_incumbent(), f1_values()).holds);
  auto v = f1_values();
  v.values["6"]["Inc"] = XReal::pos_inf();
  const auto bad = admissible(fixtures::entrant_incumbent(), v);
  ASSERT_FALSE(bad.holds);
  EXPECT_EQ(bad.witness->subroot, "6");
  EXPECT_EQ(bad.witness->agent, "Inc");
}

TEST(Persistent, CryWolfAuthenticValues) {
  for (std::size_t d = 1; d <= 3; ++d) {
    const auto cw = cry_wolf(d);
    const auto v = authentic_value(cw.game(), cw.s);
    EXPECT_TRUE(persistent(cw.game(), cw.s, v).holds);
    EXPECT_EQ(v.at(""), v.at("7"));
    if (d >= 2) EXPECT_EQ(v.at("7"), v.at("77"));
    for (const auto& [t, p] : v.values) {
      EXPECT_EQ(p, value_at(cw.sys, fixtures::cry_wolf_equilibrium(), t)) << t;
    }
  }
}

TEST(Persistent, AnnFailsOnlyAtTheBoundaryPiece) {
  const auto ann = ann_in();
  const auto v = persistent(ann.game(), ann.s, ann.constant("Ann", Rational(1, 2)));
  ASSERT_FALSE(v.holds);
  EXPECT_EQ(v.witness->subroot, "iiiiiiii");
}

TEST(Persistent, EntrantIncumbent) {
  EXPECT_TRUE(persistent(fixtures::entrant_incumbent(), sf("e~", "f"),
                         f1_values()).holds);
}

TEST(Authentic, Examples) {
  const auto g = fixtures::entrant_incumbent();
  EXPECT_EQ(authentic_value(g, sf("e~", "f")), f1_values());
  const auto ann = ann_in();
  const auto v = authentic(ann.game(), ann.s, ann.constant("Ann", Rational(1, 2)));
  ASSERT_FALSE(v.holds);
  EXPECT_EQ(v.witness->alternative.at("Ann"), XReal(0));
  for (const auto& c : oracle::all_choices(g.form().quintuples(), g.form().situations())) {
    const Strategy s{c};
    EXPECT_TRUE(authentic(g, s, authentic_value(g, s)).holds);
  }
}

TEST(PieceGame, CryWolfRootPiece) {
  const auto cw = cry_wolf(1);
  const auto v = authentic_value(cw.game(), cw.s);
  const auto pg = piece_game(cw.game(), v, "");
  for (const auto& t : {"6", "7", "8"}) EXPECT_EQ(pg.utility(t), v.at(t));
  for (const auto& y : {"4", "5"}) EXPECT_EQ(pg.utility(y), cw.game().utility(y));
  EXPECT_EQ(pg.stakeholders(), cw.game().stakeholders());
}

TEST(PieceGame, EntrantIncumbent) {
  const auto g = fixtures::entrant_incumbent();
  const auto pg = piece_game(g, f1_values(), "5");
  EXPECT_EQ(pg.utility("6"), pr({{"Ent", -1}, {"Inc", 3}}));
  EXPECT_EQ(pg.utility("7"), pr({{"Ent", 0}, {"Inc", 0}}));
  // The bystander Inc is carried through.
  EXPECT_EQ(pg.stakeholders(), (LabelSet{"Ent", "Inc"}));
  const auto last = piece_game(g, f1_values(), "6");
  EXPECT_EQ(last.utilities(), (std::map<Label, Profile>{
                                  {"8", g.utility("8")}, {"9", g.utility("9")}}));
  ValueFunction missing;
  missing.values["5"] = pr({{"Ent", 0}, {"Inc", 0}});
  EXPECT_THROW(piece_game(g, missing, "5"), DomainError);
}

TEST(PiecewiseNash, Examples) {
  const auto cw = cry_wolf(2);
  EXPECT_TRUE(piecewise_nash(cw.game(), cw.s, authentic_value(cw.game(), cw.s)).holds);
  const auto bob = bob_out();
  EXPECT_TRUE(piecewise_nash(bob.game(), bob.s, bob.constant("Bob", -1)).holds);
  const auto p = make_pentaform({{"A", "j", "r", "x", "y"}});
  const Game single(p, {"A"}, {{"y", pr({{"A", 1}})}});
  EXPECT_TRUE(piecewise_nash(single, Strategy{{{"j", "x"}}},
                             ValueFunction{{{"r", pr({{"A", 7}})}}})
                  .holds);
}

TEST(PiecewiseNash, TownPrefersSixSeven) {
  // In the piece at 6, switching the town to r moves the outcome from 67 to
  // 66 and lowers the town's priced utility.
  const auto cw = cry_wolf(2);
  const auto v = authentic_value(cw.game(), cw.s);
  const auto pg = piece_game(cw.game(), v, "6");
  EXPECT_GT(pg.utility("67").at("Town"), pg.utility("66").at("Town"));
  EXPECT_EQ(pg.utility("67").at("Town"), XReal(Rational(11, 45)));
}

TEST(OnePieceUnimprovable, Examples) {
  const auto g = fixtures::entrant_incumbent();
  EXPECT_TRUE(one_piece_unimprovable(g, sf("e~", "f")).holds);
  EXPECT_FALSE(one_piece_unimprovable(g, sf("e~", "f~")).holds);
  const auto bob = bob_out();
  EXPECT_TRUE(one_piece_unimprovable(bob.game(), bob.s).holds);
}

TEST(SolveBackward, EntrantIncumbent) {
  const auto g = fixtures::entrant_incumbent();
  const auto r = solve_backward(g);
  ASSERT_TRUE(std::holds_alternative<Solution>(r));
  const auto& sol = std::get<Solution>(r);
  EXPECT_EQ(sol.strategy, sf("e~", "f"));
  EXPECT_EQ(sol.values, f1_values());
}

TEST(SolveBackward, OnePlayerGetsMaximum) {
  const auto g = fixtures::one_situation_game();
  const auto sol = std::get<Solution>(solve_backward(g));
  EXPECT_EQ(sol.values.at("").at("Joe"), XReal(2));
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const Game r = random_game(seed, {12, 1, 1});
    const auto s = std::get<Solution>(solve_backward(r));
    XReal best = XReal::neg_inf();
    for (const auto& [y, p] : r.utilities()) {
      for (const auto& [k, x] : p) {
        if (r.form().players().contains(k) && x > best) best = x;
      }
    }
    const Label i = *r.form().players().begin();
    EXPECT_EQ(s.values.at(r.form().root()).at(i), best) << seed;
  }
}

TEST(SolveBackward, MatchingPenniesHasNoPureEquilibrium) {
  const auto g = fixtures::matching_pennies_game();
  const auto r = solve_backward(g);
  ASSERT_TRUE(std::holds_alternative<NoPureEquilibrium>(r));
  EXPECT_EQ(std::get<NoPureEquilibrium>(r).subroot, "m");
  // Confirm by enumeration that the piece at m has no pure Nash point.
  const auto sub = oracle::weakly_after(g.form().quintuples(), "m");
  for (const auto& c : oracle::all_choices(sub, project1(sub, Coordinate::kSituation))) {
    EXPECT_FALSE(oracle::nash(sub, g.utilities(), c));
  }
}

TEST(SolveBackward, RefusesOversizedPieces) {
  EXPECT_THROW(solve_backward(fixtures::entrant_incumbent(), 1), ResourceError);
}

TEST(RandomGame, GeneratorContract) {
  std::size_t imperfect = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const Game g = random_game(seed);
    EXPECT_TRUE(std::holds_alternative<Pentaform>(validate(g.form().quintuples())));
    EXPECT_LE(g.form().nodes().size(), 12u);
    EXPECT_LE(g.form().players().size(), 3u);
    EXPECT_TRUE(g.partition().is_subroot(g.form().root()));
    for (const auto& j : g.form().situations()) {
      if (g.form().information_set(j).size() >= 2) {
        ++imperfect;
        break;
      }
    }
    for (const auto& [y, p] : g.utilities()) {
      for (const auto& [k, x] : p) {
        EXPECT_GE(x, XReal(-10));
        EXPECT_LE(x, XReal(10));
      }
    }
  }
  EXPECT_GT(imperfect, 0u);
  EXPECT_EQ(random_game(7).form().quintuples(), random_game(7).form().quintuples());
}

TEST(SupConceivable, Examples) {
  const auto g = fixtures::entrant_incumbent();
  EXPECT_EQ(sup_conceivable(g, "5", "Ent"), XReal(0));
  EXPECT_EQ(inf_conceivable(g, "5", "Ent"), XReal(-1));
  for (const auto& y : g.form().endnodes()) {
    EXPECT_EQ(sup_conceivable(g, y, "Inc"), g.utility(y).at("Inc"));
    EXPECT_EQ(inf_conceivable(g, y, "Inc"), g.utility(y).at("Inc"));
  }
  const auto cw = cry_wolf(2);
  EXPECT_LE(inf_conceivable(cw.game(), "6", "Kid"), XReal(Rational(2, 5)));
}

TEST(SupConceivable, AgreesWithRunEnumeration) {
  for (const auto& g : gen::corpus(60)) {
    for (const auto& x : g.form().nodes()) {
      for (const auto& k : g.stakeholders()) {
        const auto [hi, lo] =
            oracle::conceivable(g.form().quintuples(), g.utilities(), x, k);
        EXPECT_EQ(sup_conceivable(g, x, k), hi);
        EXPECT_EQ(inf_conceivable(g, x, k), lo);
      }
    }
  }
}

}  // namespace
}  // namespace pentaform
