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

#include "oracles.hpp"
#include "pentaform/errors.hpp"
#include "pentaform/fixtures.hpp"
#include "pentaform/stationary.hpp"
#include "pentaform/strategy.hpp"

namespace pentaform {
namespace {

Pentaform f1() { return fixtures::entrant_incumbent().form(); }

struct CryWolf {
  StationarySystem sys = fixtures::cry_wolf();
  Instantiation inst;
  Strategy s;
  explicit CryWolf(std::size_t d) : inst(instantiate(sys, d)) {
    s = induced_strategy(sys, fixtures::cry_wolf_equilibrium(), inst);
  }
};

TEST(ValidateStrategy, CryWolfStrategyValidates) {
  for (std::size_t d = 1; d <= 3; ++d) {
    CryWolf cw(d);
    EXPECT_NO_THROW(validate_strategy(cw.inst.form, cw.s.choices));
    for (const auto& [j, a] : cw.s.choices) {
      const auto player = cw.inst.form.player_of(j);
      if (player == "Wolf") EXPECT_EQ(a, "a~");
      if (player == "Kid") EXPECT_EQ(a, "c");
      if (player == "Town") EXPECT_EQ(a, "r~");
    }
  }
}

TEST(ValidateStrategy, MissingSituation) {
  try {
    validate_strategy(f1(), {{"jE", "e"}});
    FAIL() << "expected a DomainError";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("jI"), std::string::npos);
  }
}

TEST(ValidateStrategy, InfeasibleAction) {
  try {
    validate_strategy(f1(), {{"jE", "f"}, {"jI", "f"}});
    FAIL() << "expected a DomainError";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("jE"), std::string::npos);
  }
}

TEST(PlayerSituations, Examples) {
  CryWolf cw(1);
  EXPECT_EQ(player_situations(cw.inst.form, "Kid"),
            (LabelSet{"1", "61", "71", "81"}));
  EXPECT_EQ(player_situations(f1(), "Ent"), (LabelSet{"jE"}));
  const auto joe = fixtures::one_situation_game().form();
  EXPECT_EQ(player_situations(joe, "Joe"), joe.situations());
  EXPECT_THROW(player_situations(f1(), "Nobody"), DomainError);
}

TEST(Restrict, PieceAtSix) {
  CryWolf cw(2);
  const auto r = restrict(cw.inst.form, cw.s, Scope::piece("6"));
  LabelSet domain;
  for (const auto& [j, a] : r.choices) domain.insert(j);
  EXPECT_EQ(domain, (LabelSet{"6", "61", "62+63"}));
}

TEST(Restrict, PlayerAndOpponentsRecombine) {
  CryWolf cw(2);
  for (const auto& i : cw.inst.form.players()) {
    auto mine = restrict(cw.inst.form, cw.s, Scope::of_player(i)).choices;
    const auto rest = restrict(cw.inst.form, cw.s, Scope::opponents_of(i)).choices;
    for (const auto& [j, a] : mine) EXPECT_FALSE(rest.contains(j));
    mine.insert(rest.begin(), rest.end());
    EXPECT_EQ(mine, cw.s.choices);
  }
}

TEST(Restrict, SubformAtRootIsWhole) {
  CryWolf cw(2);
  EXPECT_EQ(restrict(cw.inst.form, cw.s, Scope::subform("")).choices,
            cw.s.choices);
}

TEST(Restrict, CompositionIdentities) {
  CryWolf cw(2);
  const Partition part(cw.inst.form);
  for (const auto& t : part.subroots()) {
    for (const auto& i : cw.inst.form.players()) {
      const auto sub_i =
          restrict(cw.inst.form, cw.s, Scope::subform(t).only(i)).choices;
      const auto sub = restrict(cw.inst.form, cw.s, Scope::subform(t)).choices;
      ChoiceMap expect;
      for (const auto& [j, a] : sub) {
        if (cw.inst.form.player_of(j) == i) expect.emplace(j, a);
      }
      EXPECT_EQ(sub_i, expect);
      const auto piece_i =
          restrict(cw.inst.form, cw.s, Scope::piece(t).only(i)).choices;
      ChoiceMap expect_piece;
      for (const auto& j : part.piece_situations(t)) {
        if (cw.inst.form.player_of(j) == i) expect_piece.emplace(j, cw.s(j));
      }
      EXPECT_EQ(piece_i, expect_piece);
    }
  }
}

TEST(Restrict, UnknownScopeIsDomainError) {
  EXPECT_THROW(restrict(f1(), Strategy{{{"jE", "e"}, {"jI", "f"}}},
                        Scope::piece("7")),
               DomainError);
  EXPECT_THROW(restrict(f1(), Strategy{{{"jE", "e"}, {"jI", "f"}}},
                        Scope::of_player("Nobody")),
               DomainError);
}

TEST(NextNode, Examples) {
  CryWolf cw(1);
  EXPECT_EQ(next_node(cw.inst.form, "63", "r~"), "67");
  EXPECT_EQ(next_node(f1(), "5", "e"), "6");
  EXPECT_THROW(next_node(f1(), "7", "e"), DomainError);
}

TEST(Outcome, Examples) {
  CryWolf cw(2);
  const auto z = outcome(cw.inst.form, cw.s).nodes;
  EXPECT_EQ(std::vector<Label>(z.begin(), z.begin() + 7),
            (std::vector<Label>{"", "1", "3", "7", "71", "73", "77"}));
  EXPECT_EQ(outcome(f1(), Strategy{{{"jE", "e~"}, {"jI", "f"}}}).nodes,
            (std::vector<Label>{"5", "7"}));
  const auto one = make_pentaform({{"A", "j", "r", "x", "y"}});
  EXPECT_EQ(outcome(one, Strategy{{{"j", "x"}}}).nodes,
            (std::vector<Label>{"r", "y"}));
}

TEST(Outcome, PieceAndSubform) {
  CryWolf cw(2);
  const auto piece = restrict(cw.inst.form, cw.s, Scope::piece("6")).choices;
  EXPECT_EQ(piece_outcome(cw.inst.form, "6", piece).nodes,
            (std::vector<Label>{"6", "61", "63", "67"}));
  EXPECT_EQ(subform_outcome(cw.inst.form, "", cw.s.choices),
            outcome(cw.inst.form, cw.s));
  EXPECT_EQ(piece_outcome(f1(), "5", {{"jE", "e"}}).nodes,
            (std::vector<Label>{"5", "6"}));
  EXPECT_THROW(piece_outcome(cw.inst.form, "6", {{"6", "a~"}}), DomainError);
}

TEST(Outcome, AgreesWithNaiveTrace) {
  CryWolf cw(3);
  EXPECT_EQ(outcome(cw.inst.form, cw.s).nodes,
            oracle::trace(cw.inst.form.quintuples(), cw.s.choices, ""));
}

TEST(SubrootSequence, Examples) {
  CryWolf cw(3);
  const auto seq = subroot_sequence(cw.inst.form, cw.s, "");
  EXPECT_EQ(seq.subroots, (std::vector<Label>{"", "7", "77", "777"}));
  EXPECT_EQ(seq.termination, SubrootSequence::Termination::kTerminated);

  for (const auto& a : {"e", "e~"}) {
    for (const auto& f : {"f", "f~"}) {
      const auto s = subroot_sequence(f1(), Strategy{{{"jE", a}, {"jI", f}}}, "6");
      EXPECT_EQ(s.subroots, (std::vector<Label>{"6"}));
    }
  }

  const auto bob = fixtures::bob();
  const auto trunc = instantiate(bob, 8);
  const auto out = induced_strategy(bob, fixtures::always(bob, "out"), trunc);
  const auto s = subroot_sequence(trunc.form, out, "iii");
  EXPECT_EQ(s.subroots, (std::vector<Label>{"iii"}));
  EXPECT_EQ(s.termination, SubrootSequence::Termination::kTerminated);
}

}  // namespace
}  // namespace pentaform
