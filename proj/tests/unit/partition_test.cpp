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
#include "pentaform/partition.hpp"
#include "pentaform/stationary.hpp"

namespace pentaform {
namespace {

Pentaform f1() { return fixtures::entrant_incumbent().form(); }
Pentaform f3(std::size_t d) { return instantiate(fixtures::cry_wolf(), d).form; }

TEST(Subroots, Examples) {
  EXPECT_EQ(subroots(f3(1)), (LabelSet{"", "6", "7", "8"}));
  EXPECT_EQ(subroots(f1()), (LabelSet{"5", "6"}));
  EXPECT_EQ(subroots(fixtures::one_situation_game().form()), (LabelSet{""}));
}

TEST(Subroots, AgreeWithDefinition) {
  for (const auto& p : {f1(), f3(1), f3(2), fixtures::one_situation_game().form(),
                        fixtures::matching_pennies_game().form()}) {
    EXPECT_EQ(subroots(p), oracle::subroots(p.quintuples()));
  }
}

TEST(Subform, Examples) {
  const auto p = f3(2);
  const auto s7 = subform(p, "7");
  EXPECT_EQ(s7.root(), "7");
  QuintupleSet pieces;
  for (const auto& t : subroots(p)) {
    if (precedes(p, "7", t)) {
      const auto piece = piece_form(p, t);
      pieces.insert(piece.quintuples().begin(), piece.quintuples().end());
    }
  }
  EXPECT_EQ(s7.quintuples(), pieces);
  EXPECT_EQ(subform(p, "").quintuples(), p.quintuples());
  EXPECT_EQ(subform(f1(), "6").size(), 2u);
  EXPECT_THROW(subform(p, "1"), DomainError);
}

TEST(PieceForm, Examples) {
  EXPECT_EQ(piece_form(f3(1), "").size(), 8u);
  const auto single = fixtures::one_situation_game().form();
  EXPECT_EQ(piece_form(single, "").quintuples(), single.quintuples());
  const auto p5 = piece_form(f1(), "5");
  EXPECT_EQ(p5.size(), 2u);
  EXPECT_EQ(p5.root(), "5");
  EXPECT_EQ(project1(p5.quintuples(), Coordinate::kPlayer), (LabelSet{"Ent"}));
  EXPECT_THROW(piece_form(f1(), "7"), DomainError);
}

TEST(PieceForm, AgreesWithSetDifference) {
  for (const auto& p : {f1(), f3(1), f3(2)}) {
    for (const auto& t : subroots(p)) {
      EXPECT_EQ(piece_form(p, t).quintuples(),
                oracle::piece_by_difference(p.quintuples(), t))
          << show(t);
    }
  }
}

TEST(PiecePartition, Examples) {
  const auto pieces = piece_partition(f3(1));
  ASSERT_EQ(pieces.size(), 4u);
  for (const auto& piece : pieces) EXPECT_EQ(piece.form.size(), 8u);
  const auto f1_pieces = piece_partition(f1());
  ASSERT_EQ(f1_pieces.size(), 2u);
  EXPECT_EQ(f1_pieces[0].subroot, "5");
  EXPECT_EQ(f1_pieces[1].subroot, "6");
  EXPECT_EQ(f1_pieces[0].form.size(), 2u);
  EXPECT_EQ(f1_pieces[1].form.size(), 2u);
  const auto single = piece_partition(fixtures::one_situation_game().form());
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single[0].subroot, "");
}

TEST(PiecePartition, OrderedByDepthThenLabel) {
  const auto pieces = piece_partition(f3(1));
  std::vector<Label> order;
  for (const auto& piece : pieces) order.push_back(piece.subroot);
  EXPECT_EQ(order, (std::vector<Label>{"", "8", "6", "7"}));
}

TEST(ClassifyPieceEndnodes, CryWolfRootPiece) {
  const auto classes = classify_piece_endnodes(f3(1));
  const auto& root = classes.front();
  ASSERT_EQ(root.subroot, "");
  EXPECT_EQ(root.later_subroots, (LabelSet{"6", "7", "8"}));
  EXPECT_EQ(root.final_endnodes, (LabelSet{"4", "5"}));
}

TEST(ClassifyPieceEndnodes, EntrantIncumbent) {
  const auto classes = classify_piece_endnodes(f1());
  ASSERT_EQ(classes.size(), 2u);
  EXPECT_EQ(classes[0].later_subroots, (LabelSet{"6"}));
  EXPECT_EQ(classes[0].final_endnodes, (LabelSet{"7"}));
  EXPECT_EQ(classes[1].later_subroots, LabelSet{});
  EXPECT_EQ(classes[1].final_endnodes, (LabelSet{"8", "9"}));
}

TEST(ClassifyPieceEndnodes, SinglePieceHasNoLaterSubroots) {
  const auto classes =
      classify_piece_endnodes(fixtures::one_situation_game().form());
  ASSERT_EQ(classes.size(), 1u);
  EXPECT_TRUE(classes[0].later_subroots.empty());
}

TEST(ClassifyPieceRun, Examples) {
  const auto p = f3(2);
  auto exit = classify_piece_run(p, "6", pentaform::Run{{"6", "61", "68"}});
  EXPECT_EQ(exit.kind, PieceRunClass::Kind::kExitToSubroot);
  EXPECT_EQ(exit.node, "68");
  EXPECT_EQ(exit.completion,
            (std::vector<Label>{"", "1", "3", "6", "61", "68"}));
  auto fin = classify_piece_run(p, "6", pentaform::Run{{"6", "62", "64"}});
  EXPECT_EQ(fin.kind, PieceRunClass::Kind::kFinalEndnode);
  EXPECT_EQ(fin.node, "64");
  EXPECT_EQ(fin.completion,
            (std::vector<Label>{"", "1", "3", "6", "62", "64"}));
  EXPECT_THROW(classify_piece_run(p, "6", pentaform::Run{{"6", "62"}}),
               DomainError);
}

TEST(Partition, OwnerAndPieceSets) {
  const Partition part(f3(1));
  EXPECT_EQ(part.owner("62"), "6");
  EXPECT_EQ(part.owner("3"), "");
  EXPECT_EQ(part.piece_situations("6"), (LabelSet{"6", "61", "62+63"}));
  EXPECT_EQ(part.piece_decision_nodes("6"), (LabelSet{"6", "61", "62", "63"}));
  EXPECT_TRUE(part.ends_piece("", "6"));
  EXPECT_FALSE(part.ends_piece("6", "6"));
  EXPECT_TRUE(part.ends_piece("6", "64"));
}

}  // namespace
}  // namespace pentaform
