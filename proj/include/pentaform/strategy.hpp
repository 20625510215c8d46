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

#ifndef PENTAFORM_STRATEGY_HPP_
#define PENTAFORM_STRATEGY_HPP_

#include <functional>
#include <string>
#include <vector>

#include "pentaform/label.hpp"
#include "pentaform/partition.hpp"
#include "pentaform/pentaform.hpp"

namespace pentaform {

// A total, feasible choice of action at every situation.
struct Strategy {
  ChoiceMap choices;

  const Label& operator()(const Label& j) const { return choices.at(j); }
  bool operator==(const Strategy&) const = default;
};

// Which situations a restriction keeps: the whole form, a subform or a piece,
// and within it everyone, one player, or that player's opponents.
struct Scope {
  enum class Region { kWhole, kSubform, kPiece };
  enum class Who { kEveryone, kPlayer, kOpponents };

  Region region = Region::kWhole;
  Label subroot;
  Who who = Who::kEveryone;
  Label player;

  static Scope whole() { return {}; }
  static Scope of_player(Label i) {
    return {Region::kWhole, {}, Who::kPlayer, std::move(i)};
  }
  static Scope opponents_of(Label i) {
    return {Region::kWhole, {}, Who::kOpponents, std::move(i)};
  }
  static Scope subform(Label t) {
    return {Region::kSubform, std::move(t), Who::kEveryone, {}};
  }
  static Scope piece(Label t) {
    return {Region::kPiece, std::move(t), Who::kEveryone, {}};
  }
  Scope only(Label i) const {
    Scope s = *this;
    s.who = Who::kPlayer;
    s.player = std::move(i);
    return s;
  }
  Scope except(Label i) const {
    Scope s = *this;
    s.who = Who::kOpponents;
    s.player = std::move(i);
    return s;
  }
};

struct Restriction {
  ChoiceMap choices;
  Scope scope;
};

// Throws DomainError naming the first missing or infeasible situation.
Strategy validate_strategy(const Pentaform& p, const ChoiceMap& choices);

const LabelSet& player_situations(const Pentaform& p, const Label& i);

// The situations a scope selects.
LabelSet scope_situations(const Partition& part, const Scope& scope);
Restriction restrict(const Partition& part, const ChoiceMap& s,
                     const Scope& scope);
Restriction restrict(const Pentaform& p, const Strategy& s, const Scope& scope);

const Label& next_node(const Pentaform& p, const Label& w, const Label& a);

// Follows choices from start until stop(x) holds or an endnode is reached.
// Throws DomainError if a visited situation has no choice.
std::vector<Label> follow(const Pentaform& p, const ChoiceMap& choices,
                          const Label& start,
                          const std::function<bool(const Label&)>& stop = {});

Run outcome(const Pentaform& p, const Strategy& s);
// Run of the subform (resp. piece) at t. The choices must cover its
// situations.
Run subform_outcome(const Pentaform& p, const Label& t,
                    const ChoiceMap& choices);
Run piece_outcome(const Pentaform& p, const Label& t, const ChoiceMap& choices);
Run subform_outcome(const Partition& part, const Label& t,
                    const ChoiceMap& choices);
Run piece_outcome(const Partition& part, const Label& t,
                  const ChoiceMap& choices);

struct SubrootSequence {
  enum class Termination { kTerminated, kInfiniteDetected };

  std::vector<Label> subroots;
  Termination termination = Termination::kTerminated;
  std::string detail;
};

SubrootSequence subroot_sequence(const Pentaform& p, const Strategy& s,
                                 const Label& t0);
SubrootSequence subroot_sequence(const Partition& part, const ChoiceMap& s,
                                 const Label& t0);

}  // namespace pentaform

#endif  // PENTAFORM_STRATEGY_HPP_
