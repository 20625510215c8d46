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

#include "pentaform/strategy.hpp"

#include <algorithm>

#include "pentaform/errors.hpp"

namespace pentaform {

Strategy validate_strategy(const Pentaform& p, const ChoiceMap& choices) {
  for (const auto& j : p.situations()) {
    auto it = choices.find(j);
    if (it == choices.end()) {
      throw DomainError("strategy has no action for situation " + show(j));
    }
    const auto& feasible = p.action_set(j);
    if (!std::binary_search(feasible.begin(), feasible.end(), it->second)) {
      throw DomainError("action " + show(it->second) +
                        " is not feasible in situation " + show(j));
    }
  }
  for (const auto& [j, a] : choices) {
    if (!p.has_situation(j)) {
      throw DomainError("strategy names unknown situation " + show(j));
    }
  }
  return Strategy{choices};
}

const LabelSet& player_situations(const Pentaform& p, const Label& i) {
  return p.situations_of(i);
}

LabelSet scope_situations(const Partition& part, const Scope& scope) {
  const Pentaform& p = part.form();
  LabelSet region;
  switch (scope.region) {
    case Scope::Region::kWhole: region = p.situations(); break;
    case Scope::Region::kSubform:
      region = part.subform_situations(scope.subroot);
      break;
    case Scope::Region::kPiece:
      region = part.piece_situations(scope.subroot);
      break;
  }
  if (scope.who == Scope::Who::kEveryone) return region;
  if (!p.players().contains(scope.player)) {
    throw DomainError("unknown player " + show(scope.player));
  }
  LabelSet out;
  for (const auto& j : region) {
    const bool mine = p.player_of(j) == scope.player;
    if (mine == (scope.who == Scope::Who::kPlayer)) out.insert(j);
  }
  return out;
}

Restriction restrict(const Partition& part, const ChoiceMap& s,
                     const Scope& scope) {
  Restriction r{{}, scope};
  for (const auto& j : scope_situations(part, scope)) {
    auto it = s.find(j);
    if (it == s.end()) {
      throw DomainError("strategy has no action for situation " + show(j));
    }
    r.choices.emplace(j, it->second);
  }
  return r;
}

Restriction restrict(const Pentaform& p, const Strategy& s,
                     const Scope& scope) {
  return restrict(Partition(p), s.choices, scope);
}

const Label& next_node(const Pentaform& p, const Label& w, const Label& a) {
  return p.next_node(w, a);
}

std::vector<Label> follow(const Pentaform& p, const ChoiceMap& choices,
                          const Label& start,
                          const std::function<bool(const Label&)>& stop) {
  std::vector<Label> path{start};
  Label cur = start;
  while (p.is_decision_node(cur) && !(stop && path.size() > 1 && stop(cur))) {
    const Label& j = p.situation_of(cur);
    auto it = choices.find(j);
    if (it == choices.end()) {
      throw DomainError("no action chosen for situation " + show(j));
    }
    cur = p.next_node(cur, it->second);
    path.push_back(cur);
  }
  return path;
}

Run outcome(const Pentaform& p, const Strategy& s) {
  return Run{follow(p, s.choices, p.root())};
}

namespace {

void require_cover(const LabelSet& needed, const ChoiceMap& choices) {
  for (const auto& j : needed) {
    if (!choices.contains(j)) {
      throw DomainError("restriction has no action for situation " + show(j));
    }
  }
}

}  // namespace

Run subform_outcome(const Partition& part, const Label& t,
                    const ChoiceMap& choices) {
  require_cover(part.subform_situations(t), choices);
  return Run{follow(part.form(), choices, t)};
}

Run piece_outcome(const Partition& part, const Label& t,
                  const ChoiceMap& choices) {
  require_cover(part.piece_situations(t), choices);
  return Run{follow(part.form(), choices, t,
                    [&](const Label& x) { return part.ends_piece(t, x); })};
}

Run subform_outcome(const Pentaform& p, const Label& t,
                    const ChoiceMap& choices) {
  return subform_outcome(Partition(p), t, choices);
}

Run piece_outcome(const Pentaform& p, const Label& t,
                  const ChoiceMap& choices) {
  return piece_outcome(Partition(p), t, choices);
}

SubrootSequence subroot_sequence(const Partition& part, const ChoiceMap& s,
                                 const Label& t0) {
  if (!part.is_subroot(t0)) throw DomainError(show(t0) + " is not a subroot");
  SubrootSequence seq;
  seq.subroots.push_back(t0);
  Label t = t0;
  while (true) {
    const Run piece_run = piece_outcome(part, t, s);
    if (!part.is_subroot(piece_run.last())) break;
    t = piece_run.last();
    seq.subroots.push_back(t);
  }
  seq.termination = SubrootSequence::Termination::kTerminated;
  seq.detail = "the piece at " + show(t) + " ends at a final endnode";
  return seq;
}

SubrootSequence subroot_sequence(const Pentaform& p, const Strategy& s,
                                 const Label& t0) {
  return subroot_sequence(Partition(p), s.choices, t0);
}

}  // namespace pentaform
