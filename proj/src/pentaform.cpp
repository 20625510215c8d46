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

#include "pentaform/pentaform.hpp"

#include <algorithm>
#include <sstream>

#include "pentaform/errors.hpp"

namespace pentaform {

std::string_view axiom_name(Axiom axiom) {
  switch (axiom) {
    case Axiom::kPlayerOfSituation: return "[Pi<-j]";
    case Axiom::kSituationOfNode: return "[Pj<-w]";
    case Axiom::kCartesianSlices: return "[Pwa]";
    case Axiom::kSuccessorOfPair: return "[Pwa->y]";
    case Axiom::kPredecessorOfNode: return "[Pw<-y]";
    case Axiom::kActionOfNode: return "[Pa<-y]";
    case Axiom::kPredecessorsEscape: return "[Py]";
    case Axiom::kSingleRoot: return "[Pr]";
  }
  return "[?]";
}

bool AxiomReport::violates(Axiom axiom) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const AxiomViolation& v) { return v.axiom == axiom; });
}

namespace {

// First key whose image has more than one element, if any.
template <typename Map>
const typename Map::value_type* first_non_function(const Map& relation) {
  for (const auto& entry : relation) {
    if (entry.second.size() > 1) return &entry;
  }
  return nullptr;
}

}  // namespace

std::variant<Pentaform, AxiomReport> validate(QuintupleSet q) {
  std::map<Label, LabelSet> players_of_situation, situations_of_node,
      successors_of_pair_key, predecessors_of_node, actions_of_node;
  std::map<std::pair<Label, Label>, LabelSet> successors_of_pair;
  LabelSet W, Y;
  for (const auto& x : q) {
    players_of_situation[x.situation].insert(x.player);
    situations_of_node[x.node].insert(x.situation);
    successors_of_pair[{x.node, x.action}].insert(x.successor);
    predecessors_of_node[x.successor].insert(x.node);
    actions_of_node[x.successor].insert(x.action);
    W.insert(x.node);
    Y.insert(x.successor);
  }

  AxiomReport report;
  auto add = [&](Axiom a, std::string witness) {
    report.violations.push_back({a, std::move(witness)});
  };

  if (auto* e = first_non_function(players_of_situation)) {
    add(Axiom::kPlayerOfSituation,
        "situation " + show(e->first) + " has players " + show(e->second));
  }
  if (auto* e = first_non_function(situations_of_node)) {
    add(Axiom::kSituationOfNode,
        "node " + show(e->first) + " is in situations " + show(e->second));
  }
  {
    // pi_WA(Q_j) must equal W_j x A_j.
    std::map<Label, std::set<std::pair<Label, Label>>> pairs;
    std::map<Label, LabelSet> nodes_of, actions_of;
    for (const auto& x : q) {
      pairs[x.situation].insert({x.node, x.action});
      nodes_of[x.situation].insert(x.node);
      actions_of[x.situation].insert(x.action);
    }
    bool found = false;
    for (const auto& [j, wa] : pairs) {
      for (const auto& w : nodes_of[j]) {
        for (const auto& a : actions_of[j]) {
          if (!wa.contains({w, a})) {
            add(Axiom::kCartesianSlices, "situation " + show(j) + ": node " +
                                             show(w) + " lacks action " +
                                             show(a));
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
  }
  for (const auto& [wa, ys] : successors_of_pair) {
    if (ys.size() > 1) {
      add(Axiom::kSuccessorOfPair, "node " + show(wa.first) + " with action " +
                                       show(wa.second) + " leads to " +
                                       show(ys));
      break;
    }
  }
  if (auto* e = first_non_function(predecessors_of_node)) {
    add(Axiom::kPredecessorOfNode,
        "node " + show(e->first) + " has predecessors " + show(e->second));
  }
  if (auto* e = first_non_function(actions_of_node)) {
    add(Axiom::kActionOfNode,
        "node " + show(e->first) + " is reached by actions " + show(e->second));
  }
  {
    // Walk p from each y for at most |X| steps; it must leave Y.
    LabelSet X = W;
    X.insert(Y.begin(), Y.end());
    for (const auto& y : Y) {
      Label cur = y;
      bool escaped = false;
      for (std::size_t step = 0; step < X.size(); ++step) {
        cur = *predecessors_of_node.at(cur).begin();
        if (!Y.contains(cur)) {
          escaped = true;
          break;
        }
      }
      if (!escaped) {
        add(Axiom::kPredecessorsEscape,
            "predecessors of node " + show(y) + " never leave Y (cycle)");
        break;
      }
    }
  }
  LabelSet roots;
  std::set_difference(W.begin(), W.end(), Y.begin(), Y.end(),
                      std::inserter(roots, roots.end()));
  if (roots.size() != 1) {
    add(Axiom::kSingleRoot, "W \\ Y = " + show(roots));
  }

  if (!report.violations.empty()) return report;

  auto impl = std::make_shared<Pentaform::Impl>();
  impl->decision_nodes = std::move(W);
  impl->successor_nodes = std::move(Y);
  impl->root = *roots.begin();
  impl->nodes = impl->decision_nodes;
  impl->nodes.insert(impl->successor_nodes.begin(), impl->successor_nodes.end());
  for (const auto& y : impl->successor_nodes) {
    if (!impl->decision_nodes.contains(y)) impl->endnodes.insert(y);
  }
  for (const auto& x : q) {
    impl->players.insert(x.player);
    impl->situations.insert(x.situation);
    impl->actions.insert(x.action);
    impl->predecessor[x.successor] = x.node;
    impl->situation_of[x.node] = x.situation;
    impl->player_of[x.situation] = x.player;
    impl->information_set[x.situation].insert(x.node);
    impl->moves[x.node].emplace_back(x.action, x.successor);
    impl->situations_of[x.player].insert(x.situation);
  }
  for (auto& [j, nodes] : impl->information_set) {
    const auto& first_moves = impl->moves[*nodes.begin()];
    std::vector<Label> acts;
    for (const auto& [a, y] : first_moves) acts.push_back(a);
    std::sort(acts.begin(), acts.end());
    impl->action_set[j] = std::move(acts);
  }
  for (auto& [w, ms] : impl->moves) std::sort(ms.begin(), ms.end());
  // Depth by walking down from the root.
  std::vector<Label> stack{impl->root};
  impl->depth[impl->root] = 0;
  while (!stack.empty()) {
    Label w = std::move(stack.back());
    stack.pop_back();
    auto it = impl->moves.find(w);
    if (it == impl->moves.end()) continue;
    const std::size_t d = impl->depth[w] + 1;
    for (const auto& [a, y] : it->second) {
      impl->depth[y] = d;
      stack.push_back(y);
    }
  }
  impl->q = std::move(q);
  return Pentaform(std::move(impl));
}

Pentaform make_pentaform(QuintupleSet q) {
  auto result = validate(std::move(q));
  if (auto* report = std::get_if<AxiomReport>(&result)) {
    std::ostringstream msg;
    msg << "not a pentaform:";
    for (const auto& v : report->violations) {
      msg << " " << axiom_name(v.axiom) << " " << v.witness << ";";
    }
    throw DomainError(msg.str());
  }
  return std::get<Pentaform>(std::move(result));
}

const Label& Pentaform::predecessor(const Label& y) const {
  auto it = impl_->predecessor.find(y);
  if (it == impl_->predecessor.end()) {
    throw DomainError("node " + show(y) + " is not a successor node");
  }
  return it->second;
}

const Label& Pentaform::situation_of(const Label& w) const {
  auto it = impl_->situation_of.find(w);
  if (it == impl_->situation_of.end()) {
    throw DomainError("node " + show(w) + " is not a decision node");
  }
  return it->second;
}

const Label& Pentaform::player_of(const Label& j) const {
  auto it = impl_->player_of.find(j);
  if (it == impl_->player_of.end()) {
    throw DomainError("unknown situation " + show(j));
  }
  return it->second;
}

const LabelSet& Pentaform::information_set(const Label& j) const {
  auto it = impl_->information_set.find(j);
  if (it == impl_->information_set.end()) {
    throw DomainError("unknown situation " + show(j));
  }
  return it->second;
}

const std::vector<Label>& Pentaform::action_set(const Label& j) const {
  auto it = impl_->action_set.find(j);
  if (it == impl_->action_set.end()) {
    throw DomainError("unknown situation " + show(j));
  }
  return it->second;
}

const Label& Pentaform::next_node(const Label& w, const Label& a) const {
  auto it = impl_->moves.find(w);
  if (it != impl_->moves.end()) {
    for (const auto& [action, y] : it->second) {
      if (action == a) return y;
    }
  }
  throw DomainError("action " + show(a) + " is not feasible at node " + show(w));
}

const std::vector<std::pair<Label, Label>>& Pentaform::moves(
    const Label& w) const {
  auto it = impl_->moves.find(w);
  if (it == impl_->moves.end()) {
    throw DomainError("node " + show(w) + " is not a decision node");
  }
  return it->second;
}

const LabelSet& Pentaform::situations_of(const Label& player) const {
  auto it = impl_->situations_of.find(player);
  if (it == impl_->situations_of.end()) {
    throw DomainError("unknown player " + show(player));
  }
  return it->second;
}

std::size_t Pentaform::depth(const Label& x) const {
  auto it = impl_->depth.find(x);
  if (it == impl_->depth.end()) throw DomainError("unknown node " + show(x));
  return it->second;
}

const Label& root(const Pentaform& p) { return p.root(); }

const Label& predecessor(const Pentaform& p, const Label& y) {
  return p.predecessor(y);
}

bool precedes(const Pentaform& p, const Label& x1, const Label& x2,
              Precedence strictness) {
  if (!p.contains_node(x1)) throw DomainError("unknown node " + show(x1));
  if (!p.contains_node(x2)) throw DomainError("unknown node " + show(x2));
  if (x1 == x2) return strictness == Precedence::kWeak;
  const std::size_t d1 = p.depth(x1);
  std::size_t d2 = p.depth(x2);
  if (d1 >= d2) return false;
  Label cur = x2;
  while (d2 > d1) {
    cur = p.predecessor(cur);
    --d2;
  }
  return cur == x1;
}

Path weak_predecessors(const Pentaform& p, const Label& x) {
  if (!p.contains_node(x)) throw DomainError("unknown node " + show(x));
  Path path;
  Label cur = x;
  path.nodes.push_back(cur);
  while (cur != p.root()) {
    cur = p.predecessor(cur);
    path.nodes.push_back(cur);
  }
  std::reverse(path.nodes.begin(), path.nodes.end());
  return path;
}

std::variant<Run, NotARun> run_closure(const Pentaform& p, const LabelSet& n) {
  if (n.empty()) throw DomainError("run_closure needs a nonempty node set");
  for (const auto& x : n) {
    if (!p.contains_node(x)) throw DomainError("unknown node " + show(x));
  }
  // max N exists iff some member weakly succeeds every member.
  const Label* deepest = &*n.begin();
  for (const auto& x : n) {
    if (p.depth(x) > p.depth(*deepest)) deepest = &x;
  }
  for (const auto& x : n) {
    if (!precedes(p, x, *deepest)) {
      return NotARun{"max N does not exist: " + show(x) + " and " +
                     show(*deepest) + " lie on divergent branches"};
    }
  }
  if (!p.is_endnode(*deepest)) {
    return NotARun{"max N = " + show(*deepest) + " is a decision node"};
  }
  return Run{weak_predecessors(p, *deepest).nodes};
}

std::vector<Run> runs(const Pentaform& p) {
  std::vector<Run> out;
  out.reserve(p.endnodes().size());
  for (const auto& y : p.endnodes()) {
    out.push_back(Run{weak_predecessors(p, y).nodes});
  }
  return out;
}

LabelSet descendants(const Pentaform& p, const Label& x) {
  if (!p.contains_node(x)) throw DomainError("unknown node " + show(x));
  LabelSet out;
  std::vector<Label> stack{x};
  while (!stack.empty()) {
    Label cur = std::move(stack.back());
    stack.pop_back();
    out.insert(cur);
    if (p.is_decision_node(cur)) {
      for (const auto& [a, y] : p.moves(cur)) stack.push_back(y);
    }
  }
  return out;
}

const LabelSet& information_set(const Pentaform& p, const Label& j) {
  return p.information_set(j);
}

const std::vector<Label>& action_set(const Pentaform& p, const Label& j) {
  return p.action_set(j);
}

}  // namespace pentaform
