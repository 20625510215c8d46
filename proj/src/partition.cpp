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

#include "pentaform/partition.hpp"

#include <algorithm>

#include "pentaform/errors.hpp"

namespace pentaform {

namespace {

std::vector<Label> children(const Pentaform& p, const Label& w) {
  std::vector<Label> out;
  for (const auto& [a, y] : p.moves(w)) out.push_back(y);
  return out;
}

}  // namespace

Partition::Partition(const Pentaform& p) : form_(p) {
  // Post-order count of each situation's nodes inside each subtree; w is a
  // subroot iff every situation seen below w has all its nodes below w.
  std::map<Label, std::map<Label, std::size_t>> counts;
  std::vector<std::pair<Label, bool>> stack{{p.root(), false}};
  while (!stack.empty()) {
    auto [w, expanded] = stack.back();
    stack.pop_back();
    if (!p.is_decision_node(w)) continue;
    if (!expanded) {
      stack.push_back({w, true});
      for (const auto& y : children(p, w)) stack.push_back({y, false});
      continue;
    }
    std::map<Label, std::size_t> mine;
    ++mine[p.situation_of(w)];
    for (const auto& y : children(p, w)) {
      auto it = counts.find(y);
      if (it == counts.end()) continue;
      for (const auto& [j, c] : it->second) mine[j] += c;
      counts.erase(it);
    }
    bool closed = true;
    for (const auto& [j, c] : mine) {
      if (c != p.information_set(j).size()) {
        closed = false;
        break;
      }
    }
    if (closed) subroots_.insert(w);
    counts[w] = std::move(mine);
  }

  order_.assign(subroots_.begin(), subroots_.end());
  std::stable_sort(order_.begin(), order_.end(),
                   [&](const Label& a, const Label& b) {
                     return p.depth(a) < p.depth(b);
                   });

  std::vector<Label> todo{p.root()};
  owner_[p.root()] = p.root();
  while (!todo.empty()) {
    Label w = std::move(todo.back());
    todo.pop_back();
    const Label& own = owner_[w];
    for (const auto& y : children(p, w)) {
      if (!p.is_decision_node(y)) continue;
      owner_[y] = subroots_.contains(y) ? y : own;
      todo.push_back(y);
    }
  }

  std::map<Label, QuintupleSet> grouped;
  for (const auto& x : p.quintuples()) {
    const Label& t = owner_.at(x.node);
    grouped[t].insert(x);
    piece_situations_[t].insert(x.situation);
    piece_nodes_[t].insert(x.node);
  }
  for (auto& [t, q] : grouped) pieces_.emplace(t, make_pentaform(std::move(q)));
}

const Label& Partition::owner(const Label& w) const {
  auto it = owner_.find(w);
  if (it == owner_.end()) {
    throw DomainError("node " + show(w) + " is not a decision node");
  }
  return it->second;
}

const Pentaform& Partition::piece(const Label& t) const {
  auto it = pieces_.find(t);
  if (it == pieces_.end()) throw DomainError(show(t) + " is not a subroot");
  return it->second;
}

const LabelSet& Partition::piece_situations(const Label& t) const {
  auto it = piece_situations_.find(t);
  if (it == piece_situations_.end()) {
    throw DomainError(show(t) + " is not a subroot");
  }
  return it->second;
}

const LabelSet& Partition::piece_decision_nodes(const Label& t) const {
  auto it = piece_nodes_.find(t);
  if (it == piece_nodes_.end()) {
    throw DomainError(show(t) + " is not a subroot");
  }
  return it->second;
}

LabelSet Partition::subform_situations(const Label& t) const {
  if (!is_subroot(t)) throw DomainError(show(t) + " is not a subroot");
  LabelSet out;
  for (const auto& x : descendants(form_, t)) {
    if (form_.is_decision_node(x)) out.insert(form_.situation_of(x));
  }
  return out;
}

LabelSet subroots(const Pentaform& p) { return Partition(p).subroots(); }

Pentaform subform(const Pentaform& p, const Label& t) {
  if (!Partition(p).is_subroot(t)) {
    throw DomainError(show(t) + " is not a subroot");
  }
  const LabelSet below = descendants(p, t);
  QuintupleSet q;
  for (const auto& x : p.quintuples()) {
    if (below.contains(x.node)) q.insert(x);
  }
  return make_pentaform(std::move(q));
}

Pentaform piece_form(const Pentaform& p, const Label& t) {
  return Partition(p).piece(t);
}

std::vector<Piece> piece_partition(const Pentaform& p) {
  Partition part(p);
  std::vector<Piece> out;
  for (const auto& t : part.order()) out.push_back({t, part.piece(t)});
  return out;
}

std::vector<PieceEndnodes> classify_piece_endnodes(const Pentaform& p) {
  Partition part(p);
  std::vector<PieceEndnodes> out;
  std::map<Label, std::size_t> hits;
  for (const auto& t : part.order()) {
    PieceEndnodes e{t, {}, {}};
    for (const auto& y : part.piece(t).endnodes()) {
      ++hits[y];
      if (part.is_subroot(y)) {
        e.later_subroots.insert(y);
      } else if (p.is_endnode(y)) {
        e.final_endnodes.insert(y);
      } else {
        throw InternalError("piece endnode " + show(y) +
                            " is neither a subroot nor a final endnode");
      }
    }
    out.push_back(std::move(e));
  }
  if (hits.contains(p.root())) {
    throw InternalError("the root is a piece endnode");
  }
  for (const auto& t : part.subroots()) {
    if (t != p.root() && hits[t] != 1) {
      throw InternalError("subroot " + show(t) +
                          " ends other than exactly one piece");
    }
  }
  for (const auto& y : p.endnodes()) {
    if (hits[y] != 1) {
      throw InternalError("final endnode " + show(y) +
                          " ends other than exactly one piece");
    }
  }
  return out;
}

PieceRunClass classify_piece_run(const Pentaform& p, const Label& t,
                                 const Run& n) {
  Partition part(p);
  const Pentaform& piece = part.piece(t);
  const auto piece_runs = runs(piece);
  if (std::find(piece_runs.begin(), piece_runs.end(), n) == piece_runs.end()) {
    throw DomainError("not a run of the piece at " + show(t));
  }
  const Label& last = n.last();
  PieceRunClass out;
  out.node = last;
  out.completion = weak_predecessors(p, last).nodes;
  out.kind = part.is_subroot(last) ? PieceRunClass::Kind::kExitToSubroot
                                   : PieceRunClass::Kind::kFinalEndnode;
  return out;
}

}  // namespace pentaform
