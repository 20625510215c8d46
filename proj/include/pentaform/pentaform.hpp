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

#ifndef PENTAFORM_PENTAFORM_HPP_
#define PENTAFORM_PENTAFORM_HPP_

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "pentaform/label.hpp"
#include "pentaform/quintuple.hpp"

namespace pentaform {

// The eight pentaform axioms.
enum class Axiom {
  kPlayerOfSituation,     // [Pi<-j]
  kSituationOfNode,       // [Pj<-w]
  kCartesianSlices,       // [Pwa]
  kSuccessorOfPair,       // [Pwa->y]
  kPredecessorOfNode,     // [Pw<-y]
  kActionOfNode,          // [Pa<-y]
  kPredecessorsEscape,    // [Py]
  kSingleRoot,            // [Pr]
};

inline constexpr Axiom kAllAxioms[] = {
    Axiom::kPlayerOfSituation, Axiom::kSituationOfNode,
    Axiom::kCartesianSlices,   Axiom::kSuccessorOfPair,
    Axiom::kPredecessorOfNode, Axiom::kActionOfNode,
    Axiom::kPredecessorsEscape, Axiom::kSingleRoot,
};

std::string_view axiom_name(Axiom axiom);

struct AxiomViolation {
  Axiom axiom;
  std::string witness;
};

// Every violated axiom, each with a concrete witness, in axiom order.
struct AxiomReport {
  std::vector<AxiomViolation> violations;

  bool violates(Axiom axiom) const;
};

// A finite sequence of distinct nodes joined by edges.
struct Path {
  std::vector<Label> nodes;
  bool operator==(const Path&) const = default;
};

// A maximal path from the root of whichever form it was taken from. Finite
// runs end at an endnode.
struct Run {
  std::vector<Label> nodes;

  const Label& first() const { return nodes.front(); }
  const Label& last() const { return nodes.back(); }
  bool operator==(const Run&) const = default;
  auto operator<=>(const Run&) const = default;
};

struct NotARun {
  std::string reason;
};

enum class Precedence { kWeak, kStrict };

// A quintuple set known to satisfy all eight axioms, with its derivatives
// cached. Immutable; copies share storage.
class Pentaform {
 public:
  const QuintupleSet& quintuples() const { return impl_->q; }
  std::size_t size() const { return impl_->q.size(); }

  const LabelSet& players() const { return impl_->players; }
  const LabelSet& situations() const { return impl_->situations; }
  const LabelSet& decision_nodes() const { return impl_->decision_nodes; }
  const LabelSet& actions() const { return impl_->actions; }
  const LabelSet& successor_nodes() const { return impl_->successor_nodes; }
  const LabelSet& nodes() const { return impl_->nodes; }
  const LabelSet& endnodes() const { return impl_->endnodes; }
  const Label& root() const { return impl_->root; }

  bool contains_node(const Label& x) const { return impl_->nodes.contains(x); }
  bool is_decision_node(const Label& x) const {
    return impl_->decision_nodes.contains(x);
  }
  bool is_endnode(const Label& x) const { return impl_->endnodes.contains(x); }
  bool has_situation(const Label& j) const {
    return impl_->situations.contains(j);
  }

  // p(y). Throws DomainError unless y is a successor node.
  const Label& predecessor(const Label& y) const;
  // j_w. Throws DomainError unless w is a decision node.
  const Label& situation_of(const Label& w) const;
  // The unique player of situation j.
  const Label& player_of(const Label& j) const;
  // W_j and A_j. Throw DomainError for unknown j.
  const LabelSet& information_set(const Label& j) const;
  const std::vector<Label>& action_set(const Label& j) const;
  // n(w, a). Throws DomainError for an infeasible pair.
  const Label& next_node(const Label& w, const Label& a) const;
  // <action, successor> pairs leaving w, by action.
  const std::vector<std::pair<Label, Label>>& moves(const Label& w) const;
  // J_i. Throws DomainError for unknown i.
  const LabelSet& situations_of(const Label& player) const;
  // Number of edges between the root and x.
  std::size_t depth(const Label& x) const;

  friend std::variant<Pentaform, AxiomReport> validate(QuintupleSet q);

 private:
  struct Impl {
    QuintupleSet q;
    LabelSet players, situations, decision_nodes, actions, successor_nodes,
        nodes, endnodes;
    Label root;
    std::map<Label, Label> predecessor;
    std::map<Label, Label> situation_of;
    std::map<Label, Label> player_of;
    std::map<Label, LabelSet> information_set;
    std::map<Label, std::vector<Label>> action_set;
    std::map<Label, std::vector<std::pair<Label, Label>>> moves;
    std::map<Label, LabelSet> situations_of;
    std::map<Label, std::size_t> depth;
  };
  explicit Pentaform(std::shared_ptr<const Impl> impl)
      : impl_(std::move(impl)) {}

  std::shared_ptr<const Impl> impl_;
};

std::variant<Pentaform, AxiomReport> validate(QuintupleSet q);
// validate() that throws DomainError listing the violations.
Pentaform make_pentaform(QuintupleSet q);

const Label& root(const Pentaform& p);
const Label& predecessor(const Pentaform& p, const Label& y);
bool precedes(const Pentaform& p, const Label& x1, const Label& x2,
              Precedence strictness = Precedence::kWeak);
// R(x) ordered root-first; equals the root-to-x path.
Path weak_predecessors(const Pentaform& p, const Label& x);
// R(N) = union of R(x) over N, classified as a finite run iff max N exists and
// is an endnode.
std::variant<Run, NotARun> run_closure(const Pentaform& p, const LabelSet& n);
// All runs, one per endnode, in endnode order.
std::vector<Run> runs(const Pentaform& p);
// Nodes weakly after x.
LabelSet descendants(const Pentaform& p, const Label& x);

const LabelSet& information_set(const Pentaform& p, const Label& j);
const std::vector<Label>& action_set(const Pentaform& p, const Label& j);

}  // namespace pentaform

#endif  // PENTAFORM_PENTAFORM_HPP_
