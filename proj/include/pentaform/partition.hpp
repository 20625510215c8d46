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

#ifndef PENTAFORM_PARTITION_HPP_
#define PENTAFORM_PARTITION_HPP_

#include <map>
#include <memory>
#include <vector>

#include "pentaform/label.hpp"
#include "pentaform/pentaform.hpp"

namespace pentaform {

// Subroots, piece forms and the node-to-piece assignment of one pentaform,
// computed once. Pieces are listed by (depth, label), root first.
class Partition {
 public:
  explicit Partition(const Pentaform& p);

  const Pentaform& form() const { return form_; }
  const LabelSet& subroots() const { return subroots_; }
  bool is_subroot(const Label& w) const { return subroots_.contains(w); }
  // Subroots ordered by (depth, label).
  const std::vector<Label>& order() const { return order_; }

  // The subroot whose piece contains decision node w.
  const Label& owner(const Label& w) const;
  const Pentaform& piece(const Label& t) const;
  // J^t, W^t, Y^t.
  const LabelSet& piece_situations(const Label& t) const;
  const LabelSet& piece_decision_nodes(const Label& t) const;
  // Situations weakly after t (the subform's situations).
  LabelSet subform_situations(const Label& t) const;
  // A node ends a piece walk begun at t when it is an endnode or a later
  // subroot.
  bool ends_piece(const Label& t, const Label& x) const {
    return !form_.is_decision_node(x) || (x != t && subroots_.contains(x));
  }

 private:
  Pentaform form_;
  LabelSet subroots_;
  std::vector<Label> order_;
  std::map<Label, Label> owner_;
  std::map<Label, Pentaform> pieces_;
  std::map<Label, LabelSet> piece_situations_;
  std::map<Label, LabelSet> piece_nodes_;
};

LabelSet subroots(const Pentaform& p);
Pentaform subform(const Pentaform& p, const Label& t);
Pentaform piece_form(const Pentaform& p, const Label& t);

struct Piece {
  Label subroot;
  Pentaform form;
};
// Pieces in (depth, label) order.
std::vector<Piece> piece_partition(const Pentaform& p);

struct PieceEndnodes {
  Label subroot;
  LabelSet later_subroots;  // Y^t \ W^t that are in T
  LabelSet final_endnodes;  // Y^t \ W^t that are in Y \ W
};
// Piece endnodes per piece, after verifying that together with {r} they
// partition T u (Y \ W). Throws InternalError if they do not.
std::vector<PieceEndnodes> classify_piece_endnodes(const Pentaform& p);

struct PieceRunClass {
  enum class Kind { kExitToSubroot, kFinalEndnode, kInfinitePiece };
  Kind kind;
  // The later subroot or the final endnode.
  Label node;
  // R(N): the run prefix to the later subroot, or the completed full run.
  std::vector<Label> completion;
};
PieceRunClass classify_piece_run(const Pentaform& p, const Label& t,
                                 const Run& n);

}  // namespace pentaform

#endif  // PENTAFORM_PARTITION_HPP_
