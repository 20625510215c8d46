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

#ifndef PENTAFORM_QUINTUPLE_HPP_
#define PENTAFORM_QUINTUPLE_HPP_

#include <compare>
#include <set>
#include <string_view>
#include <vector>

#include "pentaform/label.hpp"

namespace pentaform {

// <player, situation, decision node, action, successor node>.
struct Quintuple {
  Label player;
  Label situation;
  Label node;
  Label action;
  Label successor;

  bool operator==(const Quintuple&) const = default;
  // Canonical order: (situation, decision node, action), then the rest.
  std::strong_ordering operator<=>(const Quintuple& other) const;
};

using QuintupleSet = std::set<Quintuple>;

enum class Coordinate { kPlayer, kSituation, kNode, kAction, kSuccessor };

// Parses a coordinate word such as "JI" or "WAY" over the letters I, J, W,
// A, Y. Throws UsageError on an empty word, unknown letter or repeat.
std::vector<Coordinate> parse_coordinates(std::string_view letters);

const Label& coordinate_of(const Quintuple& q, Coordinate c);

// The set of coordinate tuples occurring in q, in the requested order.
std::set<std::vector<Label>> project(const QuintupleSet& q,
                                     const std::vector<Coordinate>& coords);
std::set<std::vector<Label>> project(const QuintupleSet& q,
                                     std::string_view letters);
// Single-coordinate projection as a plain label set.
LabelSet project1(const QuintupleSet& q, Coordinate c);

// All quintuples whose situation is j. Unknown j yields the empty set.
QuintupleSet slice(const QuintupleSet& q, const Label& situation);

}  // namespace pentaform

#endif  // PENTAFORM_QUINTUPLE_HPP_
