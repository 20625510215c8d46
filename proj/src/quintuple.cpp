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

#include "pentaform/quintuple.hpp"

#include <tuple>

#include "pentaform/errors.hpp"

namespace pentaform {

std::strong_ordering Quintuple::operator<=>(const Quintuple& other) const {
  return std::tie(situation, node, action, player, successor) <=>
         std::tie(other.situation, other.node, other.action, other.player,
                  other.successor);
}

std::vector<Coordinate> parse_coordinates(std::string_view letters) {
  if (letters.empty()) throw UsageError("projection needs at least one coordinate");
  std::vector<Coordinate> out;
  for (char c : letters) {
    Coordinate coord;
    switch (c) {
      case 'I': coord = Coordinate::kPlayer; break;
      case 'J': coord = Coordinate::kSituation; break;
      case 'W': coord = Coordinate::kNode; break;
      case 'A': coord = Coordinate::kAction; break;
      case 'Y': coord = Coordinate::kSuccessor; break;
      default:
        throw UsageError(std::string("unknown coordinate '") + c +
                         "' (expected one of I, J, W, A, Y)");
    }
    for (Coordinate seen : out) {
      if (seen == coord) {
        throw UsageError(std::string("coordinate '") + c + "' repeated");
      }
    }
    out.push_back(coord);
  }
  return out;
}

const Label& coordinate_of(const Quintuple& q, Coordinate c) {
  switch (c) {
    case Coordinate::kPlayer: return q.player;
    case Coordinate::kSituation: return q.situation;
    case Coordinate::kNode: return q.node;
    case Coordinate::kAction: return q.action;
    case Coordinate::kSuccessor: return q.successor;
  }
  throw InternalError("bad coordinate");
}

std::set<std::vector<Label>> project(const QuintupleSet& q,
                                     const std::vector<Coordinate>& coords) {
  if (coords.empty()) throw UsageError("projection needs at least one coordinate");
  for (std::size_t a = 0; a < coords.size(); ++a) {
    for (std::size_t b = a + 1; b < coords.size(); ++b) {
      if (coords[a] == coords[b]) throw UsageError("coordinate repeated");
    }
  }
  std::set<std::vector<Label>> out;
  for (const auto& quint : q) {
    std::vector<Label> tuple;
    tuple.reserve(coords.size());
    for (Coordinate c : coords) tuple.push_back(coordinate_of(quint, c));
    out.insert(std::move(tuple));
  }
  return out;
}

std::set<std::vector<Label>> project(const QuintupleSet& q,
                                     std::string_view letters) {
  return project(q, parse_coordinates(letters));
}

LabelSet project1(const QuintupleSet& q, Coordinate c) {
  LabelSet out;
  for (const auto& quint : q) out.insert(coordinate_of(quint, c));
  return out;
}

QuintupleSet slice(const QuintupleSet& q, const Label& situation) {
  QuintupleSet out;
  // Canonical order groups each situation's quintuples contiguously.
  auto it = q.lower_bound(Quintuple{"", situation, "", "", ""});
  for (; it != q.end() && it->situation == situation; ++it) out.insert(*it);
  return out;
}

}  // namespace pentaform
