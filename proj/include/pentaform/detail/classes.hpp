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

#ifndef PENTAFORM_DETAIL_CLASSES_HPP_
#define PENTAFORM_DETAIL_CLASSES_HPP_

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "pentaform/label.hpp"
#include "pentaform/xreal.hpp"

namespace pentaform {
class StationarySystem;
}

namespace pentaform::detail {

// The class graph of a stationary system: one edge per continue exit.
LabelSet class_successors(const StationarySystem& sys, const Label& c);
// Classes reachable from each class through one or more continue exits.
std::map<Label, LabelSet> class_reachability(const StationarySystem& sys);

bool is_rotation(const std::vector<Label>& a, const std::vector<Label>& b);
// The utility declared for runs that go round `cycle` forever, else the
// model's default.
std::optional<Profile> declared_cycle_utility(const StationarySystem& sys,
                                              const std::vector<Label>& cycle);

// A strongly connected set of classes with a cycle, and the infinite runs
// that stay in it: one per simple cycle, plus (cycle empty) the runs that mix
// several cycles when there is more than one.
struct Recurrent {
  LabelSet classes;
  std::vector<std::pair<std::vector<Label>, std::optional<Profile>>> runs;
};
std::vector<Recurrent> recurrent_sets(const StationarySystem& sys);

}  // namespace pentaform::detail

#endif  // PENTAFORM_DETAIL_CLASSES_HPP_
