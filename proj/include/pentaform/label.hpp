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

#ifndef PENTAFORM_LABEL_HPP_
#define PENTAFORM_LABEL_HPP_

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace pentaform {

// Players, situations, nodes and actions are opaque strings ordered
// lexicographically (bytewise), which makes every iteration deterministic.
using Label = std::string;
using LabelSet = std::set<Label>;

// Situation -> action. Used for strategies and all of their restrictions.
using ChoiceMap = std::map<Label, Label>;

std::string join(const std::vector<Label>& parts, std::string_view sep);
std::string join(const LabelSet& parts, std::string_view sep);
std::vector<Label> split(std::string_view text, char sep);

// Renders a label for diagnostics; the empty label prints as "{}".
std::string show(const Label& label);
std::string show(const LabelSet& labels);
std::string show(const std::vector<Label>& labels);

}  // namespace pentaform

#endif  // PENTAFORM_LABEL_HPP_
