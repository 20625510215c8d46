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

#ifndef PENTAFORM_CLI_DOT_HPP_
#define PENTAFORM_CLI_DOT_HPP_

#include <map>
#include <string>

#include "pentaform/pentaform.hpp"
#include "pentaform/xreal.hpp"

namespace pentaform::cli {

// Graphviz digraph of a pentaform. Subroots get a double border and an
// underlined label, every node is filled with its piece's color, and edges
// carry their actions. Endnodes show their utility profile when given.
std::string to_dot(const Pentaform& p,
                   const std::map<Label, Profile>* utilities = nullptr);

}  // namespace pentaform::cli

#endif  // PENTAFORM_CLI_DOT_HPP_
