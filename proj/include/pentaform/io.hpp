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

#ifndef PENTAFORM_IO_HPP_
#define PENTAFORM_IO_HPP_

#include <string>

#include "pentaform/game.hpp"
#include "pentaform/quintuple.hpp"
#include "pentaform/stationary.hpp"

// JSON documents for forms, games, strategies, value functions and
// stationary systems. Writers emit a canonical text; readers throw
// ParseError with a line:column or JSON-pointer location.
namespace pentaform::io {

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

// True when the document is an object with the given top-level key.
// Stationary systems are the documents with "classes", games those with
// "utilities".
bool has_key(const std::string& text, const std::string& key,
             const std::string& source = "<text>");

QuintupleSet quintuples_from_text(const std::string& text,
                                  const std::string& source = "<text>");
Game game_from_text(const std::string& text,
                    const std::string& source = "<text>");
ChoiceMap strategy_from_text(const std::string& text,
                             const std::string& source = "<text>");
ValueFunction values_from_text(const std::string& text,
                               const std::string& source = "<text>");
StationarySystem system_from_text(const std::string& text,
                                  const std::string& source = "<text>");
std::map<Label, ChoiceMap> stationary_strategy_from_text(
    const std::string& text, const std::string& source = "<text>");
ClassValues class_values_from_text(const std::string& text,
                                   const std::string& source = "<text>");

std::string to_text(const QuintupleSet& q);
std::string to_text(const Game& g);
std::string strategy_to_text(const ChoiceMap& s);
std::string to_text(const ValueFunction& v);
std::string to_text(const StationarySystem& sys);
std::string to_text(const StationaryStrategy& sigma);
std::string class_values_to_text(const ClassValues& w);

}  // namespace pentaform::io

#endif  // PENTAFORM_IO_HPP_
