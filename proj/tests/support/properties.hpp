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

#ifndef PENTAFORM_TESTS_SUPPORT_PROPERTIES_HPP_
#define PENTAFORM_TESTS_SUPPORT_PROPERTIES_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "generators.hpp"
#include "pentaform/game.hpp"

// Laws that must hold on every finite game, shared by the property tests
// and the acceptance runner.
namespace pentaform::props {

// A law returns the first counterexample it finds on one game, if any.
struct Law {
  std::string name;
  std::function<std::optional<std::string>(const Game&, gen::Rng&)> check;
};

// Relations between equilibrium notions and value-function properties.
const std::vector<Law>& equilibrium_laws();
// Partition, run and precedence facts.
const std::vector<Law>& structural_laws();

struct Tally {
  std::size_t games = 0;
  std::size_t checks = 0;
  std::vector<std::string> counterexamples;  // "law / seed: detail"
};

// Runs every law on random_game(seed) for seed = first .. first + count - 1.
// Each (law, game) pair gets its own generator seeded from both.
Tally run_laws(const std::vector<Law>& laws, std::size_t count,
               std::uint64_t first = 1);

}  // namespace pentaform::props

#endif  // PENTAFORM_TESTS_SUPPORT_PROPERTIES_HPP_
