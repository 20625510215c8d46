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

#ifndef PENTAFORM_TESTS_SUPPORT_GENERATORS_HPP_
#define PENTAFORM_TESTS_SUPPORT_GENERATORS_HPP_

// Seeded generators for the property suites.

#include <cstdint>
#include <random>
#include <vector>

#include "pentaform/game.hpp"
#include "pentaform/stationary.hpp"

namespace pentaform::gen {

using Rng = std::mt19937_64;

// The fixed corpus: random_game(seed) for seed = first, first + 1, ...
std::vector<Game> corpus(std::size_t count, std::uint64_t first = 1);

Strategy random_strategy(const Pentaform& p, Rng& rng);

// Random small rationals in [-10, 10] on every subroot.
ValueFunction random_values(const Game& g, Rng& rng);

// v with one (subroot, stakeholder) entry moved by a nonzero amount.
ValueFunction perturb(const ValueFunction& v, Rng& rng);

// A discounted system with one to three classes, each a single-piece tree
// of depth at most two whose endnodes are random terminal or continue exits.
// Every class is reachable from the initial one.
StationarySystem random_system(std::uint64_t seed);

StationaryStrategy random_stationary_strategy(const StationarySystem& sys,
                                              Rng& rng);

}  // namespace pentaform::gen

#endif  // PENTAFORM_TESTS_SUPPORT_GENERATORS_HPP_
