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

#ifndef PENTAFORM_FIXTURES_HPP_
#define PENTAFORM_FIXTURES_HPP_

#include "pentaform/game.hpp"
#include "pentaform/stationary.hpp"

// Bundled example games. Tilde actions are written with a trailing "~".
namespace pentaform::fixtures {

// Entrant (Ent) at node 5 enters (e) or not (e~); incumbent (Inc) at node 6
// fights (f) or not (f~). Utilities (Ent, Inc): 7 (0, 0), 8 (-1, 3),
// 9 (0, 2).
Game entrant_incumbent();
Strategy entrant_incumbent_equilibrium();

// Wolf, Kid and Town repeated daily with discount 1/10. Subroot strings are
// over the continue exits 6, 7 and 8; Town's situation at t is "t2+t3".
StationarySystem cry_wolf();
// The wolf never attacks, the kid always cries, the town never rescues.
StationaryStrategy cry_wolf_equilibrium();

// One-player chains: at every node, "out" ends the game and "in" moves on.
// The infinite run is worth 0. Ann's out pays 1, Bob's -1, and Eda's
// alternates -1, 1, -1, ... starting at the root.
StationarySystem ann();
StationarySystem bob();
StationarySystem eda();

// Every situation whose actions include `action` chooses it.
StationaryStrategy always(const StationarySystem& sys, const Label& action);

// Joe picks 0 or 1 twice in a single situation "B": no subroot but the root.
Game one_situation_game();

// A stops ("stop") or moves to node m, where A and B play matching pennies.
Game matching_pennies_game();
// A discounted one-class system whose piece is matching pennies.
StationarySystem matching_pennies_system();

}  // namespace pentaform::fixtures

#endif  // PENTAFORM_FIXTURES_HPP_
