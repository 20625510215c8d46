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

#ifndef PENTAFORM_GAME_HPP_
#define PENTAFORM_GAME_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>

#include "pentaform/label.hpp"
#include "pentaform/partition.hpp"
#include "pentaform/pentaform.hpp"
#include "pentaform/strategy.hpp"
#include "pentaform/xreal.hpp"

namespace pentaform {

// A pentaform with stakeholders K (containing its players) and a utility
// profile at every final endnode.
class Game {
 public:
  // Throws DomainError if I is not within K or a profile is not K-total.
  Game(Pentaform form, LabelSet stakeholders,
       std::map<Label, Profile> utilities);

  const Pentaform& form() const { return part_->form(); }
  const Partition& partition() const { return *part_; }
  const LabelSet& stakeholders() const { return stakeholders_; }
  const std::map<Label, Profile>& utilities() const { return utilities_; }
  const Profile& utility(const Label& endnode) const;

 private:
  std::shared_ptr<const Partition> part_;
  LabelSet stakeholders_;
  std::map<Label, Profile> utilities_;
};

// Subroot -> profile.
struct ValueFunction {
  std::map<Label, Profile> values;

  const Profile& at(const Label& t) const;
  bool operator==(const ValueFunction&) const = default;
};

// Counterexample attached to a failing verdict.
struct Witness {
  Label subroot;
  Label agent;          // the deviating player or the offending stakeholder
  ChoiceMap deviation;  // deviating choices, when a deviation is involved
  Profile current;      // what the strategy or value function gives
  Profile alternative;  // what the deviation or the definition requires
  std::string detail;
};

struct Verdict {
  bool holds = true;
  std::optional<Witness> witness;

  explicit operator bool() const { return holds; }
  static Verdict pass() { return {}; }
  static Verdict fail(Witness w) { return {false, std::move(w)}; }
};

// u of the run ending at z's endnode. Throws DomainError if z is not a run.
const Profile& utility_of_run(const Game& g, const Run& z);

// The game (tQ, tu) at subroot t.
Game subgame(const Game& g, const Label& t);
// The piece game at t: later subroots priced by v, final endnodes by u.
Game piece_game(const Game& g, const ValueFunction& v, const Label& t);

Verdict nash_check(const Game& g, const Strategy& s);
Verdict spe_check_direct(const Game& g, const Strategy& s);
Verdict admissible(const Game& g, const ValueFunction& v);
Verdict persistent(const Game& g, const Strategy& s, const ValueFunction& v,
                   const Rational& tol = 0);
Verdict authentic(const Game& g, const Strategy& s, const ValueFunction& v,
                  const Rational& tol = 0);
ValueFunction authentic_value(const Game& g, const Strategy& s);
Verdict piecewise_nash(const Game& g, const Strategy& s,
                       const ValueFunction& v);
Verdict one_piece_unimprovable(const Game& g, const Strategy& s);

inline constexpr std::uint64_t kDefaultProfileCap = 1'000'000;

struct Solution {
  Strategy strategy;
  ValueFunction values;
};
struct NoPureEquilibrium {
  Label subroot;
};

// Deepest piece first, each piece's first pure Nash equilibrium in
// lexicographic action-profile order. Throws ResourceError when a piece has
// more than cap strategy profiles.
std::variant<Solution, NoPureEquilibrium> solve_backward(
    const Game& g, std::uint64_t cap = kDefaultProfileCap);

struct RandomGameOptions {
  std::size_t max_nodes = 12;
  std::size_t max_players = 3;
  std::size_t max_info_set = 3;
};
Game random_game(std::uint64_t seed, const RandomGameOptions& options = {});

}  // namespace pentaform

#endif  // PENTAFORM_GAME_HPP_
