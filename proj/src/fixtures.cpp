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

#include "pentaform/fixtures.hpp"

#include <algorithm>

namespace pentaform::fixtures {

namespace {

Profile profile(std::initializer_list<std::pair<const char*, Rational>> xs) {
  Profile out;
  for (const auto& [k, x] : xs) out.emplace(k, XReal(x));
  return out;
}

Rational q(long long num, long long den = 1) { return Rational(num, den); }

StationarySystem chain(const Label& player, const Profile& out_odd,
                       const Profile& out_even, bool alternate) {
  auto piece = [&](const Profile& out, const Label& next) {
    return PieceClass({{player, "", "", "in", "i"}, {player, "", "", "out", "o"}},
                      {{"o", Exit::terminal(out)},
                       {"i", Exit::go(next, profile({{player.c_str(), 0}}))}});
  };
  std::map<Label, PieceClass> classes;
  AbsoluteModel model;
  model.infinite_run_utility = profile({{player.c_str(), 0}});
  if (alternate) {
    classes.emplace("odd", piece(out_odd, "even"));
    classes.emplace("even", piece(out_even, "odd"));
    model.cycle_utilities.push_back({{"odd", "even"}, *model.infinite_run_utility});
    return StationarySystem(std::move(classes), "odd", {player}, model);
  }
  classes.emplace("node", piece(out_odd, "node"));
  model.cycle_utilities.push_back({{"node"}, *model.infinite_run_utility});
  return StationarySystem(std::move(classes), "node", {player}, model);
}

}  // namespace

Game entrant_incumbent() {
  Pentaform form = make_pentaform({{"Ent", "jE", "5", "e", "6"},
                                   {"Ent", "jE", "5", "e~", "7"},
                                   {"Inc", "jI", "6", "f", "8"},
                                   {"Inc", "jI", "6", "f~", "9"}});
  std::map<Label, Profile> u{
      {"7", profile({{"Ent", 0}, {"Inc", 0}})},
      {"8", profile({{"Ent", -1}, {"Inc", 3}})},
      {"9", profile({{"Ent", 0}, {"Inc", 2}})},
  };
  return Game(std::move(form), {"Ent", "Inc"}, std::move(u));
}

Strategy entrant_incumbent_equilibrium() {
  return Strategy{{{"jE", "e~"}, {"jI", "f"}}};
}

StationarySystem cry_wolf() {
  std::vector<Quintuple> day{
      {"Wolf", "", "", "a~", "1"},   {"Wolf", "", "", "a", "2"},
      {"Kid", "1", "1", "c", "3"},   {"Kid", "1", "1", "c~", "8"},
      {"Town", "2+3", "2", "r", "4"}, {"Town", "2+3", "2", "r~", "5"},
      {"Town", "2+3", "3", "r", "6"}, {"Town", "2+3", "3", "r~", "7"},
  };
  auto reward = [](Rational wolf, Rational kid, Rational town) {
    return profile({{"Wolf", wolf}, {"Kid", kid}, {"Town", town}});
  };
  std::map<Label, Exit> exits{
      {"4", Exit::terminal(reward(q(-5, 9), q(5, 9), 0))},
      {"5", Exit::terminal(reward(q(5, 9), 0, 0))},
      {"6", Exit::go("day", reward(q(1, 2), q(2, 5), q(1, 5)))},
      {"7", Exit::go("day", reward(q(1, 2), q(1, 5), q(2, 5)))},
      {"8", Exit::go("day", reward(q(1, 2), q(1, 5), q(2, 5)))},
  };
  std::map<Label, PieceClass> classes;
  classes.emplace("day", PieceClass(std::move(day), std::move(exits)));
  return StationarySystem(std::move(classes), "day", {"Wolf", "Kid", "Town"},
                          DiscountedModel{q(1, 10)});
}

StationaryStrategy cry_wolf_equilibrium() {
  return StationaryStrategy{{{"day", {{"", "a~"}, {"1", "c"}, {"2+3", "r~"}}}}};
}

StationarySystem ann() {
  return chain("Ann", profile({{"Ann", 1}}), {}, false);
}

StationarySystem bob() {
  return chain("Bob", profile({{"Bob", -1}}), {}, false);
}

StationarySystem eda() {
  return chain("Eda", profile({{"Eda", -1}}), profile({{"Eda", 1}}), true);
}

StationaryStrategy always(const StationarySystem& sys, const Label& action) {
  StationaryStrategy out;
  for (const auto& [c, pc] : sys.classes()) {
    auto& choices = out.choices[c];
    for (const auto& j : pc.situation_order()) {
      const auto& acts = pc.action_order(j);
      const bool offered =
          std::find(acts.begin(), acts.end(), action) != acts.end();
      choices[j] = offered ? action : acts.front();
    }
  }
  return out;
}

Game one_situation_game() {
  QuintupleSet qs;
  for (const Label b : {"", "0", "1"}) {
    qs.insert({"Joe", "B", b, "0", b + "0"});
    qs.insert({"Joe", "B", b, "1", b + "1"});
  }
  std::map<Label, Profile> u;
  for (const Label y : {"00", "01", "10", "11"}) {
    u.emplace(y, profile({{"Joe", y == "11" ? 2 : y == "00" ? 1 : 0}}));
  }
  return Game(make_pentaform(std::move(qs)), {"Joe"}, std::move(u));
}

Game matching_pennies_game() {
  Pentaform form = make_pentaform({
      {"A", "jr", "r", "stop", "s"},   {"A", "jr", "r", "go", "m"},
      {"A", "jA", "m", "H", "mH"},     {"A", "jA", "m", "T", "mT"},
      {"B", "jB", "mH", "H", "mHH"},   {"B", "jB", "mH", "T", "mHT"},
      {"B", "jB", "mT", "H", "mTH"},   {"B", "jB", "mT", "T", "mTT"},
  });
  auto ab = [](int a) { return profile({{"A", a}, {"B", -a}}); };
  std::map<Label, Profile> u{{"s", ab(0)},   {"mHH", ab(1)}, {"mHT", ab(-1)},
                             {"mTH", ab(-1)}, {"mTT", ab(1)}};
  return Game(std::move(form), {"A", "B"}, std::move(u));
}

StationarySystem matching_pennies_system() {
  auto ab = [](int a) { return profile({{"A", a}, {"B", -a}}); };
  std::map<Label, PieceClass> classes;
  classes.emplace(
      "pennies",
      PieceClass({{"A", "", "", "H", "H"},
                  {"A", "", "", "T", "T"},
                  {"B", "H+T", "H", "h", "Hh"},
                  {"B", "H+T", "H", "t", "Ht"},
                  {"B", "H+T", "T", "h", "Th"},
                  {"B", "H+T", "T", "t", "Tt"}},
                 {{"Hh", Exit::go("pennies", ab(1))},
                  {"Ht", Exit::terminal(ab(-1))},
                  {"Th", Exit::terminal(ab(-1))},
                  {"Tt", Exit::go("pennies", ab(1))}}));
  return StationarySystem(std::move(classes), "pennies", {"A", "B"},
                          DiscountedModel{q(1, 2)});
}

}  // namespace pentaform::fixtures
