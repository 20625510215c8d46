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

#include "pentaform/detail/play.hpp"

#include <optional>

namespace pentaform::detail {

namespace {

struct Search {
  const Pentaform& p;
  const ChoiceMap& fixed;
  const LabelSet& free;
  const Label& start;
  const StopFn& stop;
  const PayoffFn& payoff;
  ChoiceMap assigned;
  std::optional<Reply> best;

  bool ends_at(const Label& x) const {
    return !p.is_decision_node(x) || (x != start && stop && stop(x));
  }

  void visit(const Label& x) {
    if (ends_at(x)) {
      XReal value = payoff(x);
      if (!best || value > best->value) best = Reply{value, assigned, x};
      return;
    }
    const Label& j = p.situation_of(x);
    if (!free.contains(j)) {
      visit(p.next_node(x, fixed.at(j)));
      return;
    }
    if (auto it = assigned.find(j); it != assigned.end()) {
      visit(p.next_node(x, it->second));
      return;
    }
    for (const auto& [a, y] : p.moves(x)) {
      assigned.emplace(j, a);
      visit(y);
      assigned.erase(j);
    }
  }
};

}  // namespace

Reply best_reply(const Pentaform& p, const ChoiceMap& fixed,
                 const LabelSet& free, const Label& start, const StopFn& stop,
                 const PayoffFn& payoff) {
  Search search{p, fixed, free, start, stop, payoff, {}, std::nullopt};
  search.visit(start);
  return *search.best;
}

}  // namespace pentaform::detail
