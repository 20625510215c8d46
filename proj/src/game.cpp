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

#include "pentaform/game.hpp"

#include <algorithm>
#include <random>

#include "pentaform/detail/play.hpp"
#include "pentaform/errors.hpp"

namespace pentaform {

Game::Game(Pentaform form, LabelSet stakeholders,
           std::map<Label, Profile> utilities)
    : part_(std::make_shared<const Partition>(form)),
      stakeholders_(std::move(stakeholders)),
      utilities_(std::move(utilities)) {
  for (const auto& i : form.players()) {
    if (!stakeholders_.contains(i)) {
      throw DomainError("player " + show(i) + " is not a stakeholder");
    }
  }
  for (const auto& y : form.endnodes()) {
    auto it = utilities_.find(y);
    if (it == utilities_.end()) {
      throw DomainError("no utility for endnode " + show(y));
    }
    for (const auto& k : stakeholders_) {
      if (!it->second.contains(k)) {
        throw DomainError("utility at " + show(y) + " lacks stakeholder " +
                          show(k));
      }
    }
    if (it->second.size() != stakeholders_.size()) {
      throw DomainError("utility at " + show(y) +
                        " names a non-stakeholder");
    }
  }
  for (const auto& [y, profile] : utilities_) {
    if (!form.is_endnode(y)) {
      throw DomainError("utility given for " + show(y) +
                        ", which is not a final endnode");
    }
  }
}

const Profile& Game::utility(const Label& endnode) const {
  auto it = utilities_.find(endnode);
  if (it == utilities_.end()) {
    throw DomainError(show(endnode) + " is not a final endnode");
  }
  return it->second;
}

const Profile& ValueFunction::at(const Label& t) const {
  auto it = values.find(t);
  if (it == values.end()) {
    throw DomainError("value function has no entry for " + show(t));
  }
  return it->second;
}

const Profile& utility_of_run(const Game& g, const Run& z) {
  const Pentaform& p = g.form();
  if (z.nodes.empty() || !p.contains_node(z.last()) || !p.is_endnode(z.last()) ||
      weak_predecessors(p, z.last()).nodes != z.nodes) {
    throw DomainError("not a run of the game");
  }
  return g.utility(z.last());
}

Game subgame(const Game& g, const Label& t) {
  Pentaform form = subform(g.form(), t);
  std::map<Label, Profile> u;
  for (const auto& y : form.endnodes()) u.emplace(y, g.utility(y));
  return Game(std::move(form), g.stakeholders(), std::move(u));
}

Game piece_game(const Game& g, const ValueFunction& v, const Label& t) {
  const Partition& part = g.partition();
  const Pentaform& form = part.piece(t);
  std::map<Label, Profile> u;
  for (const auto& y : form.endnodes()) {
    u.emplace(y, part.is_subroot(y) ? v.at(y) : g.utility(y));
  }
  return Game(form, g.stakeholders(), std::move(u));
}

namespace {

using ValueAt = std::function<const Profile&(const Label&)>;
using FreeFor = std::function<LabelSet(const Label&)>;

// First player, in label order, with a strictly profitable deviation.
std::optional<Witness> find_deviation(const Game& g, const ChoiceMap& s,
                                      const Label& start,
                                      const detail::StopFn& stop,
                                      const ValueAt& value,
                                      const FreeFor& free_for) {
  const Pentaform& p = g.form();
  const Label current_end = follow(p, s, start, stop).back();
  const Profile& current = value(current_end);
  for (const auto& i : p.players()) {
    const LabelSet free = free_for(i);
    if (free.empty()) continue;
    auto reply = detail::best_reply(
        p, s, free, start, stop,
        [&](const Label& x) { return value(x).at(i); });
    if (reply.value > current.at(i)) {
      return Witness{start, i, reply.choices, current, value(reply.end),
                     "player " + show(i) + " gains by deviating"};
    }
  }
  return std::nullopt;
}

void require_domain(const Partition& part, const ValueFunction& v) {
  for (const auto& t : part.subroots()) v.at(t);
  for (const auto& [t, profile] : v.values) {
    if (!part.is_subroot(t)) {
      throw DomainError("value function names " + show(t) +
                        ", which is not a subroot");
    }
  }
}

}  // namespace

Verdict nash_check(const Game& g, const Strategy& s) {
  const Pentaform& p = g.form();
  auto w = find_deviation(
      g, s.choices, p.root(), {},
      [&](const Label& y) -> const Profile& { return g.utility(y); },
      [&](const Label& i) { return p.situations_of(i); });
  return w ? Verdict::fail(*w) : Verdict::pass();
}

Verdict spe_check_direct(const Game& g, const Strategy& s) {
  const Pentaform& p = g.form();
  for (const auto& t : g.partition().order()) {
    auto w = find_deviation(
        g, s.choices, t, {},
        [&](const Label& y) -> const Profile& { return g.utility(y); },
        [&](const Label& i) { return p.situations_of(i); });
    if (w) return Verdict::fail(*w);
  }
  return Verdict::pass();
}

Verdict admissible(const Game& g, const ValueFunction& v) {
  const Partition& part = g.partition();
  require_domain(part, v);
  for (const auto& t : part.order()) {
    const LabelSet below = descendants(g.form(), t);
    for (const auto& k : g.stakeholders()) {
      std::optional<XReal> lo, hi;
      for (const auto& y : below) {
        if (!g.form().is_endnode(y)) continue;
        const XReal& x = g.utility(y).at(k);
        if (!lo || x < *lo) lo = x;
        if (!hi || x > *hi) hi = x;
      }
      const XReal& value = v.at(t).at(k);
      if (value < *lo || value > *hi) {
        Witness w{t, k, {}, v.at(t), {}, {}};
        w.alternative = {{k, value < *lo ? *lo : *hi}};
        w.detail = "value " + value.str() + " of " + show(k) + " lies outside [" +
                   lo->str() + ", " + hi->str() + "]";
        return Verdict::fail(std::move(w));
      }
    }
  }
  return Verdict::pass();
}

Verdict persistent(const Game& g, const Strategy& s, const ValueFunction& v,
                   const Rational& tol) {
  const Partition& part = g.partition();
  require_domain(part, v);
  for (const auto& t : part.order()) {
    const Label end = piece_outcome(part, t, s.choices).last();
    const bool onward = part.is_subroot(end);
    const Profile& expected = onward ? v.at(end) : g.utility(end);
    if (!within(v.at(t), expected, tol)) {
      return Verdict::fail(
          {t, {}, {}, v.at(t), expected,
           onward ? "value differs from the value at the next subroot " +
                        show(end)
                  : "value differs from the utility at endnode " + show(end)});
    }
  }
  return Verdict::pass();
}

ValueFunction authentic_value(const Game& g, const Strategy& s) {
  ValueFunction v;
  for (const auto& t : g.partition().order()) {
    v.values.emplace(t, g.utility(follow(g.form(), s.choices, t).back()));
  }
  return v;
}

Verdict authentic(const Game& g, const Strategy& s, const ValueFunction& v,
                  const Rational& tol) {
  require_domain(g.partition(), v);
  const ValueFunction truth = authentic_value(g, s);
  for (const auto& t : g.partition().order()) {
    if (!within(v.at(t), truth.at(t), tol)) {
      return Verdict::fail({t, {}, {}, v.at(t), truth.at(t),
                            "value differs from the utility of following the "
                            "strategy from " +
                                show(t)});
    }
  }
  return Verdict::pass();
}

Verdict piecewise_nash(const Game& g, const Strategy& s,
                       const ValueFunction& v) {
  const Partition& part = g.partition();
  const Pentaform& p = g.form();
  for (const auto& t : part.order()) {
    auto w = find_deviation(
        g, s.choices, t, [&](const Label& x) { return part.ends_piece(t, x); },
        [&](const Label& x) -> const Profile& {
          return part.is_subroot(x) ? v.at(x) : g.utility(x);
        },
        [&](const Label& i) {
          LabelSet out;
          for (const auto& j : part.piece_situations(t)) {
            if (p.player_of(j) == i) out.insert(j);
          }
          return out;
        });
    if (w) return Verdict::fail(*w);
  }
  return Verdict::pass();
}

Verdict one_piece_unimprovable(const Game& g, const Strategy& s) {
  const Partition& part = g.partition();
  const Pentaform& p = g.form();
  for (const auto& t : part.order()) {
    auto w = find_deviation(
        g, s.choices, t, {},
        [&](const Label& y) -> const Profile& { return g.utility(y); },
        [&](const Label& i) {
          LabelSet out;
          for (const auto& j : part.piece_situations(t)) {
            if (p.player_of(j) == i) out.insert(j);
          }
          return out;
        });
    if (w) return Verdict::fail(*w);
  }
  return Verdict::pass();
}

std::variant<Solution, NoPureEquilibrium> solve_backward(const Game& g,
                                                         std::uint64_t cap) {
  const Partition& part = g.partition();
  const Pentaform& p = g.form();
  ValueFunction v;
  ChoiceMap chosen;
  const auto& order = part.order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Label& t = *it;
    const std::vector<Label> sits(part.piece_situations(t).begin(),
                                  part.piece_situations(t).end());
    std::uint64_t total = 1;
    for (const auto& j : sits) {
      total *= p.action_set(j).size();
      if (total > cap) {
        throw ResourceError("piece at " + show(t) + " has more than " +
                            std::to_string(cap) + " strategy profiles");
      }
    }
    auto stop = [&](const Label& x) { return part.ends_piece(t, x); };
    auto value = [&](const Label& x) -> const Profile& {
      return part.is_subroot(x) ? v.at(x) : g.utility(x);
    };
    std::vector<std::size_t> digit(sits.size(), 0);
    bool found = false;
    for (std::uint64_t n = 0; n < total && !found; ++n) {
      ChoiceMap trial = chosen;
      for (std::size_t k = 0; k < sits.size(); ++k) {
        trial[sits[k]] = p.action_set(sits[k])[digit[k]];
      }
      auto w = find_deviation(g, trial, t, stop, value, [&](const Label& i) {
        LabelSet out;
        for (const auto& j : sits) {
          if (p.player_of(j) == i) out.insert(j);
        }
        return out;
      });
      if (!w) {
        found = true;
        chosen = std::move(trial);
        v.values[t] = value(follow(p, chosen, t, stop).back());
        break;
      }
      // Odometer with the first situation most significant.
      for (std::size_t k = sits.size(); k-- > 0;) {
        if (++digit[k] < p.action_set(sits[k]).size()) break;
        digit[k] = 0;
      }
    }
    if (!found) return NoPureEquilibrium{t};
  }
  return Solution{Strategy{chosen}, v};
}

Game random_game(std::uint64_t seed, const RandomGameOptions& options) {
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  const std::size_t max_nodes = std::max<std::size_t>(options.max_nodes, 2);

  // Grow an out-tree by expanding random leaves.
  std::vector<std::vector<std::size_t>> kids(1);
  std::vector<std::size_t> leaves{0};
  while (kids.size() < max_nodes) {
    const std::size_t room = max_nodes - kids.size();
    const std::size_t at = pick(0, leaves.size() - 1);
    const std::size_t leaf = leaves[at];
    const std::size_t degree = std::min<std::size_t>(pick(1, 3), room);
    leaves.erase(leaves.begin() + static_cast<std::ptrdiff_t>(at));
    for (std::size_t d = 0; d < degree; ++d) {
      kids[leaf].push_back(kids.size());
      leaves.push_back(kids.size());
      kids.emplace_back();
    }
    if (kids.size() > 2 && pick(0, 3) == 0) break;
  }
  auto name = [](std::size_t n) { return "n" + std::to_string(n); };

  // Group decision nodes of equal out-degree into situations.
  std::map<std::size_t, std::vector<std::size_t>> by_degree;
  for (std::size_t n = 0; n < kids.size(); ++n) {
    if (!kids[n].empty()) by_degree[kids[n].size()].push_back(n);
  }
  const std::size_t players = pick(1, std::max<std::size_t>(options.max_players, 1));
  QuintupleSet q;
  std::size_t situation_count = 0;
  for (auto& [degree, nodes] : by_degree) {
    std::shuffle(nodes.begin(), nodes.end(), rng);
    std::size_t k = 0;
    while (k < nodes.size()) {
      const std::size_t size = std::min(
          nodes.size() - k, pick(1, std::max<std::size_t>(options.max_info_set, 1)));
      const Label j = "j" + std::to_string(situation_count++);
      const Label i = "P" + std::to_string(pick(0, players - 1));
      for (std::size_t m = k; m < k + size; ++m) {
        const std::size_t w = nodes[m];
        for (std::size_t d = 0; d < degree; ++d) {
          q.insert({i, j, name(w), "a" + std::to_string(d), name(kids[w][d])});
        }
      }
      k += size;
    }
  }
  Pentaform form = make_pentaform(std::move(q));
  LabelSet stakeholders = form.players();
  if (pick(0, 3) == 0) stakeholders.insert("B");
  std::map<Label, Profile> utilities;
  for (const auto& y : form.endnodes()) {
    Profile profile;
    for (const auto& k : stakeholders) {
      Rational x;
      switch (pick(0, 3)) {
        case 0:
          x = Rational(static_cast<long long>(pick(0, 40)) - 20, 2);
          break;
        case 1:
          x = static_cast<long long>(pick(0, 20)) - 10;
          break;
        default:
          x = static_cast<long long>(pick(0, 4)) - 2;
          break;
      }
      profile.emplace(k, XReal(x));
    }
    utilities.emplace(y, std::move(profile));
  }
  return Game(std::move(form), std::move(stakeholders), std::move(utilities));
}

}  // namespace pentaform
