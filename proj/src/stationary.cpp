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

#include "pentaform/stationary.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "pentaform/detail/classes.hpp"
#include "pentaform/detail/play.hpp"
#include "pentaform/errors.hpp"
#include "pentaform/partition.hpp"

namespace pentaform {

PieceClass::PieceClass(std::vector<Quintuple> declared,
                       std::map<Label, Exit> exits)
    : declared_(std::move(declared)),
      form_(make_pentaform(QuintupleSet(declared_.begin(), declared_.end()))),
      exits_(std::move(exits)) {
  if (form_.root() != "") {
    throw DomainError("template root must be \"\", not " + show(form_.root()));
  }
  // A template with an internal subroot would be several pieces, and the
  // per-class checks would miss the subgames inside it.
  for (const auto& t : subroots(form_)) {
    if (!t.empty()) {
      throw DomainError("template node " + show(t) +
                        " is a subroot; a piece class must be a single piece");
    }
  }
  for (const auto& y : form_.endnodes()) {
    if (!exits_.contains(y)) {
      throw DomainError("template endnode " + show(y) + " has no exit rule");
    }
  }
  for (const auto& [y, e] : exits_) {
    if (!form_.is_endnode(y)) {
      throw DomainError("exit rule for " + show(y) +
                        ", which is not a template endnode");
    }
  }
  for (const auto& x : declared_) {
    auto& acts = action_order_[x.situation];
    if (acts.empty()) situation_order_.push_back(x.situation);
    if (std::find(acts.begin(), acts.end(), x.action) == acts.end()) {
      acts.push_back(x.action);
    }
  }
}

const Exit& PieceClass::exit(const Label& endnode) const {
  auto it = exits_.find(endnode);
  if (it == exits_.end()) {
    throw DomainError(show(endnode) + " is not a template endnode");
  }
  return it->second;
}

const std::vector<Label>& PieceClass::action_order(const Label& j) const {
  auto it = action_order_.find(j);
  if (it == action_order_.end()) {
    throw DomainError("unknown template situation " + show(j));
  }
  return it->second;
}

namespace {

void require_total(const Profile& p, const LabelSet& k, const std::string& where) {
  for (const auto& s : k) {
    if (!p.contains(s)) {
      throw DomainError(where + " lacks stakeholder " + show(s));
    }
  }
  if (p.size() != k.size()) {
    throw DomainError(where + " names a non-stakeholder");
  }
}

}  // namespace

StationarySystem::StationarySystem(std::map<Label, PieceClass> classes,
                                   Label initial, LabelSet stakeholders,
                                   UtilityModel model)
    : classes_(std::move(classes)),
      initial_(std::move(initial)),
      stakeholders_(std::move(stakeholders)),
      model_(std::move(model)) {
  if (!classes_.contains(initial_)) {
    throw DomainError("initial class " + show(initial_) + " is not defined");
  }
  const bool disc = discounted();
  if (disc) {
    const Rational& b = std::get<DiscountedModel>(model_).beta;
    if (b < 0 || b >= 1) throw DomainError("discount factor must lie in [0, 1)");
  }
  for (auto& [name, pc] : classes_) {
    for (const auto& i : pc.form().players()) {
      if (!stakeholders_.contains(i)) {
        throw DomainError("player " + show(i) + " of class " + show(name) +
                          " is not a stakeholder");
      }
    }
    std::vector<Label> continues;
    for (const auto& [y, e] : pc.exits()) {
      const std::string where = "reward at " + show(name) + "/" + show(y);
      require_total(e.reward, stakeholders_, where);
      if (e.kind == Exit::Kind::kContinue) {
        if (!classes_.contains(e.next_class)) {
          throw DomainError(where + " continues to unknown class " +
                            show(e.next_class));
        }
        continues.push_back(y);
        if (!disc) {
          for (const auto& [k, x] : e.reward) {
            if (x != XReal(0)) {
              throw DomainError(where + ": continue rewards must be 0 "
                                        "under the absolute-terminal model");
            }
          }
        }
      }
      if (disc) {
        for (const auto& [k, x] : e.reward) {
          if (!x.is_finite()) {
            throw DomainError(where + " is infinite under discounting");
          }
        }
      }
    }
    for (const auto& a : continues) {
      for (const auto& b : continues) {
        if (a != b && b.compare(0, a.size(), a) == 0) {
          throw DomainError("continue exits " + show(a) + " and " + show(b) +
                            " of class " + show(name) +
                            " are prefixes of each other");
        }
      }
    }
  }
  if (!disc) {
    const auto& m = std::get<AbsoluteModel>(model_);
    if (m.infinite_run_utility) {
      require_total(*m.infinite_run_utility, stakeholders_,
                    "infinite-run utility");
    }
    for (const auto& cu : m.cycle_utilities) {
      if (cu.cycle.empty()) throw DomainError("empty cycle");
      for (const auto& c : cu.cycle) {
        if (!classes_.contains(c)) {
          throw DomainError("cycle names unknown class " + show(c));
        }
      }
      require_total(cu.utility, stakeholders_, "cycle utility");
    }
  }
  LabelSet seen{initial_};
  std::deque<Label> todo{initial_};
  while (!todo.empty()) {
    const Label c = todo.front();
    todo.pop_front();
    for (const auto& [y, e] : classes_.at(c).exits()) {
      if (e.kind == Exit::Kind::kContinue && seen.insert(e.next_class).second) {
        todo.push_back(e.next_class);
      }
    }
  }
  for (const auto& [name, pc] : classes_) {
    if (!seen.contains(name)) {
      throw DomainError("class " + show(name) + " is unreachable");
    }
  }
}

const PieceClass& StationarySystem::piece_class(const Label& c) const {
  auto it = classes_.find(c);
  if (it == classes_.end()) throw DomainError("unknown class " + show(c));
  return it->second;
}

Rational StationarySystem::beta() const {
  if (auto* m = std::get_if<DiscountedModel>(&model_)) return m->beta;
  return 1;
}

namespace detail {

LabelSet class_successors(const StationarySystem& sys, const Label& c) {
  LabelSet out;
  for (const auto& [y, e] : sys.piece_class(c).exits()) {
    if (e.kind == Exit::Kind::kContinue) out.insert(e.next_class);
  }
  return out;
}

std::map<Label, LabelSet> class_reachability(const StationarySystem& sys) {
  std::map<Label, LabelSet> out;
  for (const auto& [c, pc] : sys.classes()) {
    LabelSet& seen = out[c];
    std::deque<Label> todo{c};
    while (!todo.empty()) {
      const Label d = todo.front();
      todo.pop_front();
      for (const auto& n : class_successors(sys, d)) {
        if (seen.insert(n).second) todo.push_back(n);
      }
    }
  }
  return out;
}

bool is_rotation(const std::vector<Label>& a, const std::vector<Label>& b) {
  if (a.size() != b.size() || a.empty()) return false;
  for (std::size_t shift = 0; shift < a.size(); ++shift) {
    bool same = true;
    for (std::size_t i = 0; i < a.size() && same; ++i) {
      same = a[i] == b[(i + shift) % b.size()];
    }
    if (same) return true;
  }
  return false;
}

std::optional<Profile> declared_cycle_utility(const StationarySystem& sys,
                                              const std::vector<Label>& cycle) {
  const auto& m = std::get<AbsoluteModel>(sys.model());
  for (const auto& cu : m.cycle_utilities) {
    if (is_rotation(cu.cycle, cycle)) return cu.utility;
  }
  return m.infinite_run_utility;
}

namespace {

// Simple cycles inside one strongly connected set, each listed from its
// smallest class.
std::vector<std::vector<Label>> simple_cycles(const StationarySystem& sys,
                                              const LabelSet& scc) {
  std::vector<std::vector<Label>> out;
  for (const auto& start : scc) {
    std::vector<Label> path{start};
    LabelSet on_path{start};
    std::function<void(const Label&)> dfs = [&](const Label& c) {
      for (const auto& d : class_successors(sys, c)) {
        if (!scc.contains(d) || d < start) continue;
        if (d == start) {
          out.push_back(path);
        } else if (!on_path.contains(d)) {
          path.push_back(d);
          on_path.insert(d);
          dfs(d);
          on_path.erase(d);
          path.pop_back();
        }
      }
    };
    dfs(start);
  }
  return out;
}

}  // namespace

std::vector<Recurrent> recurrent_sets(const StationarySystem& sys) {
  const auto reach = class_reachability(sys);
  std::vector<Recurrent> out;
  LabelSet done;
  for (const auto& [c, pc] : sys.classes()) {
    if (done.contains(c) || !reach.at(c).contains(c)) continue;
    Recurrent r;
    for (const auto& d : reach.at(c)) {
      if (reach.at(d).contains(c)) r.classes.insert(d);
    }
    done.insert(r.classes.begin(), r.classes.end());
    const auto cycles = simple_cycles(sys, r.classes);
    for (const auto& cyc : cycles) {
      r.runs.emplace_back(cyc, declared_cycle_utility(sys, cyc));
    }
    if (cycles.size() > 1) {
      r.runs.emplace_back(
          std::vector<Label>{},
          std::get<AbsoluteModel>(sys.model()).infinite_run_utility);
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace detail

StationaryStrategy validate_stationary_strategy(
    const StationarySystem& sys, std::map<Label, ChoiceMap> choices) {
  for (const auto& [c, ch] : choices) sys.piece_class(c);
  for (const auto& [c, pc] : sys.classes()) {
    auto it = choices.find(c);
    if (it == choices.end()) {
      throw DomainError("stationary strategy has no choices for class " +
                        show(c));
    }
    try {
      validate_strategy(pc.form(), it->second);
    } catch (const DomainError& e) {
      throw DomainError("class " + show(c) + ": " + e.what());
    }
  }
  return StationaryStrategy{std::move(choices)};
}

Label class_exit(const StationarySystem& sys, const StationaryStrategy& sigma,
                 const Label& c) {
  const PieceClass& pc = sys.piece_class(c);
  return follow(pc.form(), sigma.choices.at(c), pc.form().root()).back();
}

Profile quotient_utility(const StationarySystem& sys, const Label& c,
                         const Label& e, const ClassValues& w) {
  const Exit& ex = sys.piece_class(c).exit(e);
  if (ex.kind == Exit::Kind::kTerminal) return ex.reward;
  auto it = w.find(ex.next_class);
  if (it == w.end()) {
    throw DomainError("no value for class " + show(ex.next_class));
  }
  if (!sys.discounted()) return it->second;
  return ex.reward + scaled(it->second, sys.beta());
}

namespace {

std::string show_cycle(const std::vector<Label>& cycle) {
  return "(" + join(cycle, " -> ") + ")";
}

// Solves x_c = r_c + beta * x_next(c) on a functional graph over classes, or
// under the absolute model x_c = x_next(c) with cycles priced by
// `on_cycle`. next(c) empty means the chain stops with x_c = r_c.
template <typename Value, typename Add, typename Scale, typename OnCycle>
std::map<Label, Value> solve_chains(const std::vector<Label>& nodes,
                                    const std::map<Label, Label>& next,
                                    const std::map<Label, Value>& reward,
                                    const Rational& beta, bool discounted,
                                    Add add, Scale scale, OnCycle on_cycle) {
  std::map<Label, Value> out;
  for (const auto& start : nodes) {
    if (out.contains(start)) continue;
    std::vector<Label> path;
    std::map<Label, std::size_t> pos;
    Label cur = start;
    std::optional<std::size_t> cycle_at;
    bool terminal = false;
    while (!out.contains(cur)) {
      if (auto it = pos.find(cur); it != pos.end()) {
        cycle_at = it->second;
        break;
      }
      pos[cur] = path.size();
      path.push_back(cur);
      auto nx = next.find(cur);
      if (nx == next.end()) {
        terminal = true;
        break;
      }
      cur = nx->second;
    }
    std::size_t tail_end = path.size();
    if (terminal) {
      out.emplace(path.back(), reward.at(path.back()));
      --tail_end;
    } else if (cycle_at) {
      const std::vector<Label> cycle(path.begin() + *cycle_at, path.end());
      if (discounted) {
        // x_1 = S + beta^n x_1 with S the discounted reward sum round the loop.
        Value sum = reward.at(cycle.back());
        for (std::size_t i = cycle.size() - 1; i-- > 0;) {
          sum = add(reward.at(cycle[i]), scale(sum, beta));
        }
        Rational bn = 1;
        for (std::size_t i = 0; i < cycle.size(); ++i) bn *= beta;
        Value first = scale(sum, Rational(1 / (1 - bn)));
        out.emplace(cycle.front(), first);
        Value later = first;
        for (std::size_t i = cycle.size(); i-- > 1;) {
          later = add(reward.at(cycle[i]), scale(later, beta));
          out.emplace(cycle[i], later);
        }
      } else {
        Value v = on_cycle(cycle);
        for (const auto& c : cycle) out.emplace(c, v);
      }
      tail_end = *cycle_at;
    }
    for (std::size_t i = tail_end; i-- > 0;) {
      const Label& c = path[i];
      const Value& after = out.at(next.at(c));
      out.emplace(c, discounted ? add(reward.at(c), scale(after, beta)) : after);
    }
  }
  return out;
}

}  // namespace

ClassValues continuation_values(const StationarySystem& sys,
                                const StationaryStrategy& sigma) {
  std::vector<Label> nodes;
  std::map<Label, Label> next;
  std::map<Label, Profile> reward;
  for (const auto& [c, pc] : sys.classes()) {
    nodes.push_back(c);
    const Exit& ex = pc.exit(class_exit(sys, sigma, c));
    reward[c] = ex.reward;
    if (ex.kind == Exit::Kind::kContinue) next[c] = ex.next_class;
  }
  return solve_chains<Profile>(
      nodes, next, reward, sys.beta(), sys.discounted(),
      [](const Profile& a, const Profile& b) { return a + b; },
      [](const Profile& a, const Rational& f) { return scaled(a, f); },
      [&](const std::vector<Label>& cycle) {
        auto u = detail::declared_cycle_utility(sys, cycle);
        if (!u) {
          throw ModelError("no infinite-run utility declared for the cycle " +
                           show_cycle(cycle));
        }
        return *u;
      });
}

SubrootPath parse_subroot(const StationarySystem& sys, const Label& t) {
  SubrootPath path;
  path.classes.push_back(sys.initial());
  path.accrued = zero_profile(sys.stakeholders());
  std::size_t pos = 0;
  while (pos < t.size()) {
    const PieceClass& pc = sys.piece_class(path.classes.back());
    const Exit* taken = nullptr;
    Label label;
    for (const auto& [y, e] : pc.exits()) {
      if (e.kind == Exit::Kind::kContinue && t.compare(pos, y.size(), y) == 0) {
        taken = &e;
        label = y;
        break;
      }
    }
    if (!taken) {
      throw DomainError(show(t) + " is not a subroot label: no continue exit "
                        "of class " + show(path.classes.back()) +
                        " matches at position " + std::to_string(pos));
    }
    if (sys.discounted()) {
      path.accrued = path.accrued + scaled(taken->reward, path.factor);
      path.factor *= sys.beta();
    }
    path.exits.push_back(label);
    path.classes.push_back(taken->next_class);
    pos += label.size();
  }
  return path;
}

Profile value_at(const StationarySystem& sys, const ClassValues& w,
                 const Label& t) {
  const SubrootPath path = parse_subroot(sys, t);
  const Profile& wc = w.at(path.classes.back());
  if (!sys.discounted()) return wc;
  return path.accrued + scaled(wc, path.factor);
}

Profile value_at(const StationarySystem& sys, const StationaryStrategy& sigma,
                 const Label& t) {
  return value_at(sys, continuation_values(sys, sigma), t);
}

namespace {

// max (or min) of u_k over continuations from each class.
std::map<Label, XReal> optimal_values(const StationarySystem& sys,
                                      const Label& k, bool maximize) {
  auto better = [&](const XReal& a, const XReal& b) {
    return maximize ? a > b : a < b;
  };
  std::map<Label, XReal> out;
  if (!sys.discounted()) {
    const auto reach = detail::class_reachability(sys);
    const auto recurrent = detail::recurrent_sets(sys);
    for (const auto& [c, pc] : sys.classes()) {
      LabelSet from = reach.at(c);
      from.insert(c);
      std::optional<XReal> best;
      auto offer = [&](const XReal& x) {
        if (!best || better(x, *best)) best = x;
      };
      for (const auto& d : from) {
        for (const auto& [y, e] : sys.piece_class(d).exits()) {
          if (e.kind == Exit::Kind::kTerminal) offer(e.reward.at(k));
        }
      }
      for (const auto& r : recurrent) {
        if (!from.contains(*r.classes.begin())) continue;
        for (const auto& [cycle, u] : r.runs) {
          if (!u) {
            throw ModelError(
                "no infinite-run utility declared for " +
                (cycle.empty() ? std::string("runs mixing the cycles through ") +
                                     show(r.classes)
                               : "the cycle " + show_cycle(cycle)));
          }
          offer(u->at(k));
        }
      }
      out.emplace(c, *best);
    }
    return out;
  }
  // Policy iteration over each class's exit, in exact arithmetic.
  std::vector<Label> nodes;
  std::map<Label, Label> policy;
  for (const auto& [c, pc] : sys.classes()) {
    nodes.push_back(c);
    policy[c] = pc.exits().begin()->first;
  }
  const Rational beta = sys.beta();
  auto q_value = [&](const Label& c, const Label& y,
                     const std::map<Label, Rational>& v) {
    const Exit& e = sys.piece_class(c).exit(y);
    Rational r = e.reward.at(k).finite();
    if (e.kind == Exit::Kind::kContinue) r += beta * v.at(e.next_class);
    return r;
  };
  while (true) {
    std::map<Label, Label> next;
    std::map<Label, Rational> reward;
    for (const auto& c : nodes) {
      const Exit& e = sys.piece_class(c).exit(policy[c]);
      reward[c] = e.reward.at(k).finite();
      if (e.kind == Exit::Kind::kContinue) next[c] = e.next_class;
    }
    auto v = solve_chains<Rational>(
        nodes, next, reward, beta, true,
        [](const Rational& a, const Rational& b) { return Rational(a + b); },
        [](const Rational& a, const Rational& f) { return Rational(a * f); },
        [](const std::vector<Label>&) -> Rational { return 0; });
    bool changed = false;
    for (const auto& c : nodes) {
      Rational current = q_value(c, policy[c], v);
      for (const auto& [y, e] : sys.piece_class(c).exits()) {
        Rational q = q_value(c, y, v);
        if (maximize ? q > current : q < current) {
          policy[c] = y;
          current = q;
          changed = true;
        }
      }
    }
    if (!changed) {
      for (const auto& c : nodes) out.emplace(c, XReal(v.at(c)));
      return out;
    }
  }
}

}  // namespace

Interval conceivable_bounds(const StationarySystem& sys, const Label& c,
                            const Label& k) {
  sys.piece_class(c);
  if (!sys.stakeholders().contains(k)) {
    throw DomainError("unknown stakeholder " + show(k));
  }
  return {optimal_values(sys, k, false).at(c), optimal_values(sys, k, true).at(c)};
}

namespace {

std::map<Label, Interval> all_bounds(const StationarySystem& sys,
                                     const Label& k) {
  auto lo = optimal_values(sys, k, false);
  auto hi = optimal_values(sys, k, true);
  std::map<Label, Interval> out;
  for (const auto& [c, x] : lo) out.emplace(c, Interval{x, hi.at(c)});
  return out;
}

void require_class_domain(const StationarySystem& sys, const ClassValues& v) {
  for (const auto& [c, pc] : sys.classes()) {
    auto it = v.find(c);
    if (it == v.end()) throw DomainError("no value for class " + show(c));
    require_total(it->second, sys.stakeholders(), "value of class " + show(c));
  }
  for (const auto& [c, p] : v) sys.piece_class(c);
}

std::optional<Witness> quotient_deviation(const StationarySystem& sys,
                                          const Label& c,
                                          const ChoiceMap& choices,
                                          const ClassValues& w) {
  const PieceClass& pc = sys.piece_class(c);
  const Pentaform& form = pc.form();
  std::map<Label, Profile> payoff;
  for (const auto& y : form.endnodes()) {
    payoff.emplace(y, quotient_utility(sys, c, y, w));
  }
  const Label end = follow(form, choices, form.root()).back();
  const Profile& current = payoff.at(end);
  for (const auto& i : form.players()) {
    auto reply = detail::best_reply(
        form, choices, form.situations_of(i), form.root(), {},
        [&](const Label& x) { return payoff.at(x).at(i); });
    if (reply.value > current.at(i)) {
      return Witness{"class " + c, i, reply.choices, current,
                     payoff.at(reply.end),
                     "player " + show(i) + " gains by deviating in the piece"};
    }
  }
  return std::nullopt;
}

}  // namespace

Verdict stationary_admissible(const StationarySystem& sys,
                              const ClassValues& v) {
  require_class_domain(sys, v);
  for (const auto& k : sys.stakeholders()) {
    const auto bounds = all_bounds(sys, k);
    for (const auto& [c, b] : bounds) {
      const XReal& x = v.at(c).at(k);
      if (x < b.lo || x > b.hi) {
        return Verdict::fail(
            {"class " + c, k, {}, v.at(c), {{k, x < b.lo ? b.lo : b.hi}},
             "value " + x.str() + " of " + show(k) + " lies outside [" +
                 b.lo.str() + ", " + b.hi.str() + "]"});
      }
    }
  }
  return Verdict::pass();
}

Verdict stationary_persistent(const StationarySystem& sys,
                              const StationaryStrategy& sigma,
                              const ClassValues& v) {
  require_class_domain(sys, v);
  for (const auto& [c, pc] : sys.classes()) {
    const Label e = class_exit(sys, sigma, c);
    const Profile expected = quotient_utility(sys, c, e, v);
    if (v.at(c) != expected) {
      return Verdict::fail({"class " + c, {}, {}, v.at(c), expected,
                            "value differs from what the strategy's exit " +
                                show(e) + " carries"});
    }
  }
  return Verdict::pass();
}

Verdict stationary_authentic(const StationarySystem& sys,
                             const StationaryStrategy& sigma,
                             const ClassValues& v) {
  require_class_domain(sys, v);
  const ClassValues truth = continuation_values(sys, sigma);
  for (const auto& [c, pc] : sys.classes()) {
    if (v.at(c) != truth.at(c)) {
      return Verdict::fail({"class " + c, {}, {}, v.at(c), truth.at(c),
                            "value differs from the utility of following the "
                            "strategy"});
    }
  }
  return Verdict::pass();
}

Verdict stationary_piecewise_nash(const StationarySystem& sys,
                                  const StationaryStrategy& sigma,
                                  const ClassValues& v) {
  require_class_domain(sys, v);
  for (const auto& [c, pc] : sys.classes()) {
    if (auto w = quotient_deviation(sys, c, sigma.choices.at(c), v)) {
      return Verdict::fail(*w);
    }
  }
  return Verdict::pass();
}

Verdict stationary_deviation_scan(const StationarySystem& sys,
                                  const StationaryStrategy& sigma,
                                  std::uint64_t cap) {
  const ClassValues base = continuation_values(sys, sigma);
  LabelSet players;
  for (const auto& [c, pc] : sys.classes()) {
    players.insert(pc.form().players().begin(), pc.form().players().end());
  }
  for (const auto& i : players) {
    std::vector<std::pair<Label, Label>> slots;  // (class, situation)
    std::uint64_t total = 1;
    for (const auto& [c, pc] : sys.classes()) {
      for (const auto& j : pc.situation_order()) {
        if (pc.form().player_of(j) != i) continue;
        slots.emplace_back(c, j);
        total *= pc.action_order(j).size();
        if (total > cap) {
          throw ResourceError("player " + show(i) + " has more than " +
                              std::to_string(cap) + " stationary strategies");
        }
      }
    }
    std::vector<std::size_t> digit(slots.size(), 0);
    for (std::uint64_t n = 0; n < total; ++n) {
      StationaryStrategy alt = sigma;
      ChoiceMap changed;
      for (std::size_t s = 0; s < slots.size(); ++s) {
        const auto& [c, j] = slots[s];
        const Label& a = sys.piece_class(c).action_order(j)[digit[s]];
        alt.choices[c][j] = a;
        if (sigma.choices.at(c).at(j) != a) changed[c + ":" + j] = a;
      }
      for (std::size_t s = slots.size(); s-- > 0;) {
        if (++digit[s] < sys.piece_class(slots[s].first)
                             .action_order(slots[s].second)
                             .size()) {
          break;
        }
        digit[s] = 0;
      }
      if (changed.empty()) continue;
      ClassValues w;
      try {
        w = continuation_values(sys, alt);
      } catch (const ModelError&) {
        continue;
      }
      for (const auto& [c, pc] : sys.classes()) {
        if (w.at(c).at(i) > base.at(c).at(i)) {
          return Verdict::fail(
              {"class " + c, i, changed, base.at(c), w.at(c),
               "player " + show(i) +
                   " gains by switching to another stationary strategy"});
        }
      }
    }
  }
  return Verdict::pass();
}

std::string_view kind_name(Certificate::Kind kind) {
  switch (kind) {
    case Certificate::Kind::kSPECertified: return "SPECertified";
    case Certificate::Kind::kRefuted: return "Refuted";
    case Certificate::Kind::kInconclusive: return "Inconclusive";
  }
  return "?";
}

Certificate certify_spe(const StationarySystem& sys,
                        const StationaryStrategy& sigma, std::size_t depth) {
  Certificate cert;
  cert.upper = upper_convergent(sys, depth);
  cert.lower = lower_convergent(sys, depth);
  try {
    cert.continuation = continuation_values(sys, sigma);
  } catch (const ModelError& e) {
    cert.kind = Certificate::Kind::kInconclusive;
    cert.reason = e.what();
    return cert;
  }
  cert.piecewise = stationary_piecewise_nash(sys, sigma, cert.continuation);
  if (!cert.piecewise.holds) {
    cert.kind = Certificate::Kind::kRefuted;
    cert.failing_property = "piecewise-nash";
    cert.witness = cert.piecewise.witness;
    cert.reason =
        "a subgame-perfect strategy is piecewise-Nash for its authentic value "
        "function, and this one is not";
    return cert;
  }
  Verdict scan = stationary_deviation_scan(sys, sigma);
  if (!scan.holds) {
    cert.kind = Certificate::Kind::kRefuted;
    cert.failing_property = "spe";
    cert.witness = scan.witness;
    cert.reason = "a stationary deviation is strictly better in some subgame";
    return cert;
  }
  switch (cert.lower.status) {
    case ConvergenceVerdict::Status::kHolds:
      cert.kind = Certificate::Kind::kSPECertified;
      cert.reason =
          "lower-convergent, with the authentic value function "
          "piecewise-Nash in every piece class";
      break;
    case ConvergenceVerdict::Status::kFails:
      cert.kind = Certificate::Kind::kInconclusive;
      cert.reason =
          "lower-convergence fails, so piecewise-Nashness does not certify "
          "subgame perfection";
      break;
    case ConvergenceVerdict::Status::kUnknown:
      cert.kind = Certificate::Kind::kInconclusive;
      cert.reason = "lower-convergence is undecided: " + cert.lower.certificate;
      break;
  }
  return cert;
}

namespace {

Rational sup_distance(const ClassValues& a, const ClassValues& b) {
  Rational out = 0;
  for (const auto& [c, p] : a) {
    for (const auto& [k, x] : p) {
      Rational d = x.finite() - b.at(c).at(k).finite();
      if (d < 0) d = -d;
      if (d > out) out = d;
    }
  }
  return out;
}

// First pure Nash equilibrium of class c's quotient game in declaration
// order.
std::optional<ChoiceMap> first_equilibrium(const StationarySystem& sys,
                                           const Label& c,
                                           const ClassValues& w,
                                           std::uint64_t cap) {
  const PieceClass& pc = sys.piece_class(c);
  const auto& sits = pc.situation_order();
  std::uint64_t total = 1;
  for (const auto& j : sits) {
    total *= pc.action_order(j).size();
    if (total > cap) {
      throw ResourceError("class " + show(c) + " has more than " +
                          std::to_string(cap) + " strategy profiles");
    }
  }
  std::vector<std::size_t> digit(sits.size(), 0);
  for (std::uint64_t n = 0; n < total; ++n) {
    ChoiceMap trial;
    for (std::size_t s = 0; s < sits.size(); ++s) {
      trial[sits[s]] = pc.action_order(sits[s])[digit[s]];
    }
    if (!quotient_deviation(sys, c, trial, w)) return trial;
    for (std::size_t s = sits.size(); s-- > 0;) {
      if (++digit[s] < pc.action_order(sits[s]).size()) break;
      digit[s] = 0;
    }
  }
  return std::nullopt;
}

}  // namespace

std::variant<StationarySolution, StationaryFailure> solve_stationary(
    const StationarySystem& sys, const SolveOptions& options) {
  if (!sys.discounted()) {
    throw DomainError("solve_stationary needs a discounted system");
  }
  ClassValues w;
  for (const auto& [c, pc] : sys.classes()) {
    w[c] = zero_profile(sys.stakeholders());
  }
  StationaryStrategy sigma;
  for (std::size_t it = 1; it <= options.max_iterations; ++it) {
    StationaryStrategy next;
    ClassValues next_w;
    for (const auto& [c, pc] : sys.classes()) {
      auto eq = first_equilibrium(sys, c, w, options.cap);
      if (!eq) {
        return StationaryFailure{StationaryFailure::Kind::kNoPureEquilibrium, c,
                                 "the quotient piece game of class " + show(c) +
                                     " has no pure Nash equilibrium"};
      }
      next.choices[c] = *eq;
      const Label e = follow(pc.form(), *eq, pc.form().root()).back();
      next_w[c] = quotient_utility(sys, c, e, w);
    }
    const bool stable = next == sigma;
    const bool close = sup_distance(next_w, w) < options.tol;
    sigma = std::move(next);
    w = std::move(next_w);
    if (stable && close) {
      ClassValues exact = continuation_values(sys, sigma);
      if (stationary_piecewise_nash(sys, sigma, exact).holds) {
        return StationarySolution{sigma, exact, it};
      }
      w = std::move(exact);
    }
  }
  return StationaryFailure{StationaryFailure::Kind::kNoConvergence, sys.initial(),
                           "no stable strategy after " +
                               std::to_string(options.max_iterations) +
                               " iterations"};
}

namespace {

Label translate_situation(const Label& t, const Label& j) {
  std::vector<Label> parts = split(j, '+');
  for (auto& part : parts) part = t + part;
  return join(parts, "+");
}

}  // namespace

Instantiation instantiate(const StationarySystem& sys, std::size_t d,
                          InstantiateMode mode, const BoundaryPricing& pricing) {
  if (d < 1) throw DomainError("instantiation depth must be at least 1");
  const bool bounded = mode == InstantiateMode::kBounded;
  const bool disc = sys.discounted();
  const Rational beta = sys.beta();

  std::map<Label, std::map<Label, Interval>> bounds;  // stakeholder -> class
  auto bounds_for = [&](const Label& k) -> const std::map<Label, Interval>* {
    if (!bounds.contains(k)) {
      try {
        bounds[k] = all_bounds(sys, k);
      } catch (const ModelError&) {
        if (pricing.kind != BoundaryPricing::Kind::kContinuation) throw;
        return nullptr;
      }
    }
    return &bounds.at(k);
  };

  struct Pending {
    Label t;
    Label c;
    std::size_t hops;
    Profile accrued;
    Rational factor;
  };
  std::deque<Pending> todo{
      {"", sys.initial(), 0, zero_profile(sys.stakeholders()), 1}};
  QuintupleSet q;
  std::map<Label, Label> class_of;
  std::map<Label, std::pair<Profile, Profile>> boundary;
  std::map<Label, Profile> utilities;
  while (!todo.empty()) {
    Pending cur = std::move(todo.front());
    todo.pop_front();
    class_of[cur.t] = cur.c;
    const PieceClass& pc = sys.piece_class(cur.c);
    for (const auto& x : pc.declared()) {
      q.insert({x.player, translate_situation(cur.t, x.situation),
                cur.t + x.node, x.action, cur.t + x.successor});
    }
    for (const auto& [y, e] : pc.exits()) {
      const Label node = cur.t + y;
      if (e.kind == Exit::Kind::kContinue && cur.hops < d) {
        Profile accrued = cur.accrued;
        if (disc) accrued = accrued + scaled(e.reward, cur.factor);
        todo.push_back({node, e.next_class, cur.hops + 1, std::move(accrued),
                        disc ? Rational(cur.factor * beta) : Rational(1)});
        continue;
      }
      if (!bounded) continue;
      if (e.kind == Exit::Kind::kTerminal) {
        utilities[node] = disc ? cur.accrued + scaled(e.reward, cur.factor)
                               : e.reward;
        continue;
      }
      auto price = [&](const Profile& later) {
        return disc ? cur.accrued +
                          scaled(e.reward + scaled(later, beta), cur.factor)
                    : later;
      };
      Profile lo, hi;
      bool have_interval = true;
      for (const auto& k : sys.stakeholders()) {
        const auto* b = bounds_for(k);
        if (!b) {
          have_interval = false;
          break;
        }
        lo[k] = b->at(e.next_class).lo;
        hi[k] = b->at(e.next_class).hi;
      }
      Profile chosen;
      switch (pricing.kind) {
        case BoundaryPricing::Kind::kLower: chosen = lo; break;
        case BoundaryPricing::Kind::kUpper: chosen = hi; break;
        case BoundaryPricing::Kind::kContinuation: {
          auto it = pricing.values.find(e.next_class);
          if (it == pricing.values.end()) {
            throw DomainError("boundary pricing has no value for class " +
                              show(e.next_class));
          }
          chosen = it->second;
          break;
        }
      }
      utilities[node] = price(chosen);
      if (have_interval) boundary[node] = {price(lo), price(hi)};
    }
  }
  Instantiation inst{make_pentaform(std::move(q)), std::nullopt,
                     std::move(class_of), std::move(boundary)};
  if (bounded) {
    inst.game.emplace(inst.form, sys.stakeholders(), std::move(utilities));
  }
  return inst;
}

Strategy induced_strategy(const StationarySystem& sys,
                          const StationaryStrategy& sigma,
                          const Instantiation& inst) {
  ChoiceMap out;
  for (const auto& [t, c] : inst.class_of) {
    sys.piece_class(c);
    for (const auto& [j, a] : sigma.choices.at(c)) {
      out[translate_situation(t, j)] = a;
    }
  }
  return validate_strategy(inst.form, out);
}

ValueFunction induced_values(const StationarySystem& sys, const ClassValues& v,
                             const Instantiation& inst) {
  ValueFunction out;
  for (const auto& [t, c] : inst.class_of) {
    out.values.emplace(t, value_at(sys, v, t));
  }
  return out;
}

}  // namespace pentaform
