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

#include "pentaform/convergence.hpp"

#include <algorithm>
#include <optional>

#include "pentaform/detail/classes.hpp"
#include "pentaform/errors.hpp"
#include "pentaform/stationary.hpp"

namespace pentaform {

std::string_view status_name(ConvergenceVerdict::Status status) {
  switch (status) {
    case ConvergenceVerdict::Status::kHolds: return "HOLDS";
    case ConvergenceVerdict::Status::kFails: return "FAILS";
    case ConvergenceVerdict::Status::kUnknown: return "UNKNOWN";
  }
  return "?";
}

namespace {

XReal extreme_below(const Game& g, const Label& x, const Label& k,
                    bool maximize) {
  if (!g.stakeholders().contains(k)) {
    throw DomainError("unknown stakeholder " + show(k));
  }
  std::optional<XReal> best;
  for (const auto& y : descendants(g.form(), x)) {
    if (!g.form().is_endnode(y)) continue;
    const XReal& u = g.utility(y).at(k);
    if (!best || (maximize ? u > *best : u < *best)) best = u;
  }
  return *best;
}

ConvergenceVerdict finite_game_verdict() {
  ConvergenceVerdict v;
  v.certificate = "every run is finite, so the conceivable bound reaches the "
                  "run's utility at its endnode";
  return v;
}

}  // namespace

XReal sup_conceivable(const Game& g, const Label& x, const Label& k) {
  return extreme_below(g, x, k, true);
}

XReal inf_conceivable(const Game& g, const Label& x, const Label& k) {
  return extreme_below(g, x, k, false);
}

ConvergenceVerdict upper_convergent(const Game&, std::size_t) {
  return finite_game_verdict();
}

ConvergenceVerdict lower_convergent(const Game&, std::size_t) {
  return finite_game_verdict();
}

namespace {

// Continue-exit labels leading from the initial class to class `to`, by
// breadth-first search so the prefix is as short as possible.
std::vector<Label> exit_path(const StationarySystem& sys, const Label& to) {
  std::map<Label, std::pair<Label, Label>> parent;  // class -> (from, exit)
  std::vector<Label> frontier{sys.initial()};
  LabelSet seen{sys.initial()};
  while (!frontier.empty() && !seen.contains(to)) {
    std::vector<Label> next;
    for (const auto& c : frontier) {
      for (const auto& [y, e] : sys.piece_class(c).exits()) {
        if (e.kind == Exit::Kind::kContinue && seen.insert(e.next_class).second) {
          parent[e.next_class] = {c, y};
          next.push_back(e.next_class);
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<Label> out;
  for (Label c = to; c != sys.initial();) {
    const auto& [from, y] = parent.at(c);
    out.insert(out.begin(), y);
    c = from;
  }
  return out;
}

// Exit labels once round a class cycle, taking the first continue exit
// between consecutive classes.
std::vector<Label> cycle_exits(const StationarySystem& sys,
                               const std::vector<Label>& cycle) {
  std::vector<Label> out;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const Label& to = cycle[(i + 1) % cycle.size()];
    for (const auto& [y, e] : sys.piece_class(cycle[i]).exits()) {
      if (e.kind == Exit::Kind::kContinue && e.next_class == to) {
        out.push_back(y);
        break;
      }
    }
  }
  return out;
}

std::string describe_lasso(const StationarySystem& sys,
                           std::vector<Label> cycle) {
  // Enter the cycle at the class closest to the initial class.
  std::size_t entry = 0;
  std::size_t shortest = exit_path(sys, cycle[0]).size();
  for (std::size_t i = 1; i < cycle.size(); ++i) {
    const std::size_t len = exit_path(sys, cycle[i]).size();
    if (len < shortest) {
      shortest = len;
      entry = i;
    }
  }
  std::rotate(cycle.begin(), cycle.begin() + static_cast<std::ptrdiff_t>(entry),
              cycle.end());
  const auto prefix = exit_path(sys, cycle.front());
  const auto loop = cycle_exits(sys, cycle);
  std::string out = "{}";
  for (const auto& y : prefix) out += " " + y;
  out += " (";
  for (std::size_t i = 0; i < loop.size(); ++i) {
    if (i > 0) out += " ";
    out += loop[i];
  }
  return out + ")^inf through classes " + join(cycle, " -> ");
}

ConvergenceVerdict stationary_verdict(const StationarySystem& sys,
                                      bool upper, std::size_t depth) {
  ConvergenceVerdict out;
  if (sys.discounted()) {
    const Rational beta = sys.beta();
    Rational spread = 0;
    for (const auto& k : sys.stakeholders()) {
      for (const auto& [c, pc] : sys.classes()) {
        const Interval b = conceivable_bounds(sys, c, k);
        const Rational s = b.hi.finite() - b.lo.finite();
        if (s > spread) spread = s;
      }
    }
    Rational tail = spread;
    for (std::size_t i = 0; i < depth; ++i) tail *= beta;
    out.certificate =
        "discounted with beta = " + XReal(beta).str() +
        " and bounded rewards: beyond d pieces the conceivable " +
        (upper ? "increment" : "decrement") + " is at most beta^d * " +
        XReal(spread).str() + " (at d = " + std::to_string(depth) + ": " +
        XReal(tail).str() + "), which tends to 0";
    return out;
  }

  bool any_recurrent = false;
  std::string missing;
  for (const auto& r : detail::recurrent_sets(sys)) {
    any_recurrent = true;
    // The conceivable bound is the same at every class of a recurrent set
    // because each reaches all the others.
    const Label& rep = *r.classes.begin();
    for (const auto& k : sys.stakeholders()) {
      Interval b;
      try {
        b = conceivable_bounds(sys, rep, k);
      } catch (const ModelError& e) {
        missing = e.what();
        continue;
      }
      for (const auto& [cyc, u] : r.runs) {
        const std::string which =
            cyc.empty() ? "runs mixing cycles through " + show(r.classes)
                        : describe_lasso(sys, cyc);
        if (!u) {
          missing = "no infinite-run utility declared for " + which;
          continue;
        }
        const XReal& value = u->at(k);
        const XReal gap = upper ? b.hi - value : value - b.lo;
        if (gap > XReal(0)) {
          out.status = ConvergenceVerdict::Status::kFails;
          out.run = which;
          out.stakeholder = k;
          out.gap = gap;
          out.certificate =
              std::string(upper ? "sup" : "inf") +
              " of conceivable utility stays at " + (upper ? b.hi : b.lo).str() +
              " at every piece of the run, whose utility is " + value.str();
          return out;
        }
      }
    }
  }
  if (!missing.empty()) {
    out.status = ConvergenceVerdict::Status::kUnknown;
    out.certificate = missing;
    return out;
  }
  out.certificate =
      any_recurrent
          ? std::string("on every recurrent cycle the conceivable ") +
                (upper ? "sup" : "inf") + " equals the run's utility"
          : "every run ends at a terminal exit";
  return out;
}

}  // namespace

ConvergenceVerdict upper_convergent(const StationarySystem& sys,
                                    std::size_t depth) {
  return stationary_verdict(sys, true, depth);
}

ConvergenceVerdict lower_convergent(const StationarySystem& sys,
                                    std::size_t depth) {
  return stationary_verdict(sys, false, depth);
}

}  // namespace pentaform
