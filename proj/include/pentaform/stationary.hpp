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

#ifndef PENTAFORM_STATIONARY_HPP_
#define PENTAFORM_STATIONARY_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pentaform/convergence.hpp"
#include "pentaform/game.hpp"
#include "pentaform/label.hpp"
#include "pentaform/pentaform.hpp"
#include "pentaform/xreal.hpp"

namespace pentaform {

struct Exit {
  enum class Kind { kTerminal, kContinue };

  Kind kind = Kind::kTerminal;
  Label next_class;  // kContinue only
  Profile reward;

  static Exit terminal(Profile reward) {
    return {Kind::kTerminal, {}, std::move(reward)};
  }
  static Exit go(Label next, Profile reward) {
    return {Kind::kContinue, std::move(next), std::move(reward)};
  }
  bool operator==(const Exit&) const = default;
};

// The shape of one piece. Template nodes are relative labels; the template
// root is "" and a piece at subroot t places node x at t + x. Situations are
// "+"-joined template node lists and are translated node by node.
class PieceClass {
 public:
  // Throws DomainError if the template is not a pentaform rooted at "",
  // has a subroot other than its root, or the exit table does not classify
  // exactly its endnodes.
  PieceClass(std::vector<Quintuple> declared, std::map<Label, Exit> exits);

  const std::vector<Quintuple>& declared() const { return declared_; }
  const Pentaform& form() const { return form_; }
  const std::map<Label, Exit>& exits() const { return exits_; }
  const Exit& exit(const Label& endnode) const;
  // Situations and each situation's actions in order of first declaration.
  const std::vector<Label>& situation_order() const { return situation_order_; }
  const std::vector<Label>& action_order(const Label& j) const;

 private:
  std::vector<Quintuple> declared_;
  Pentaform form_;
  std::map<Label, Exit> exits_;
  std::vector<Label> situation_order_;
  std::map<Label, std::vector<Label>> action_order_;
};

// Utility of a run = sum over pieces m of beta^m * reward_m.
struct DiscountedModel {
  Rational beta;
};

struct CycleUtility {
  std::vector<Label> cycle;  // classes around the cycle, from any start
  Profile utility;
};

// Terminal exits pay their reward as the whole-run utility; infinite runs
// pay a declared profile (per simple class cycle, else the default).
struct AbsoluteModel {
  std::optional<Profile> infinite_run_utility;
  std::vector<CycleUtility> cycle_utilities;
};

using UtilityModel = std::variant<DiscountedModel, AbsoluteModel>;

class StationarySystem {
 public:
  // Throws DomainError on unknown or unreachable classes, non-total
  // profiles, exit labels that are prefixes of each other, infinite rewards
  // under discounting, or beta outside [0, 1).
  StationarySystem(std::map<Label, PieceClass> classes, Label initial,
                   LabelSet stakeholders, UtilityModel model);

  const std::map<Label, PieceClass>& classes() const { return classes_; }
  const PieceClass& piece_class(const Label& c) const;
  const Label& initial() const { return initial_; }
  const LabelSet& stakeholders() const { return stakeholders_; }
  const UtilityModel& model() const { return model_; }
  bool discounted() const {
    return std::holds_alternative<DiscountedModel>(model_);
  }
  // beta for discounted systems, 1 otherwise.
  Rational beta() const;

 private:
  std::map<Label, PieceClass> classes_;
  Label initial_;
  LabelSet stakeholders_;
  UtilityModel model_;
};

// Class -> choices at the template's situations.
struct StationaryStrategy {
  std::map<Label, ChoiceMap> choices;
  bool operator==(const StationaryStrategy&) const = default;
};

using ClassValues = std::map<Label, Profile>;

// Throws DomainError if some class's choices are not total and feasible.
StationaryStrategy validate_stationary_strategy(
    const StationarySystem& sys, std::map<Label, ChoiceMap> choices);

// The template endnode that sigma reaches in class c.
Label class_exit(const StationarySystem& sys, const StationaryStrategy& sigma,
                 const Label& c);

// Utility, relative to the piece's own subroot, of leaving class c through
// endnode e when later pieces are worth w.
Profile quotient_utility(const StationarySystem& sys, const Label& c,
                         const Label& e, const ClassValues& w);

// Exact solution of w_c = reward + beta * w_next along sigma's exits. A
// sigma-cycle under the absolute model takes its declared utility and throws
// ModelError when there is none.
ClassValues continuation_values(const StationarySystem& sys,
                                const StationaryStrategy& sigma);

// The pieces on the way to a subroot label.
struct SubrootPath {
  std::vector<Label> classes;  // one more than exits; back() is class(t)
  std::vector<Label> exits;
  Profile accrued;             // discounted rewards of the exits taken
  Rational factor = 1;         // beta^|exits| (1 under the absolute model)
};
// Throws DomainError if t does not parse as continue-exit labels.
SubrootPath parse_subroot(const StationarySystem& sys, const Label& t);

// accrued(t) + beta^|t| * w_class(t): the authentic value at t.
Profile value_at(const StationarySystem& sys, const StationaryStrategy& sigma,
                 const Label& t);
// The same with class values supplied by the caller.
Profile value_at(const StationarySystem& sys, const ClassValues& w,
                 const Label& t);

struct Interval {
  XReal lo;
  XReal hi;
};
// Range of u_k over all continuations from a fresh piece of class c,
// measured from that piece's subroot. Throws ModelError when an absolute
// system leaves a reachable infinite run without a declared utility.
Interval conceivable_bounds(const StationarySystem& sys, const Label& c,
                            const Label& k);

// Property checks on class-indexed value functions.
Verdict stationary_admissible(const StationarySystem& sys,
                              const ClassValues& v);
Verdict stationary_persistent(const StationarySystem& sys,
                              const StationaryStrategy& sigma,
                              const ClassValues& v);
Verdict stationary_authentic(const StationarySystem& sys,
                             const StationaryStrategy& sigma,
                             const ClassValues& v);
Verdict stationary_piecewise_nash(const StationarySystem& sys,
                                  const StationaryStrategy& sigma,
                                  const ClassValues& v);
// A player switching to another stationary strategy and gaining at the
// subroot of some class. Deviations whose value is undeclared are skipped.
Verdict stationary_deviation_scan(const StationarySystem& sys,
                                  const StationaryStrategy& sigma,
                                  std::uint64_t cap = kDefaultProfileCap);

struct Certificate {
  enum class Kind { kSPECertified, kRefuted, kInconclusive };

  Kind kind = Kind::kInconclusive;
  ClassValues continuation;
  ConvergenceVerdict upper;
  ConvergenceVerdict lower;
  Verdict piecewise;
  std::string failing_property;  // kRefuted: "piecewise-nash" or "spe"
  std::optional<Witness> witness;
  std::string reason;
};

std::string_view kind_name(Certificate::Kind kind);

// Lower-convergence plus the authentic class values and a piecewise-Nash
// quotient certify subgame perfection; a non-Nash quotient or a profitable
// stationary deviation refutes it.
Certificate certify_spe(const StationarySystem& sys,
                        const StationaryStrategy& sigma,
                        std::size_t depth = kDefaultDepthBound);

struct StationarySolution {
  StationaryStrategy strategy;
  ClassValues values;
  std::size_t iterations = 0;
};
struct StationaryFailure {
  enum class Kind { kNoPureEquilibrium, kNoConvergence };
  Kind kind;
  Label piece_class;
  std::string detail;
};
struct SolveOptions {
  Rational tol = Rational(1, 1'000'000'000'000LL);
  std::size_t max_iterations = 1000;
  std::uint64_t cap = kDefaultProfileCap;
};
// Value iteration from w = 0. Each sweep takes, per class, the first pure
// Nash equilibrium of the quotient piece game in declaration order.
std::variant<StationarySolution, StationaryFailure> solve_stationary(
    const StationarySystem& sys, const SolveOptions& options = {});

enum class InstantiateMode { kStructural, kBounded };

struct BoundaryPricing {
  enum class Kind { kLower, kUpper, kContinuation };
  Kind kind = Kind::kLower;
  ClassValues values;  // kContinuation only

  static BoundaryPricing lower() { return {}; }
  static BoundaryPricing upper() { return {Kind::kUpper, {}}; }
  static BoundaryPricing continuation(ClassValues w) {
    return {Kind::kContinuation, std::move(w)};
  }
};

struct Instantiation {
  Pentaform form;
  std::optional<Game> game;           // bounded mode only
  std::map<Label, Label> class_of;    // subroot -> class
  // Bounded mode: the conceivable interval behind each boundary endnode.
  std::map<Label, std::pair<Profile, Profile>> boundary;
};

// All pieces reachable through at most d continue exits.
Instantiation instantiate(const StationarySystem& sys, std::size_t d,
                          InstantiateMode mode = InstantiateMode::kStructural,
                          const BoundaryPricing& pricing = {});

// sigma replicated onto every piece of an instantiation.
Strategy induced_strategy(const StationarySystem& sys,
                          const StationaryStrategy& sigma,
                          const Instantiation& inst);
// Class values spread onto an instantiation's subroots.
ValueFunction induced_values(const StationarySystem& sys, const ClassValues& v,
                             const Instantiation& inst);

}  // namespace pentaform

#endif  // PENTAFORM_STATIONARY_HPP_
