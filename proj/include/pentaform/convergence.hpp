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

#ifndef PENTAFORM_CONVERGENCE_HPP_
#define PENTAFORM_CONVERGENCE_HPP_

#include <cstddef>
#include <string>

#include "pentaform/game.hpp"
#include "pentaform/xreal.hpp"

namespace pentaform {

class StationarySystem;

struct ConvergenceVerdict {
  enum class Status { kHolds, kFails, kUnknown };

  Status status = Status::kHolds;
  // Holds: why. Unknown: what is missing.
  std::string certificate;
  // Fails: the offending run as a lasso of exit labels, the stakeholder, and
  // the gap that never closes along the run.
  std::string run;
  Label stakeholder;
  XReal gap;

  bool holds() const { return status == Status::kHolds; }
  bool fails() const { return status == Status::kFails; }
};

std::string_view status_name(ConvergenceVerdict::Status status);

// Highest and lowest utility of stakeholder k over runs through x.
XReal sup_conceivable(const Game& g, const Label& x, const Label& k);
XReal inf_conceivable(const Game& g, const Label& x, const Label& k);

inline constexpr std::size_t kDefaultDepthBound = 64;

// Every run of a finite game is finite, so both always hold.
ConvergenceVerdict upper_convergent(const Game& g,
                                    std::size_t depth = kDefaultDepthBound);
ConvergenceVerdict lower_convergent(const Game& g,
                                    std::size_t depth = kDefaultDepthBound);

// Discounted systems hold with a geometric tail bound. Absolute-terminal
// systems are decided exactly on each recurrent class cycle: the conceivable
// bound is constant around the cycle, so any gap to the declared infinite-run
// utility persists forever.
ConvergenceVerdict upper_convergent(const StationarySystem& sys,
                                    std::size_t depth = kDefaultDepthBound);
ConvergenceVerdict lower_convergent(const StationarySystem& sys,
                                    std::size_t depth = kDefaultDepthBound);

}  // namespace pentaform

#endif  // PENTAFORM_CONVERGENCE_HPP_
