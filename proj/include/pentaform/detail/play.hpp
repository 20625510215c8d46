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

#ifndef PENTAFORM_DETAIL_PLAY_HPP_
#define PENTAFORM_DETAIL_PLAY_HPP_

#include <functional>

#include "pentaform/label.hpp"
#include "pentaform/pentaform.hpp"
#include "pentaform/xreal.hpp"

namespace pentaform::detail {

using StopFn = std::function<bool(const Label&)>;
using PayoffFn = std::function<XReal(const Label&)>;

struct Reply {
  XReal value;
  ChoiceMap choices;  // the deviator's choices at the situations visited
  Label end;
};

// The deviator's best payoff when they may pick any action at the situations
// in `free` (the same action on every visit) while everyone else follows
// `fixed`. Play starts at `start` and ends at an endnode or at the first later
// node where stop holds. Ties keep the earliest branch in action order.
Reply best_reply(const Pentaform& p, const ChoiceMap& fixed,
                 const LabelSet& free, const Label& start, const StopFn& stop,
                 const PayoffFn& payoff);

}  // namespace pentaform::detail

#endif  // PENTAFORM_DETAIL_PLAY_HPP_
