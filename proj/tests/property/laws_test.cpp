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

#include <gtest/gtest.h>

#include <cctype>

#include "properties.hpp"

namespace pentaform {
namespace {

constexpr std::size_t kGames = 500;

class EquilibriumLaw : public ::testing::TestWithParam<std::size_t> {};
class StructuralLaw : public ::testing::TestWithParam<std::size_t> {};

void expect_no_counterexamples(const props::Law& law) {
  const auto tally = props::run_laws({law}, kGames);
  EXPECT_EQ(tally.games, kGames);
  for (const auto& c : tally.counterexamples) ADD_FAILURE() << c;
}

TEST_P(EquilibriumLaw, HoldsOnCorpus) {
  expect_no_counterexamples(props::equilibrium_laws()[GetParam()]);
}

TEST_P(StructuralLaw, HoldsOnCorpus) {
  expect_no_counterexamples(props::structural_laws()[GetParam()]);
}

std::string law_name(const std::vector<props::Law>& laws, std::size_t n) {
  std::string out;
  for (char c : laws[n].name) {
    out += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
  }
  return out;
}

INSTANTIATE_TEST_SUITE_P(
    Corpus, EquilibriumLaw,
    ::testing::Range<std::size_t>(0, props::equilibrium_laws().size()),
    [](const auto& info) { return law_name(props::equilibrium_laws(), info.param); });

INSTANTIATE_TEST_SUITE_P(
    Corpus, StructuralLaw,
    ::testing::Range<std::size_t>(0, props::structural_laws().size()),
    [](const auto& info) {
      return law_name(props::structural_laws(), info.param);
    });

// Seeds from a different range catch laws tuned to the fixed corpus.
TEST(Laws, HoldOnFreshSeeds) {
  std::vector<props::Law> all = props::equilibrium_laws();
  const auto& more = props::structural_laws();
  all.insert(all.end(), more.begin(), more.end());
  const auto tally = props::run_laws(all, 60, 100'000);
  for (const auto& c : tally.counterexamples) ADD_FAILURE() << c;
}

}  // namespace
}  // namespace pentaform
