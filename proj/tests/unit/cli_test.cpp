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
#include <cstdlib>
#include <filesystem>

#include "fixture_catalog.hpp"
#include "pentaform/cli/commands.hpp"
#include "pentaform/fixtures.hpp"
#include "pentaform/io.hpp"

namespace pentaform::cli {
namespace {

std::string fx(const std::string& name) {
  return std::string(PENTAFORM_FIXTURE_DIR) + "/" + name;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("pentaform_cli_" + name))
      .string();
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

// Recursive-descent check of the DOT subset: a digraph whose statements are
// attribute defaults, node statements and edge chains with attribute lists.
class DotChecker {
 public:
  explicit DotChecker(std::string text) : s_(std::move(text)) {}

  bool ok() {
    if (!keyword("digraph")) return false;
    id();
    if (!punct("{")) return false;
    while (!peek("}")) {
      if (at_end() || !statement()) return false;
    }
    punct("}");
    skip();
    return at_end();
  }
  int nodes = 0;
  int edges = 0;

 private:
  bool statement() {
    if (keyword("node") || keyword("edge") || keyword("graph")) {
      return attr_list() && punct(";");
    }
    if (!id()) return false;
    int chain = 0;
    while (punct("->")) {
      if (!id()) return false;
      ++chain;
    }
    if (chain == 0) ++nodes;
    edges += chain;
    if (peek("[") && !attr_list()) return false;
    punct(";");
    return true;
  }
  bool attr_list() {
    if (!punct("[")) return false;
    while (!punct("]")) {
      if (!id() || !punct("=") || !id()) return false;
      punct(",");
      punct(";");
    }
    return true;
  }
  bool id() {
    skip();
    if (at_end()) return false;
    if (s_[i_] == '"') {
      for (++i_; i_ < s_.size() && s_[i_] != '"'; ++i_) {
        if (s_[i_] == '\\') ++i_;
      }
      return i_++ < s_.size();
    }
    if (s_[i_] == '<') {
      int depth = 0;
      for (; i_ < s_.size(); ++i_) {
        if (s_[i_] == '<') ++depth;
        if (s_[i_] == '>' && --depth == 0) return ++i_, true;
      }
      return false;
    }
    const auto start = i_;
    while (i_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_' ||
            s_[i_] == '.' || (s_[i_] == '-' && start == i_))) {
      ++i_;
    }
    return i_ > start;
  }
  bool keyword(const std::string& k) {
    skip();
    if (s_.compare(i_, k.size(), k) != 0) return false;
    const auto after = i_ + k.size();
    if (after < s_.size() && std::isalnum(static_cast<unsigned char>(s_[after]))) {
      return false;
    }
    i_ = after;
    return true;
  }
  bool punct(const std::string& p) {
    if (!peek(p)) return false;
    i_ += p.size();
    return true;
  }
  bool peek(const std::string& p) {
    skip();
    return s_.compare(i_, p.size(), p) == 0;
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool at_end() const { return i_ >= s_.size(); }

  std::string s_;
  std::size_t i_ = 0;
};

TEST(Cli, ValidateEntrantIncumbent) {
  const auto r = run({"validate", fx("f1.pentaform")});
  EXPECT_EQ(r.status, kHolds);
  for (const char* axiom : {"[Pi<-j]", "[Pj<-w]", "[Pwa]", "[Pwa->y]",
                            "[Pw<-y]", "[Pa<-y]", "[Py]", "[Pr]"}) {
    EXPECT_TRUE(contains(r.output, axiom)) << axiom;
  }
  EXPECT_FALSE(contains(r.output, "FAIL"));
  EXPECT_TRUE(contains(r.output, "result: valid, 4 quintuples, root \"5\""));
}

TEST(Cli, ValidateEmptyFileFailsNonemptiness) {
  const auto path = temp_path("empty.pentaform");
  io::write_file(path, "  \n");
  const auto r = run({"validate", path});
  EXPECT_EQ(r.status, kFails);
  EXPECT_TRUE(contains(r.output, "[Pr] FAIL"));
  EXPECT_TRUE(contains(r.output, "exit status: 1"));
}

TEST(Cli, ValidateReportsFailedAxiomWithWitness) {
  const auto path = temp_path("cycle.pentaform");
  io::write_file(path, R"({"quintuples": [["A", "j", "r", "a", "x"],
                                          ["A", "k", "x", "b", "r"]]})");
  const auto r = run({"validate", path});
  EXPECT_EQ(r.status, kFails);
  EXPECT_TRUE(contains(r.output, "FAIL"));
}

TEST(Cli, ValidateDeeperCryWolfTruncations) {
  for (const char* f : {"f3_depth2.pentaform", "f3_depth3.pentaform"}) {
    const auto r = run({"validate", fx(f)});
    EXPECT_EQ(r.status, kHolds) << r.output << r.errors;
    EXPECT_TRUE(contains(r.output, "root \"\"")) << f;
  }
}

TEST(Cli, InspectSubrootsAndPieces) {
  const auto a = run({"inspect", fx("f3_depth1.pentaform"), "--subroots"});
  EXPECT_EQ(a.status, kHolds);
  EXPECT_TRUE(contains(a.output, "quintuples: 32"));
  EXPECT_TRUE(contains(a.output, "subroots: {\"\", \"6\", \"7\", \"8\"}"));

  const auto b = run({"inspect", fx("f1.game"), "--pieces"});
  EXPECT_EQ(b.status, kHolds);
  EXPECT_TRUE(contains(b.output, "\"5\": 2 quintuples"));
  EXPECT_TRUE(contains(b.output, "\"6\": 2 quintuples"));
  EXPECT_TRUE(contains(b.output, "partition of quintuples: ok"));
  EXPECT_TRUE(contains(b.output, "partition of subroots and final endnodes: ok"));
}

TEST(Cli, InspectDotParses) {
  for (const char* f : {"f1.game", "f3_depth1.pentaform", "ann_trunc.game"}) {
    SCOPED_TRACE(f);
    const auto out = temp_path(std::string(f) + ".dot");
    const auto r = run({"inspect", fx(f), "--dot", out});
    ASSERT_EQ(r.status, kHolds) << r.errors;
    DotChecker dot(io::read_file(out));
    EXPECT_TRUE(dot.ok());
    const auto q = io::quintuples_from_text(io::read_file(fx(f)));
    EXPECT_EQ(dot.edges, static_cast<int>(q.size()));
    EXPECT_EQ(dot.nodes, static_cast<int>(q.size()) + 1);
  }
}

TEST(Cli, InspectRejectsStationarySystems) {
  EXPECT_EQ(run({"inspect", fx("crywolf.system")}).status, kInputError);
}

TEST(Cli, CheckEntrantIncumbent) {
  auto r = run({"check", fx("f1.game"), fx("f1_s_spe.strategy"), "--property", "spe"});
  EXPECT_EQ(r.status, kHolds);
  EXPECT_TRUE(contains(r.output, "spe: holds"));

  r = run({"check", fx("f1.game"), fx("f1_s_threat.strategy"), "--property", "spe"});
  EXPECT_EQ(r.status, kFails);
  EXPECT_TRUE(contains(r.output, "agent: Inc"));
  EXPECT_TRUE(contains(r.output, "alternative: (Ent: -1, Inc: 3)"));

  r = run({"check", fx("f1.game"), fx("f1_s_threat.strategy"), "--property", "nash"});
  EXPECT_EQ(r.status, kHolds);

  r = run({"check", fx("f1.game"), fx("f1_s_spe.strategy"), fx("f1_v_spe.values"),
           "--property", "authentic"});
  EXPECT_EQ(r.status, kHolds);
}

TEST(Cli, CheckNeedsValuesForValueProperties) {
  const auto r = run({"check", fx("f1.game"), fx("f1_s_spe.strategy"),
                      "--property", "persistent"});
  EXPECT_EQ(r.status, kInputError);
}

TEST(Cli, CheckTruncations) {
  auto r = run({"check", fx("bob_trunc.game"), fx("bob_trunc_s_out.strategy"),
                fx("bob_trunc_v_minus1.values"), "--property", "piecewise-nash"});
  EXPECT_EQ(r.status, kHolds);
  r = run({"check", fx("bob_trunc.game"), fx("bob_trunc_s_out.strategy"),
           fx("bob_trunc_v_minus1.values"), "--property", "authentic"});
  EXPECT_EQ(r.status, kHolds);
  // The boundary is priced at always-out's own value, so the truncation
  // itself has no profitable deviation.
  r = run({"check", fx("bob_trunc.game"), fx("bob_trunc_s_out.strategy"),
           "--property", "spe"});
  EXPECT_EQ(r.status, kHolds);

  r = run({"check", fx("ann_trunc.game"), fx("ann_trunc_s_in.strategy"),
           fx("ann_trunc_v_alpha05.values"), "--property", "authentic"});
  EXPECT_EQ(r.status, kFails);
  r = run({"check", fx("ann_trunc.game"), fx("ann_trunc_s_in.strategy"),
           fx("ann_trunc_v_alpha05.values"), "--property", "piecewise-nash"});
  EXPECT_EQ(r.status, kFails);
  EXPECT_TRUE(contains(r.output, "alternative: (Ann: 1)"));
}

TEST(Cli, CheckStationarySystems) {
  auto r = run({"check", fx("crywolf.system"), fx("crywolf_s_eq.strategy"),
                "--property", "spe"});
  EXPECT_EQ(r.status, kHolds) << r.output << r.errors;
  r = run({"check", fx("ann.system"), fx("ann_s_in.strategy"),
           fx("ann_v_alpha03.values"), "--property", "piecewise-nash"});
  EXPECT_EQ(r.status, kFails);
  r = run({"check", fx("ann.system"), fx("ann_s_in.strategy"),
           fx("ann_v_alpha10.values"), "--property", "piecewise-nash"});
  EXPECT_EQ(r.status, kHolds) << r.output << r.errors;
  r = run({"check", fx("crywolf.system"), fx("crywolf_s_eq.strategy"),
           "--property", "nash"});
  EXPECT_EQ(r.status, kInputError);
}

TEST(Cli, Solve) {
  const auto r = run({"solve", fx("f1.game")});
  EXPECT_EQ(r.status, kHolds);
  EXPECT_TRUE(contains(r.output, "jE -> e~"));
  EXPECT_TRUE(contains(r.output, "jI -> f"));
}

TEST(Cli, ResourceCap) {
  ::setenv("PENTAFORM_MAX_PROFILES", "1", 1);
  const auto r = run({"solve", fx("f1.game")});
  ::unsetenv("PENTAFORM_MAX_PROFILES");
  EXPECT_EQ(r.status, kResourceCap);
  EXPECT_TRUE(contains(r.errors, "error:"));
}

TEST(Cli, StationaryCertify) {
  auto r = run({"stationary", fx("crywolf.system"), "certify",
                fx("crywolf_s_eq.strategy")});
  EXPECT_EQ(r.status, kHolds);
  EXPECT_TRUE(contains(r.output, "certificate: SPECertified"));
  EXPECT_TRUE(contains(r.output, "Kid: 2/9 (= .2̄)"));
  EXPECT_TRUE(contains(r.output, "Wolf: 5/9 (= .5̄)"));

  r = run({"stationary", fx("bob.system"), "certify", fx("bob_s_out.strategy")});
  EXPECT_EQ(r.status, kFails);
  EXPECT_TRUE(contains(r.output, "refuted property: spe"));

  r = run({"stationary", fx("bob.system"), "certify", fx("bob_s_in.strategy")});
  EXPECT_EQ(r.status, kInconclusive);
}

TEST(Cli, StationaryConvergence) {
  auto r = run({"stationary", fx("crywolf.system"), "convergence"});
  EXPECT_EQ(r.status, kHolds);
  r = run({"stationary", fx("ann.system"), "convergence"});
  EXPECT_EQ(r.status, kFails);
  EXPECT_TRUE(contains(r.output, "upper-convergence: FAILS"));
  EXPECT_TRUE(contains(r.output, "lower-convergence: HOLDS"));
  r = run({"stationary", fx("bob.system"), "convergence"});
  EXPECT_TRUE(contains(r.output, "upper-convergence: HOLDS"));
  EXPECT_TRUE(contains(r.output, "lower-convergence: FAILS"));
}

TEST(Cli, StationarySolve) {
  auto r = run({"stationary", fx("crywolf.system"), "solve"});
  EXPECT_EQ(r.status, kHolds);
  EXPECT_TRUE(contains(r.output, "Town: 4/9 (= .4̄)"));

  const auto pennies = temp_path("pennies.system");
  io::write_file(pennies, io::to_text(fixtures::matching_pennies_system()));
  r = run({"stationary", pennies, "solve"});
  EXPECT_EQ(r.status, kFails);
}

TEST(Cli, InstantiateMatchesFixtures) {
  for (const char* d : {"1", "2", "3"}) {
    const auto r = run({"stationary", fx("crywolf.system"), "instantiate", d});
    ASSERT_EQ(r.status, kHolds) << r.errors;
    EXPECT_EQ(r.output, testing::fixture_catalog().at(
                            std::string("f3_depth") + d + ".pentaform"));
  }
  const auto out = temp_path("ann_trunc.game");
  const auto r = run({"stationary", fx("ann.system"), "instantiate", "8",
                      "--bounded", "--pricing", "continuation", "--strategy",
                      fx("ann_s_in.strategy"), "-o", out});
  ASSERT_EQ(r.status, kHolds) << r.errors;
  EXPECT_EQ(io::read_file(out), testing::fixture_catalog().at("ann_trunc.game"));
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(run({"validate", "/nonexistent/file"}).status, kInputError);
  EXPECT_EQ(run({"frobnicate"}).status, kInputError);
  EXPECT_EQ(run({}).status, kInputError);
  const auto bad = temp_path("bad.game");
  io::write_file(bad, "{\"quintuples\": [");
  const auto r = run({"validate", bad});
  EXPECT_EQ(r.status, kInputError);
  EXPECT_TRUE(contains(r.errors, bad + ":1:"));
  EXPECT_EQ(run({"check", fx("f1.game"), fx("f1_s_spe.strategy"), "--property",
                 "bogus"})
                .status,
            kInputError);
}

TEST(Cli, Deterministic) {
  const std::vector<std::vector<std::string>> cases{
      {"validate", fx("f3_depth2.pentaform")},
      {"inspect", fx("f3_depth1.pentaform"), "--subroots", "--pieces"},
      {"stationary", fx("crywolf.system"), "solve"},
      {"stationary", fx("eda.system"), "convergence"},
  };
  for (const auto& args : cases) {
    const auto a = run(args);
    const auto b = run(args);
    EXPECT_EQ(a.output, b.output);
    EXPECT_EQ(a.status, b.status);
  }
}

}  // namespace
}  // namespace pentaform::cli
