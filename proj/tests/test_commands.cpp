// Copyright 2026 The hbn Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cstdlib>

#include "doctest.h"
#include "hbn/commands.hpp"

using namespace hbn;

namespace {

RunConfig trigonal() {
  RunConfig cfg;
  cfg.cls = {3, 3, 2};
  cfg.e = SplittingType({-8, -4, -1});
  return cfg;
}

std::vector<std::string> column(const Table& t, const std::string& name) {
  std::size_t idx = 0;
  while (idx < t.columns.size() && t.columns[idx] != name) ++idx;
  REQUIRE(idx < t.columns.size());
  std::vector<std::string> out;
  for (const auto& row : t.rows) out.push_back(row[idx]);
  return out;
}

}  // namespace

TEST_CASE("enumerate reproduces the trigonal table") {
  const auto out = cmd_enumerate(trigonal());
  CHECK(out.exit_code == kExitOk);
  CHECK(column(out.table, "f") == std::vector<std::string>{"(-7,-4,0)", "(-7,-3,-1)", "(-6,-4,-1)"});
  CHECK(column(out.table, "dim") == std::vector<std::string>{"0", "1", "1"});
  CHECK(out.json["count"] == 3);
  CHECK(out.json["strata"][0]["dim"] == 0);
  for (const auto& col : {"dim", "nu", "u_e", "u_f"}) CHECK(out.table.provenance.count(col) == 1);
}

TEST_CASE("enumerate with degree and section filters") {
  RunConfig cfg;
  cfg.cls = {1, 7, 0};
  cfg.degree = 14;
  cfg.sections = 3;
  const auto out = cmd_enumerate(cfg);
  auto dims = column(out.table, "plane_dim");
  std::sort(dims.begin(), dims.end());
  CHECK(dims == std::vector<std::string>{"5", "6", "7", "7"});
  CHECK(column(out.table, "dim") == column(out.table, "plane_dim"));
}

TEST_CASE("empty window gives an empty table") {
  RunConfig cfg;
  cfg.cls = {1, 3, 1};
  cfg.window = std::pair{3, 2};
  const auto out = cmd_enumerate(cfg);
  CHECK(out.exit_code == kExitOk);
  CHECK(out.table.rows.empty());
  CHECK(render(out, OutputFormat::kCsv) == "e,f,u_e,u_f,nu,dim\n");
  CHECK(render(out, OutputFormat::kPretty).find("(no rows)") != std::string::npos);
}

TEST_CASE("sample certifies a trigonal curve") {
  auto cfg = trigonal();
  cfg.f = SplittingType({-6, -4, -1});
  cfg.seed = 7;
  const auto out = cmd_sample(cfg);
  CHECK(out.exit_code == kExitOk);
  CHECK(out.json["status"] == "CERTIFIED");
  CHECK(out.json["smoothness"]["verdict"] == "SMOOTH");
  CHECK(out.json["h0_OC"] == 1);
  CHECK(out.json["discriminant"]["degree"] == 26);
  CHECK(out.json["cokernel"]["ok"] == true);
}

TEST_CASE("sample defaults f to the constructed partner") {
  auto cfg = trigonal();
  const auto out = cmd_sample(cfg);
  CHECK(out.json["f"] == nlohmann::json(witness_f(*cfg.e, cfg.cls).entries()));
}

TEST_CASE("sample output is reproducible from the seed") {
  auto cfg = trigonal();
  cfg.seed = 99;
  const auto a = render(cmd_sample(cfg), OutputFormat::kJson);
  CHECK(a == render(cmd_sample(cfg), OutputFormat::kJson));
  cfg.seed = 100;
  CHECK(a != render(cmd_sample(cfg), OutputFormat::kJson));
}

TEST_CASE("seed falls back to HBN_SEED") {
  ::setenv("HBN_SEED", "1234", 1);
  CHECK(seed_from_environment() == 1234);
  ::setenv("HBN_SEED", "12x", 1);
  CHECK_THROWS_AS(seed_from_environment(), std::invalid_argument);
  ::unsetenv("HBN_SEED");
  CHECK(seed_from_environment() == 0);
}

TEST_CASE("sample on a forced stratum reports the factorization") {
  RunConfig cfg;
  cfg.cls = {1, 2, 0};
  cfg.e = SplittingType({0, 5});
  cfg.f = SplittingType({1, 4});
  const auto out = cmd_sample(cfg);
  CHECK(out.exit_code == kExitEmptyStratum);
  CHECK(out.json["status"] == "FORCED_REDUCIBLE");
  CHECK(out.json["factor_verified"] == true);
}

TEST_CASE("sample with the strictly upper pattern has P_0 = 0") {
  auto cfg = trigonal();
  cfg.f = SplittingType({-6, -4, -1});
  cfg.pattern = Pattern::kStrictUpper;
  cfg.trials = 2;
  const auto out = cmd_sample(cfg);
  for (const auto& c : out.json["curve"]["P"][0]) CHECK(c == 0);
  CHECK(out.exit_code == kExitInconclusive);
  CHECK(out.json["status"] == "INCONCLUSIVE");
}

TEST_CASE("sample without a partner type is empty") {
  RunConfig cfg;
  cfg.cls = {0, 2, 1};
  cfg.e = SplittingType({0, 9});
  const auto out = cmd_sample(cfg);
  CHECK(out.exit_code == kExitEmptyStratum);
  CHECK(out.json["verdict"] == "EMPTY");
}

TEST_CASE("dominance on the trigonal stratum") {
  auto cfg = trigonal();
  cfg.f = SplittingType({-7, -4, 0});
  const auto out = cmd_dominance(cfg);
  CHECK(out.exit_code == kExitOk);
  CHECK(out.json["dominance"]["verdict"] == "DOMINANT");
  CHECK(out.json["dominance"]["target_dim"] == 30);
  CHECK(out.json["dominance"]["source_dim"] == 68);
}

TEST_CASE("dominance on a forced stratum is not achieved") {
  RunConfig cfg;
  cfg.cls = {1, 2, 0};
  cfg.e = SplittingType({0, 5});
  cfg.f = SplittingType({1, 4});
  const auto out = cmd_dominance(cfg);
  CHECK(out.exit_code == kExitEmptyStratum);
  CHECK(out.json["dominance"]["verdict"] == "NOT_ACHIEVED");
  CHECK(out.json["dominance"]["max_rank"] < out.json["dominance"]["target_dim"]);
}

TEST_CASE("dominance lemma harnesses") {
  auto cfg = trigonal();
  cfg.f = SplittingType({-7, -4, 0});
  cfg.selector = Selector::kTCorner;
  cfg.lemma = "is";
  auto out = cmd_dominance(cfg);
  CHECK(out.json["lemma"]["holds"] == true);
  CHECK(out.json["lemma"]["selector"] == "T_CORNER");

  cfg.selector.reset();
  for (const std::string lemma : {"main", "sq"}) {
    cfg.lemma = lemma;
    out = cmd_dominance(cfg);
    CHECK(out.exit_code == kExitOk);
    CHECK(out.json["lemma"]["name"] == lemma);
  }

  cfg.lemma = "is";
  cfg.selector = Selector::kTPrime;
  CHECK_THROWS_AS(cmd_dominance(cfg), std::invalid_argument);
  cfg.lemma = "nope";
  CHECK_THROWS_AS(cmd_dominance(cfg), std::invalid_argument);
  cfg.lemma.reset();
  CHECK_THROWS_AS(cmd_dominance(cfg), std::invalid_argument);
}

TEST_CASE("section5 modes") {
  RunConfig cfg;
  cfg.cls = {1, 4, 1};
  auto out = cmd_section5(cfg);
  CHECK(out.json["abundance"]["verdict"] == "NOT_ABUNDANT");
  CHECK(out.json["abundance"]["witness"] == nlohmann::json({0, 2, 2, 4}));

  cfg.cls = {0, 3, 0};
  cfg.section5 = Section5Mode::kOo;
  CHECK_THROWS_AS(cmd_section5(cfg), std::invalid_argument);
  cfg.bound = 4;
  out = cmd_section5(cfg);
  CHECK(out.json["oo"]["count"] == 8);
  CHECK(column(out.table, "scrollar").front() == "(1,1)");

  cfg.cls.k = 4;
  cfg.genus = 9;
  cfg.section5 = Section5Mode::kGeneralCover;
  out = cmd_section5(cfg);
  CHECK(out.json["general_cover"]["witness"] == nlohmann::json({0, 0, 4, 4}));
  cfg.genus = 5;
  CHECK(cmd_section5(cfg).json["general_cover"].is_null());

  cfg.section5 = Section5Mode::kTriple;
  cfg.cls.k = 2;
  cfg.genus = 1;
  cfg.d = SplittingType({0, 0});
  cfg.e = SplittingType({0, 3});
  cfg.f = SplittingType({0, 2});
  out = cmd_section5(cfg);
  CHECK(out.table.rows.size() == 2);
  CHECK(out.json["triple"]["violations"].size() == 2);
}

TEST_CASE("config validation and parsing") {
  RunConfig cfg = trigonal();
  cfg.p = 10005;
  CHECK_THROWS_AS(cmd_enumerate(cfg), std::invalid_argument);
  cfg.p = 2;
  CHECK_THROWS_AS(cmd_enumerate(cfg), std::invalid_argument);
  cfg = trigonal();
  cfg.trials = 0;
  CHECK_THROWS_AS(cmd_sample(cfg), std::invalid_argument);
  cfg = trigonal();
  cfg.f = SplittingType({-7, -4, 1});
  CHECK_THROWS_AS(cmd_sample(cfg), std::invalid_argument);
  cfg.e = SplittingType({-8, -4});
  CHECK_THROWS_AS(cmd_enumerate(cfg), std::invalid_argument);

  CHECK(parse_int_list("-8, -4,-1") == std::vector<int>{-8, -4, -1});
  CHECK_THROWS_AS(parse_int_list("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_int_list("1,a"), std::invalid_argument);
  CHECK_THROWS_AS(parse_int_list(""), std::invalid_argument);
  CHECK(parse_format("CSV") == OutputFormat::kCsv);
  CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
}

TEST_CASE("csv quotes fields with commas") {
  const auto out = cmd_enumerate(trigonal());
  const auto csv = render(out, OutputFormat::kCsv);
  CHECK(csv.rfind("e,f,u_e,u_f,nu,dim\n\"(-8,-4,-1)\",\"(-7,-4,0)\",11,11,11,0\n", 0) == 0);
}
