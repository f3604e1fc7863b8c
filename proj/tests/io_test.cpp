// Copyright 2026 The deskrisk Authors
//
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


#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "deskrisk/baselines.hpp"
#include "deskrisk/flow.hpp"
#include "deskrisk/io.hpp"
#include "deskrisk/oracle.hpp"
#include "deskrisk/relaxation.hpp"
#include "deskrisk/soft.hpp"
#include "test_support.hpp"

namespace deskrisk {
namespace {

using testing::fixture;
using testing::random_small;

std::filesystem::path temp_path(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "deskrisk_io_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

TEST(InstanceJson, RoundTripIsLossless) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Instance inst = random_small(seed);
    if (seed % 2 == 0) inst = inst.with_limit(2).with_lambda(1.0 / 3);
    const std::string text = dump(instance_to_json(inst));
    const Instance back = instance_from_json(Json::parse(text));
    EXPECT_EQ(back, inst) << seed;
    EXPECT_EQ(dump(instance_to_json(back)), text);
  }
}

TEST(InstanceJson, AwkwardDoublesSurvive) {
  const Instance inst(1, 4, {{0, 1, 2, 3}},
                      {0.1, 1.0 / 3, 4.9406564584124654e-324, 0.9999999999999999},
                      std::nullopt, 1e-300);
  const auto path = temp_path("awkward.json");
  save_instance(inst, path);
  EXPECT_EQ(load_instance(path), inst);
}

TEST(InstanceJson, UsesOneBasedIndices) {
  const Json doc = instance_to_json(Instance(1, 2, {{0, 1}}, {0.5, 0.5}, 1));
  EXPECT_EQ(doc.at("papers"), Json::parse("[[1,2]]"));
  EXPECT_EQ(doc.at("b"), 1);
  EXPECT_TRUE(doc.at("lambda").is_null());
  EXPECT_EQ(doc.at("format"), 1);
}

TEST(InstanceJson, FixturesLoad) {
  const Instance prop = load_instance(fixture("trap_2x2.json"));
  EXPECT_EQ(prop, Instance(2, 2, {{0, 1}, {0}}, {0.5, 0.5}, 1));
  const Instance forced = load_instance(fixture("forced_2x1_soft.json"));
  EXPECT_EQ(forced.lambda(), 0.5);
}

TEST(InstanceJson, FormatErrors) {
  EXPECT_THROW(instance_from_json(Json::parse("[]")), FormatError);
  EXPECT_THROW(instance_from_json(Json::parse(R"({"format":2,"n":1,"m":1,"papers":[[1]],"p":[0.1]})")),
               FormatError);
  EXPECT_THROW(instance_from_json(Json::parse(R"({"n":1,"m":1,"p":[0.1]})")),
               FormatError);
  EXPECT_THROW(instance_from_json(Json::parse(R"({"n":1,"m":1,"papers":[["x"]],"p":[0.1]})")),
               FormatError);
  EXPECT_THROW(instance_from_json(Json::parse(R"({"n":2,"m":1,"papers":[[1]],"p":[0.1]})")),
               FormatError);
  EXPECT_THROW(load_instance(temp_path("missing.json")), FormatError);
  write_text("{not json", temp_path("broken.json"));
  EXPECT_THROW(load_instance(temp_path("broken.json")), FormatError);
}

TEST(AssignmentJson, RoundTrip) {
  const Assignment a{{2, 0, 1}};
  const Json doc = assignment_to_json(a);
  EXPECT_EQ(doc.at("nominee"), Json::parse("[3,1,2]"));
  EXPECT_EQ(assignment_from_json(doc), a);
}

void expect_report_round_trip(const Instance& inst, const SolveReport& report) {
  const Json doc = report_to_json(inst, report);
  const SolveReport back = report_from_json(Json::parse(dump(doc)));
  EXPECT_EQ(dump(report_to_json(inst, back)), dump(doc));
  EXPECT_EQ(back.status, report.status);
  EXPECT_EQ(back.assignment, report.assignment);
  EXPECT_EQ(back.objective, report.objective);
  EXPECT_EQ(back.seed, report.seed);
  if (report.fractional) EXPECT_EQ(back.fractional->x, report.fractional->x);
}

TEST(ReportJson, RoundTripAcrossSolvers) {
  const Instance inst = random_small(7).with_limit(1).with_lambda(0.5);
  expect_report_round_trip(inst, solve_soft(inst, 1, 0.5));
  expect_report_round_trip(inst, solve_soft_exact(inst, 1, 0.5));
  expect_report_round_trip(inst, solve_hard(inst, 2));
  expect_report_round_trip(inst, solve_hard_relaxed(inst, 2));
  expect_report_round_trip(inst, oracle_basic(inst));
  const Instance trap(2, 2, {{0, 1}, {0}}, {0.5, 0.5});
  expect_report_round_trip(
      trap, baseline_report_hard(trap, 1, rand_assign_hard(trap, 1, 2),
                                 "baseline-rand", std::uint64_t{2}));
  const Instance five(5, 1, {{0}, {0}, {0}, {0}, {0}}, {0.1});
  expect_report_round_trip(five, solve_hard(five, 2));
}

TEST(ReportJson, FractionalUsesTriples) {
  const Instance inst(2, 2, {{0, 1}, {0, 1}}, {1.0 / 6, 1.0 / 6});
  const Json doc = report_to_json(inst, solve_soft(inst, 1, 1.0));
  const Json& x = doc.at("fractional").at("x");
  ASSERT_EQ(x.size(), 4u);
  EXPECT_EQ(x[1][0], 1);
  EXPECT_EQ(x[1][1], 2);
  EXPECT_EQ(doc.at("fractional").at("y").size(), 2u);
}

TEST(ReportJson, InfeasibleHasNoObjective) {
  const Instance five(5, 1, {{0}, {0}, {0}, {0}, {0}}, {0.1});
  const Json doc = report_to_json(five, solve_hard(five, 2));
  EXPECT_EQ(doc.at("status"), "Infeasible");
  EXPECT_FALSE(doc.contains("objective"));
  EXPECT_FALSE(doc.contains("nominee"));
  EXPECT_THROW(report_from_json(Json::parse(R"({"status":"Done","variant":"hard","solver":"flow"})")),
               FormatError);
}

TEST(NetworkJson, OneBasedEndpoints) {
  const Json doc = network_to_json(
      build_hard_network(Instance(1, 1, {{0}}, {0.25}), 1).network);
  EXPECT_EQ(doc.at("vertices"), 4);
  ASSERT_EQ(doc.at("edges").size(), 4u);
  EXPECT_EQ(doc.at("edges")[0].at("tail"), 1);
  EXPECT_EQ(doc.at("edges")[0].at("head"), 3);
  EXPECT_EQ(doc.at("edges")[1].at("cost"), 0.25);
}

TEST(LpJson, InfiniteBoundIsNull) {
  const Json doc = lp_to_json(build_soft_lp(Instance(1, 1, {{0}}, {0.25}), 1, 2.0).program);
  EXPECT_TRUE(doc.at("variables")[1].at("upper").is_null());
  EXPECT_EQ(doc.at("rows")[1].at("sense"), ">=");
  EXPECT_EQ(doc.at("rows")[0].at("terms"), Json::parse("[[1,1.0]]"));
}

TEST(Csv, ImportsWithHeaderAndBlankLines) {
  std::istringstream pairs("paper_id,author_id\n1,2\n1,1\n\n2,1\n");
  std::istringstream probs("author_id,p\n1,0.25\n2, 0.5\n");
  const Instance inst = import_csv(pairs, probs);
  EXPECT_EQ(inst, Instance(2, 2, {{0, 1}, {0}}, {0.25, 0.5}));
}

TEST(Csv, RejectsBadInput) {
  {
    std::istringstream pairs("1,1\n1,1\n");
    std::istringstream probs("1,0.5\n");
    EXPECT_THROW(import_csv(pairs, probs), FormatError);
  }
  {
    std::istringstream pairs("1,3\n");
    std::istringstream probs("1,0.5\n");
    EXPECT_THROW(import_csv(pairs, probs), FormatError);
  }
  {
    std::istringstream pairs("1,1\n1,x\n");
    std::istringstream probs("1,0.5\n");
    EXPECT_THROW(import_csv(pairs, probs), FormatError);
  }
  {
    std::istringstream pairs("1,1\n");
    std::istringstream probs("1,0.5\n1,0.25\n");
    EXPECT_THROW(import_csv(pairs, probs), FormatError);
  }
}

}  // namespace
}  // namespace deskrisk
