// Copyright 2026 The cvxdom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "cvxdom/cvxdom.hpp"
#include "test_support.hpp"

using namespace cvxdom;

namespace {

std::vector<BenchInstance> fixture_instances() {
  return {{"g1", testsup::load_fixture("g1.col")},
          {"g2", testsup::load_fixture("g2.col")},
          {"g3", testsup::load_fixture("g3.col")}};
}

}  // namespace

TEST_CASE("bench runs every problem on every instance") {
  BenchResult r = run_bench(fixture_instances(), BenchOptions{});
  REQUIRE(r.rows.size() == 9);

  // instance-major order, problems in the requested sequence
  const char* expect[][3] = {
      {"g1", "ds", "ds_only"},      {"g1", "wcvxds", "wcvx"},
      {"g1", "cvxds", "cvx_full"},  {"g2", "ds", "ds_only"},
      {"g2", "wcvxds", "wcvx"},     {"g2", "cvxds", "cvx_full"},
      {"g3", "ds", "ds_only"},      {"g3", "wcvxds", "wcvx"},
      {"g3", "cvxds", "cvx_full"},
  };
  int expect_value[] = {2, 3, 4, 3, 3, 4, 3, 3, 3};
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    const BenchRow& row = r.rows[i];
    REQUIRE(row.instance == expect[i][0]);
    REQUIRE(to_string(row.problem) == expect[i][1]);
    REQUIRE(to_string(row.formulation) == expect[i][2]);
    REQUIRE(row.status == SolveStatus::optimal);
    REQUIRE(row.value == expect_value[i]);
    REQUIRE(row.constraints_dom == row.n);
  }

  REQUIRE(r.summary.instances == 3);
  REQUIRE(r.summary.rows == 9);
  REQUIRE(r.summary.optimal == 9);
  REQUIRE(r.summary.timeouts == 0);
  REQUIRE(r.summary.full_reduced_pairs == 0);
  REQUIRE(r.summary.full_reduced_agreements == 0);
  REQUIRE(r.summary.lemma1_checked == 3);
  REQUIRE(r.summary.lemma1_violations == 0);
}

TEST_CASE("bench compares the two convexity formulations") {
  BenchOptions opts;
  opts.run_reduced = true;
  BenchResult r = run_bench(fixture_instances(), opts);
  REQUIRE(r.rows.size() == 12);
  REQUIRE(r.summary.full_reduced_pairs == 3);
  REQUIRE(r.summary.full_reduced_agreements == 3);
  // per instance the reduced row directly follows the full row
  REQUIRE(to_string(r.rows[2].formulation) == "cvx_full");
  REQUIRE(to_string(r.rows[3].formulation) == "cvx_reduced");
  REQUIRE(r.rows[2].value == r.rows[3].value);
  REQUIRE(r.rows[3].constraints_side <= r.rows[2].constraints_side);
}

TEST_CASE("bench csv is stable") {
  BenchResult r = run_bench(fixture_instances(), BenchOptions{});
  std::string csv = to_csv(r.rows);
  REQUIRE(csv.rfind("instance,n,m,problem,formulation,constraints_dom,"
                    "constraints_side,value,status,nodes,millis\n",
                    0) == 0);
  REQUIRE(csv.find("\ng1,6,6,ds,ds_only,6,0,2,optimal,") != std::string::npos);
  REQUIRE(csv.find("\ng3,7,8,cvxds,cvx_full,7,") != std::string::npos);
  // one line per row plus the header
  std::size_t lines = 0;
  for (char ch : csv)
    if (ch == '\n') ++lines;
  REQUIRE(lines == 10);
}

TEST_CASE("bench rows do not depend on the worker count") {
  BenchOptions serial;
  serial.run_reduced = true;
  serial.jobs = 1;
  BenchOptions parallel = serial;
  parallel.jobs = 3;
  BenchResult a = run_bench(fixture_instances(), serial);
  BenchResult b = run_bench(fixture_instances(), parallel);
  REQUIRE(a.rows.size() == b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    REQUIRE(a.rows[i].instance == b.rows[i].instance);
    REQUIRE(a.rows[i].problem == b.rows[i].problem);
    REQUIRE(a.rows[i].formulation == b.rows[i].formulation);
    REQUIRE(a.rows[i].value == b.rows[i].value);
    REQUIRE(a.rows[i].nodes == b.rows[i].nodes);
  }
}

TEST_CASE("bench rejects empty or contradictory setups") {
  REQUIRE_THROWS_AS(run_bench({}, BenchOptions{}), Error);

  BenchOptions no_problems;
  no_problems.problems.clear();
  REQUIRE_THROWS_AS(run_bench(fixture_instances(), no_problems), Error);

  BenchOptions no_formulation;
  no_formulation.problems = {Problem::cvxds};
  no_formulation.run_full = false;
  REQUIRE_THROWS_WITH(
      run_bench(fixture_instances(), no_formulation),
      Catch::Matchers::ContainsSubstring("no formulation enabled"));
}

TEST_CASE("bench sorts instances by name") {
  std::vector<BenchInstance> shuffled = {
      {"g3", testsup::load_fixture("g3.col")},
      {"g1", testsup::load_fixture("g1.col")},
      {"g2", testsup::load_fixture("g2.col")}};
  BenchOptions opts;
  opts.problems = {Problem::ds};
  BenchResult r = run_bench(shuffled, opts);
  REQUIRE(r.rows.size() == 3);
  REQUIRE(r.rows[0].instance == "g1");
  REQUIRE(r.rows[1].instance == "g2");
  REQUIRE(r.rows[2].instance == "g3");
}

TEST_CASE("bench summary json carries every counter") {
  BenchOptions opts;
  opts.run_reduced = true;
  BenchResult r = run_bench(fixture_instances(), opts);
  auto j = to_json(r.summary);
  REQUIRE(j["instances"] == 3);
  REQUIRE(j["rows"] == 12);
  REQUIRE(j["optimal"] == 12);
  REQUIRE(j["timeouts"] == 0);
  REQUIRE(j["full_reduced_pairs"] == 3);
  REQUIRE(j["full_reduced_agreements"] == 3);
  REQUIRE(j["lemma1_checked"] == 3);
  REQUIRE(j["lemma1_violations"] == 0);
}
