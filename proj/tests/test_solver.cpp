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

#include <cstdint>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "cvxdom/cvxdom.hpp"
#include "test_support.hpp"

using namespace cvxdom;

namespace {

struct FrozenRow {
  const char* fixture;
  int ds;
  int wcvx;
  int cvx;
};

// minima established by exhaustive search over the fixture graphs
constexpr FrozenRow kFrozen[] = {
    {"p3.col", 1, 1, 1},
    {"g1.col", 2, 3, 4},
    {"g2.col", 3, 3, 4},
    {"g3.col", 3, 3, 3},
};

SolveResult solve_on(const Graph& g, Formulation f, Budget budget = {}) {
  DistanceMatrix dm(g);
  return solve(build_model(g, dm, f), budget);
}

void require_feasible_witness(const Graph& g, Formulation f,
                              const SolveResult& r) {
  DistanceMatrix dm(g);
  LinearModel m = build_model(g, dm, f);
  REQUIRE(verify_witness(m, r.witness));
  DominationKind kind = f == Formulation::ds_only ? DominationKind::plain
                        : f == Formulation::wcvx  ? DominationKind::weakly_convex
                                                  : DominationKind::convex;
  REQUIRE(satisfies(g, dm, r.witness, kind));
}

}  // namespace

TEST_CASE("clausify turns covering rows into positive clauses") {
  Graph p3 = testsup::load_fixture("p3.col");
  DistanceMatrix dm(p3);
  ClauseSet cs = clausify(build_domination(p3, dm));
  REQUIRE(cs.num_vars == 3);
  REQUIRE(cs.size() == 3);
  REQUIRE(cs.clauses[0].literals == std::vector<int>{1, 2});
  REQUIRE(cs.clauses[1].literals == std::vector<int>{1, 2, 3});
  REQUIRE(cs.clauses[2].literals == std::vector<int>{2, 3});
  for (std::size_t i = 0; i < cs.size(); ++i) {
    REQUIRE(cs.origin[i] == i);
    REQUIRE(cs.clause_tag[i] == ConstraintTag::domination);
  }
}

TEST_CASE("clausify keeps mixed-sign rows intact") {
  Graph g1 = testsup::load_fixture("g1.col");
  DistanceMatrix dm(g1);
  LinearModel m = build_wcvx(g1, dm);
  ClauseSet cs = clausify(m);
  // find the clause that came from the 1-3 weak convexity row
  bool found = false;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (m.constraints[cs.origin[i]].name() != "wcvx_1_3") continue;
    found = true;
    REQUIRE(cs.clause_tag[i] == ConstraintTag::weak_convexity);
    // -x_1 - x_3 + x_2 + x_4 >= -1  <=>  (!1 or 2 or !3 or 4)
    REQUIRE(cs.clauses[i].literals == std::vector<int>{-1, 2, -3, 4});
  }
  REQUIRE(found);
}

TEST_CASE("clausify rejects non-clausal rows") {
  Graph p3 = testsup::load_fixture("p3.col");
  DistanceMatrix dm(p3);
  BuildOptions keep;
  keep.keep_trivial = true;
  REQUIRE_THROWS_WITH(clausify(build_wcvx(p3, dm, keep)),
                      Catch::Matchers::ContainsSubstring("not clausal"));

  LinearModel bad = build_domination(p3, dm);
  bad.constraints[0].rhs = 2;
  REQUIRE_THROWS_AS(clausify(bad), Error);
}

TEST_CASE("solver reproduces the frozen fixture minima") {
  for (const FrozenRow& row : kFrozen) {
    Graph g = testsup::load_fixture(row.fixture);

    SolveResult ds = solve_on(g, Formulation::ds_only);
    REQUIRE(ds.status == SolveStatus::optimal);
    REQUIRE(ds.value == row.ds);
    require_feasible_witness(g, Formulation::ds_only, ds);

    SolveResult wc = solve_on(g, Formulation::wcvx);
    REQUIRE(wc.status == SolveStatus::optimal);
    REQUIRE(wc.value == row.wcvx);
    require_feasible_witness(g, Formulation::wcvx, wc);

    for (Formulation f : {Formulation::cvx_full, Formulation::cvx_reduced}) {
      SolveResult cv = solve_on(g, f);
      REQUIRE(cv.status == SolveStatus::optimal);
      REQUIRE(cv.value == row.cvx);
      require_feasible_witness(g, f, cv);
    }
  }
}

TEST_CASE("pinned witnesses come out of the deterministic search") {
  Graph g1 = testsup::load_fixture("g1.col");
  SolveResult ds = solve_on(g1, Formulation::ds_only);
  REQUIRE(ds.witness.to_original(g1) == std::vector<int>{1, 3});

  Graph g3 = testsup::load_fixture("g3.col");
  SolveResult cv = solve_on(g3, Formulation::cvx_full);
  REQUIRE(cv.witness.to_original(g3) == std::vector<int>{1, 3, 4});
}

TEST_CASE("repeat solves are bit-identical") {
  Graph g2 = testsup::load_fixture("g2.col");
  SolveResult a = solve_on(g2, Formulation::cvx_full);
  SolveResult b = solve_on(g2, Formulation::cvx_full);
  REQUIRE(a.value == b.value);
  REQUIRE(a.witness.members() == b.witness.members());
  REQUIRE(a.stats.nodes == b.stats.nodes);
  REQUIRE(a.stats.propagations == b.stats.propagations);
}

TEST_CASE("complete and cyclic extremes") {
  Graph k4 = Graph::from_edges(
      {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  SolveResult r = solve_on(k4, Formulation::ds_only);
  REQUIRE(r.value == 1);

  // in an even cycle the only convex dominating set is the whole cycle
  Graph c6 = gen_cycle(6);
  SolveResult cv = solve_on(c6, Formulation::cvx_full);
  REQUIRE(cv.value == 6);
  SolveResult pl = solve_on(c6, Formulation::ds_only);
  REQUIRE(pl.value == 2);
}

TEST_CASE("node budget yields a timeout with an incumbent") {
  Graph c6 = gen_cycle(6);
  Budget b;
  b.node_limit = 1;
  SolveResult r = solve_on(c6, Formulation::cvx_full, b);
  REQUIRE(r.status == SolveStatus::timeout);
  REQUIRE(r.value.has_value());
  REQUIRE(*r.value >= 6);  // greedy incumbent, not yet proven optimal
  DistanceMatrix dm(c6);
  REQUIRE(verify_witness(build_cvx_full(c6, dm), r.witness));
}

TEST_CASE("time budget is honored") {
  // root bound 2 < incumbent 6, so the search must branch and hit the clock
  Graph c6 = gen_cycle(6);
  Budget b;
  b.time_limit_seconds = 0.0;
  SolveResult r = solve_on(c6, Formulation::cvx_full, b);
  REQUIRE(r.status == SolveStatus::timeout);
  REQUIRE(r.value.has_value());
}

TEST_CASE("contradictory clauses are infeasible") {
  ClauseSet cs;
  cs.num_vars = 1;
  cs.clauses.push_back({{1}});
  cs.clauses.push_back({{-1}});
  cs.origin = {0, 1};
  cs.clause_tag = {ConstraintTag::domination, ConstraintTag::convexity};
  SolveResult r = solve(cs);
  REQUIRE(r.status == SolveStatus::infeasible);
  REQUIRE_FALSE(r.value.has_value());
}

TEST_CASE("no clauses means the empty set wins") {
  ClauseSet cs;
  cs.num_vars = 3;
  SolveResult r = solve(cs);
  REQUIRE(r.status == SolveStatus::optimal);
  REQUIRE(r.value == 0);
  REQUIRE(r.witness.empty());
}

TEST_CASE("solver matches exhaustive search on random graphs") {
  int checked = 0;
  for (std::uint64_t seed = 200; seed < 209; ++seed) {
    for (int n : {6, 8, 9}) {
      int m = n + static_cast<int>(seed % 4);
      Graph g = gen_gnm(n, m, seed);
      DistanceMatrix dm(g);
      struct Case {
        Formulation f;
        DominationKind kind;
      };
      for (Case c : {Case{Formulation::ds_only, DominationKind::plain},
                     Case{Formulation::wcvx, DominationKind::weakly_convex},
                     Case{Formulation::cvx_full, DominationKind::convex},
                     Case{Formulation::cvx_reduced, DominationKind::convex}}) {
        SolveResult r = solve(build_model(g, dm, c.f));
        REQUIRE(r.status == SolveStatus::optimal);
        REQUIRE(*r.value == testsup::ref_minimum(g, c.kind));
        REQUIRE(satisfies(g, dm, r.witness, c.kind));
        ++checked;
      }
    }
  }
  REQUIRE(checked == 108);
}

TEST_CASE("witness verification evaluates every row") {
  Graph g2 = testsup::load_fixture("g2.col");
  DistanceMatrix dm(g2);
  LinearModel m = build_cvx_full(g2, dm);
  REQUIRE(verify_witness(m, VertexSet::from_original(g2, {1, 2, 3, 4})));
  REQUIRE_FALSE(verify_witness(m, VertexSet::from_original(g2, {1, 3, 4})));
  REQUIRE(verify_witness(m, VertexSet::from_original(
                                g2, {1, 2, 3, 4, 5, 7, 8})));
  REQUIRE_FALSE(verify_witness(m, VertexSet{}));
}
