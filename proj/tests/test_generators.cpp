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

#include <catch2/catch_amalgamated.hpp>

#include "cvxdom/cvxdom.hpp"
#include "test_support.hpp"

using namespace cvxdom;

TEST_CASE("path generator") {
  Graph p5 = gen_path(5);
  REQUIRE(p5.vertex_count() == 5);
  REQUIRE(p5.edge_count() == 4);
  DistanceMatrix dm(p5);
  REQUIRE(dm(0, 4) == 4);

  Graph p1 = gen_path(1);
  REQUIRE(p1.vertex_count() == 1);
  REQUIRE(p1.edge_count() == 0);

  REQUIRE_THROWS_AS(gen_path(0), Error);
}

TEST_CASE("cycle generator") {
  Graph c7 = gen_cycle(7);
  REQUIRE(c7.vertex_count() == 7);
  REQUIRE(c7.edge_count() == 7);
  for (int v = 0; v < 7; ++v) REQUIRE(c7.degree(v) == 2);
  REQUIRE_THROWS_AS(gen_cycle(2), Error);
}

TEST_CASE("grid generator") {
  Graph g = gen_grid(2, 3);
  REQUIRE(g.vertex_count() == 6);
  REQUIRE(g.edge_count() == 7);

  // a one-row grid is a path
  Graph row = gen_grid(1, 5);
  REQUIRE(row.vertex_count() == 5);
  REQUIRE(row.edge_count() == 4);

  Graph k1 = gen_grid(1, 1);
  REQUIRE(k1.vertex_count() == 1);

  REQUIRE_THROWS_AS(gen_grid(0, 3), Error);
}

TEST_CASE("torus generator") {
  Graph t = gen_torus(3, 4);
  REQUIRE(t.vertex_count() == 12);
  REQUIRE(t.edge_count() == 24);
  for (int v = 0; v < 12; ++v) REQUIRE(t.degree(v) == 4);
  REQUIRE_THROWS_AS(gen_torus(2, 3), Error);
  REQUIRE_THROWS_AS(gen_torus(3, 2), Error);
}

TEST_CASE("random graphs are connected and reproducible") {
  Graph a = gen_gnm(10, 14, 42);
  REQUIRE(a.vertex_count() == 10);
  REQUIRE(a.edge_count() == 14);
  DistanceMatrix dm(a);
  for (int v = 1; v < 10; ++v) REQUIRE(dm(0, v) < 10);

  Graph b = gen_gnm(10, 14, 42);
  REQUIRE(b.fingerprint() == a.fingerprint());
  REQUIRE(b.edges() == a.edges());

  Graph c = gen_gnm(10, 14, 43);
  REQUIRE(c.fingerprint() != a.fingerprint());
}

TEST_CASE("random generator rejects impossible sizes") {
  REQUIRE_THROWS_AS(gen_gnm(5, 3, 1), Error);   // below the spanning tree
  REQUIRE_THROWS_AS(gen_gnm(5, 11, 1), Error);  // above the complete graph
  REQUIRE_THROWS_AS(gen_gnm(0, 0, 1), Error);

  Graph k1 = gen_gnm(1, 0, 9);
  REQUIRE(k1.vertex_count() == 1);
  Graph k5 = gen_gnm(5, 10, 9);
  REQUIRE(k5.edge_count() == 10);
}

TEST_CASE("generated graphs serialize deterministically") {
  Graph t = gen_torus(3, 3);
  std::string once = write_dimacs(t, "torus 3 3");
  std::string twice = write_dimacs(t, "torus 3 3");
  REQUIRE(once == twice);
  Graph back = parse_dimacs(once);
  REQUIRE(back.fingerprint() == t.fingerprint());
}
