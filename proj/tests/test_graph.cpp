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

TEST_CASE("from_edges compacts non-contiguous ids") {
  Graph g = Graph::from_edges({{1, 2}, {2, 5}, {5, 9}});
  REQUIRE(g.vertex_count() == 4);
  REQUIRE(g.edge_count() == 3);
  REQUIRE(g.original_ids() == std::vector<int>{1, 2, 5, 9});
  REQUIRE(g.original_id(2) == 5);
  REQUIRE(g.require_original(9) == 3);
  REQUIRE_FALSE(g.find_original(3).has_value());
  REQUIRE(g.adjacent(0, 1));
  REQUIRE_FALSE(g.adjacent(0, 3));
  REQUIRE(g.degree(1) == 2);
}

TEST_CASE("from_edges rejects bad input") {
  REQUIRE_THROWS_AS(Graph::from_edges({}), Error);
  REQUIRE_THROWS_AS(Graph::from_edges({{1, 1}}), Error);
  REQUIRE_THROWS_AS(Graph::from_edges({{1, 2}, {2, 1}}), Error);
  REQUIRE_THROWS_AS(Graph::from_edges({{0, 2}}), Error);
  REQUIRE_THROWS_AS(Graph::from_edges({{1, 2}, {3, 4}}), Error);
  REQUIRE_THROWS_WITH(Graph::from_edges({{1, 9}}, 8),
                      Catch::Matchers::ContainsSubstring("out of 1..8"));
}

TEST_CASE("single vertex graph") {
  Graph g = Graph::single_vertex();
  REQUIRE(g.vertex_count() == 1);
  REQUIRE(g.edge_count() == 0);
  REQUIRE(g.degree(0) == 0);
  REQUIRE(g.original_id(0) == 1);
}

TEST_CASE("fingerprint identifies the edge set") {
  Graph a = Graph::from_edges({{1, 2}, {2, 3}});
  Graph b = Graph::from_edges({{2, 3}, {1, 2}});
  Graph c = Graph::from_edges({{1, 2}, {1, 3}});
  REQUIRE(a.fingerprint() == b.fingerprint());
  REQUIRE(a.fingerprint() != c.fingerprint());
}

TEST_CASE("dimacs parsing") {
  Graph g = parse_graph("c comment\np edge 4 3\ne 1 2\ne 2 3\ne 3 4\n");
  REQUIRE(g.vertex_count() == 4);
  REQUIRE(g.edge_count() == 3);

  SECTION("one-vertex graph") {
    Graph k1 = parse_graph("p edge 1 0\n");
    REQUIRE(k1.vertex_count() == 1);
  }
  SECTION("declared count bounds the ids") {
    REQUIRE_THROWS_WITH(parse_graph("p edge 3 1\ne 1 9\n"),
                        Catch::Matchers::ContainsSubstring("out of 1..3"));
  }
  SECTION("line numbers in errors") {
    try {
      parse_graph("p edge 3 2\ne 1 2\ne 2\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      REQUIRE(e.line() == 3);
      REQUIRE_THAT(e.what(), Catch::Matchers::ContainsSubstring("line 3"));
    }
  }
  SECTION("edge before header") {
    REQUIRE_THROWS_AS(parse_graph("e 1 2\np edge 2 1\n"), ParseError);
  }
  SECTION("duplicate header") {
    REQUIRE_THROWS_AS(parse_graph("p edge 2 1\np edge 2 1\ne 1 2\n"),
                      ParseError);
  }
  SECTION("no edges but several vertices") {
    REQUIRE_THROWS_WITH(parse_graph("p edge 3 0\n"),
                        Catch::Matchers::ContainsSubstring("not connected"));
  }
}

TEST_CASE("edge list parsing and format detection") {
  Graph g = parse_graph("# comment\n1 2\n2 3\n");
  REQUIRE(g.vertex_count() == 3);
  REQUIRE(detect_format("c x\np edge 2 1\ne 1 2\n") == GraphFormat::dimacs);
  REQUIRE(detect_format("1 2\n") == GraphFormat::edge_list);
  REQUIRE(detect_format("# c\n7 9\n") == GraphFormat::edge_list);
  REQUIRE_THROWS_AS(detect_format("graph {}\n"), ParseError);
  REQUIRE_THROWS_AS(parse_graph(""), Error);
  REQUIRE_THROWS_AS(parse_graph("# only comments\n"), Error);
}

TEST_CASE("dimacs round-trip preserves the graph") {
  for (const char* name : {"g1.col", "g2.col", "g3.col", "p3.col"}) {
    Graph g = testsup::load_fixture(name);
    Graph back = parse_graph(write_dimacs(g));
    REQUIRE(back.fingerprint() == g.fingerprint());
    REQUIRE(back.original_ids() == g.original_ids());
    REQUIRE(back.edges() == g.edges());
  }
}

TEST_CASE("fixture g1 skips id 6") {
  Graph g = testsup::load_fixture("g1.col");
  REQUIRE(g.vertex_count() == 6);
  REQUIRE(g.edge_count() == 6);
  REQUIRE(g.original_ids() == std::vector<int>{1, 2, 3, 4, 5, 7});
  REQUIRE_FALSE(g.find_original(6).has_value());
}

TEST_CASE("vertex sets") {
  Graph g = testsup::load_fixture("g1.col");
  VertexSet s = VertexSet::from_original(g, {7, 1, 3});
  REQUIRE(s.size() == 3);
  REQUIRE(s.members() == std::vector<int>{0, 2, 5});
  REQUIRE(s.to_original(g) == std::vector<int>{1, 3, 7});
  REQUIRE(s.contains(2));
  REQUIRE_FALSE(s.contains(1));
  REQUIRE_THROWS_WITH(VertexSet::from_original(g, {6}),
                      Catch::Matchers::ContainsSubstring("not present"));
  REQUIRE(VertexSet({2, 0, 2, 0}).members() == std::vector<int>{0, 2});
}

TEST_CASE("bfs distances agree with Floyd-Warshall") {
  std::vector<Graph> graphs;
  for (const char* name : {"g1.col", "g2.col", "g3.col"})
    graphs.push_back(testsup::load_fixture(name));
  graphs.push_back(gen_grid(3, 4));
  graphs.push_back(gen_cycle(9));
  for (std::uint64_t seed = 1; seed <= 8; ++seed)
    graphs.push_back(gen_gnm(11, 16, seed));

  for (const Graph& g : graphs) {
    DistanceMatrix dm(g);
    auto ref = testsup::fw_distances(g);
    for (int u = 0; u < g.vertex_count(); ++u)
      for (int v = 0; v < g.vertex_count(); ++v)
        REQUIRE(dm(u, v) == ref[u][v]);
  }
}

TEST_CASE("known distances on fixtures") {
  Graph g1 = testsup::load_fixture("g1.col");
  DistanceMatrix d1(g1);
  auto d = [&](int a, int b) {
    return d1(g1.require_original(a), g1.require_original(b));
  };
  REQUIRE(d(1, 3) == 2);
  REQUIRE(d(5, 7) == 4);
  REQUIRE(d(2, 4) == 2);

  Graph g3 = testsup::load_fixture("g3.col");
  DistanceMatrix d3(g3);
  REQUIRE(d3(g3.require_original(5), g3.require_original(7)) == 3);
}

TEST_CASE("shortest path membership") {
  Graph p4 = gen_path(4);
  DistanceMatrix dm(p4);
  REQUIRE(on_shortest_path(dm, 0, 1, 3));
  REQUIRE(on_shortest_path(dm, 0, 2, 3));
  REQUIRE_FALSE(on_shortest_path(dm, 0, 3, 2));
  REQUIRE(on_shortest_path(dm, 0, 0, 3));
}
