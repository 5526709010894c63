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

#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cvxdom/errors.hpp"
#include "cvxdom/graph.hpp"

namespace cvxdom {

namespace detail {

/// Uniform draw from [0, bound) by rejection. mt19937_64 output is pinned by
/// the standard, so generated instances are identical across platforms
/// (std::uniform_int_distribution is not and is deliberately avoided).
inline std::uint64_t bounded_rand(std::mt19937_64& rng, std::uint64_t bound) {
  std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return r % bound;
}

}  // namespace detail

inline Graph gen_path(int n) {
  if (n < 1) throw Error("path requires n >= 1");
  if (n == 1) return Graph::single_vertex();
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(n) - 1);
  for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
  return Graph::from_edges(edges);
}

inline Graph gen_cycle(int n) {
  if (n < 3) throw Error("cycle requires n >= 3");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
  edges.push_back({n, 1});
  return Graph::from_edges(edges);
}

/// r-by-c grid; vertex (i,j) has id i*c + j + 1.
inline Graph gen_grid(int rows, int cols) {
  if (rows < 1 || cols < 1) throw Error("grid requires rows, cols >= 1");
  if (rows == 1 && cols == 1) return Graph::single_vertex();
  auto id = [cols](int i, int j) { return i * cols + j + 1; };
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      if (j + 1 < cols) edges.push_back({id(i, j), id(i, j + 1)});
      if (i + 1 < rows) edges.push_back({id(i, j), id(i + 1, j)});
    }
  return Graph::from_edges(edges);
}

/// r-by-c torus grid (wrap-around in both directions), 4-regular with
/// exactly 2*r*c edges. Wrap edges coincide with grid edges below 3, hence
/// the minimum.
inline Graph gen_torus(int rows, int cols) {
  if (rows < 3 || cols < 3) throw Error("torus requires rows, cols >= 3");
  auto id = [cols](int i, int j) { return i * cols + j + 1; };
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(rows) * cols * 2);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      edges.push_back({id(i, j), id(i, (j + 1) % cols)});
      edges.push_back({id(i, j), id((i + 1) % rows, j)});
    }
  return Graph::from_edges(edges);
}

/// Uniform random connected graph with n vertices and m edges: a partial
/// Fisher-Yates shuffle of the pair universe picks m distinct edges, redrawn
/// until the result is connected (bounded retries).
inline Graph gen_gnm(int n, std::uint64_t m, std::uint64_t seed) {
  if (n < 1) throw Error("gnm requires n >= 1");
  if (n > kMaxVertices) throw Error("gnm: n exceeds the vertex limit");
  std::uint64_t total =
      static_cast<std::uint64_t>(n) * (static_cast<std::uint64_t>(n) - 1) / 2;
  if (m > total)
    throw Error("gnm: m exceeds the " + std::to_string(total) +
                " possible edges");
  if (m + 1 < static_cast<std::uint64_t>(n))
    throw Error("gnm: m < n - 1 can never be connected");
  if (n == 1) return Graph::single_vertex();

  std::vector<std::pair<int, int>> universe;
  universe.reserve(total);
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) universe.push_back({u, v});

  std::mt19937_64 rng(seed);
  std::vector<int> parent(static_cast<std::size_t>(n) + 1);
  auto find = [&parent](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  constexpr int kMaxAttempts = 1000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    for (std::uint64_t i = 0; i < m; ++i) {
      std::uint64_t j = i + detail::bounded_rand(rng, total - i);
      std::swap(universe[i], universe[j]);
    }
    for (int v = 0; v <= n; ++v) parent[v] = v;
    int components = n;
    for (std::uint64_t i = 0; i < m; ++i) {
      int a = find(universe[i].first);
      int b = find(universe[i].second);
      if (a != b) {
        parent[a] = b;
        --components;
      }
    }
    if (components == 1)
      return Graph::from_edges(
          {universe.begin(),
           universe.begin() + static_cast<std::ptrdiff_t>(m)},
          n);
  }
  throw Error("gnm: no connected graph with n=" + std::to_string(n) +
              " m=" + std::to_string(m) + " after " +
              std::to_string(kMaxAttempts) + " attempts");
}

}  // namespace cvxdom
