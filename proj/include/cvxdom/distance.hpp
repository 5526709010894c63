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

#include <cassert>
#include <cstdint>
#include <vector>

#include "cvxdom/graph.hpp"

namespace cvxdom {

/// All-pairs shortest-path hop counts, one BFS per vertex (O(n*m) total).
/// Finite everywhere because the graph is connected. Immutable once built.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(const Graph& g)
      : n_(g.vertex_count()),
        d_(static_cast<std::size_t>(n_) * n_, kUnreached) {
    std::vector<int> queue;
    queue.reserve(n_);
    for (int src = 0; src < n_; ++src) {
      std::uint16_t* row = d_.data() + static_cast<std::size_t>(src) * n_;
      queue.clear();
      queue.push_back(src);
      row[src] = 0;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        std::uint16_t next = static_cast<std::uint16_t>(row[u] + 1);
        for (int v : g.neighbors(u)) {
          if (row[v] == kUnreached) {
            row[v] = next;
            queue.push_back(v);
          }
        }
      }
      assert(static_cast<int>(queue.size()) == n_);
    }
  }

  int vertex_count() const { return n_; }

  int distance(int u, int v) const {
    assert(u >= 0 && u < n_ && v >= 0 && v < n_);
    return d_[static_cast<std::size_t>(u) * n_ + v];
  }

  int operator()(int u, int v) const { return distance(u, v); }

 private:
  static constexpr std::uint16_t kUnreached = 0xffff;

  int n_;
  std::vector<std::uint16_t> d_;
};

/// True iff k lies on some shortest i-j path, i.e. d(i,k)+d(k,j) = d(i,j).
inline bool on_shortest_path(const DistanceMatrix& dm, int i, int k, int j) {
  return dm(i, k) + dm(k, j) == dm(i, j);
}

}  // namespace cvxdom
