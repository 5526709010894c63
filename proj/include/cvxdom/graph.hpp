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

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cvxdom/errors.hpp"

namespace cvxdom {

/// Hop distances are stored as 16-bit counts, which caps the vertex count.
inline constexpr int kMaxVertices = 65535;

/// Simple connected undirected graph. Immutable once built.
///
/// Input vertex ids are arbitrary positive integers; they are compacted to
/// internal indices 0..n-1 (in ascending id order) and the original ids are
/// kept for all user-facing output. Loops, parallel edges and disconnected
/// inputs are rejected at construction.
class Graph {
 public:
  /// Builds a graph from undirected edges given in original vertex ids.
  /// If `declared_max_id` is positive, every id must lie in 1..declared_max_id.
  static Graph from_edges(std::vector<std::pair<int, int>> edges,
                          int declared_max_id = 0) {
    if (edges.empty()) throw Error("graph has no edges and no vertices");
    for (auto& [u, v] : edges) {
      if (u < 1 || v < 1)
        throw Error("vertex id " + std::to_string(std::min(u, v)) +
                    " out of range (ids are 1-based)");
      if (declared_max_id > 0 && (u > declared_max_id || v > declared_max_id))
        throw Error("vertex id " + std::to_string(std::max(u, v)) +
                    " out of 1.." + std::to_string(declared_max_id));
      if (u == v)
        throw Error("loop edge (" + std::to_string(u) + "," +
                    std::to_string(v) + ") not allowed");
      if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end())
      throw Error("duplicate edge (" + std::to_string(dup->first) + "," +
                  std::to_string(dup->second) + ")");

    Graph g;
    for (const auto& [u, v] : edges) {
      g.original_ids_.push_back(u);
      g.original_ids_.push_back(v);
    }
    std::sort(g.original_ids_.begin(), g.original_ids_.end());
    g.original_ids_.erase(
        std::unique(g.original_ids_.begin(), g.original_ids_.end()),
        g.original_ids_.end());
    g.n_ = static_cast<int>(g.original_ids_.size());
    if (g.n_ > kMaxVertices)
      throw Error("graph has " + std::to_string(g.n_) +
                  " vertices, limit is " + std::to_string(kMaxVertices));

    g.adj_.assign(g.n_, {});
    g.edges_.reserve(edges.size());
    for (const auto& [u, v] : edges) {
      int a = *g.find_original(u);
      int b = *g.find_original(v);
      g.edges_.emplace_back(a, b);
      g.adj_[a].push_back(b);
      g.adj_[b].push_back(a);
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());

    g.check_connected();
    g.fingerprint_ = g.compute_fingerprint(edges);
    return g;
  }

  /// The one-vertex graph (expressible in DIMACS as "p edge 1 0").
  static Graph single_vertex(int original_id = 1) {
    if (original_id < 1) throw Error("vertex id out of range (ids are 1-based)");
    Graph g;
    g.n_ = 1;
    g.original_ids_ = {original_id};
    g.adj_.assign(1, {});
    g.fingerprint_ = g.compute_fingerprint({});
    return g;
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  /// Sorted neighbor list of an internal vertex index.
  std::span<const int> neighbors(int v) const {
    assert(v >= 0 && v < n_);
    return adj_[v];
  }

  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

  bool adjacent(int u, int v) const {
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
  }

  /// Internal edge list, pairs (u,v) with u < v, sorted.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  int original_id(int v) const {
    assert(v >= 0 && v < n_);
    return original_ids_[v];
  }

  /// Ascending original ids; position = internal index.
  const std::vector<int>& original_ids() const { return original_ids_; }

  int max_original_id() const { return original_ids_.back(); }

  std::optional<int> find_original(int original_id) const {
    auto it = std::lower_bound(original_ids_.begin(), original_ids_.end(),
                               original_id);
    if (it == original_ids_.end() || *it != original_id) return std::nullopt;
    return static_cast<int>(it - original_ids_.begin());
  }

  int require_original(int original_id) const {
    auto idx = find_original(original_id);
    if (!idx)
      throw Error("vertex id " + std::to_string(original_id) +
                  " not present in graph");
    return *idx;
  }

  /// FNV-1a over the vertex count and the original-id edge list. Identifies
  /// the input graph in model metadata.
  std::uint64_t fingerprint() const { return fingerprint_; }

 private:
  Graph() = default;

  void check_connected() const {
    std::vector<char> seen(n_, 0);
    std::vector<int> queue{0};
    seen[0] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (int nb : adj_[queue[head]]) {
        if (!seen[nb]) {
          seen[nb] = 1;
          queue.push_back(nb);
        }
      }
    }
    if (static_cast<int>(queue.size()) != n_)
      throw Error("graph is not connected");
  }

  std::uint64_t compute_fingerprint(
      const std::vector<std::pair<int, int>>& original_edges) const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t x) {
      for (int b = 0; b < 8; ++b) {
        h ^= (x >> (8 * b)) & 0xff;
        h *= 1099511628211ull;
      }
    };
    mix(static_cast<std::uint64_t>(n_));
    for (const auto& [u, v] : original_edges) {
      mix(static_cast<std::uint64_t>(u));
      mix(static_cast<std::uint64_t>(v));
    }
    return h;
  }

  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> original_ids_;
  std::uint64_t fingerprint_ = 0;
};

/// Sorted set of internal vertex indices, bound to some Graph.
class VertexSet {
 public:
  VertexSet() = default;

  explicit VertexSet(std::vector<int> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()),
                   members_.end());
    if (!members_.empty() && members_.front() < 0)
      throw Error("negative vertex index in set");
  }

  /// Builds a set from original vertex ids, validating them against `g`.
  static VertexSet from_original(const Graph& g, const std::vector<int>& ids) {
    std::vector<int> internal;
    internal.reserve(ids.size());
    for (int id : ids) internal.push_back(g.require_original(id));
    return VertexSet(std::move(internal));
  }

  const std::vector<int>& members() const { return members_; }

  bool contains(int v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
  }

  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }

  std::vector<int> to_original(const Graph& g) const {
    std::vector<int> out;
    out.reserve(members_.size());
    for (int v : members_) out.push_back(g.original_id(v));
    return out;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<int> members_;
};

}  // namespace cvxdom
