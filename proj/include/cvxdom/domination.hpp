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

#include <chrono>
#include <span>
#include <string_view>
#include <vector>

#include "cvxdom/distance.hpp"
#include "cvxdom/errors.hpp"
#include "cvxdom/graph.hpp"
#include "cvxdom/solve_result.hpp"

namespace cvxdom {

enum class DominationKind { plain, weakly_convex, convex };

inline std::string_view to_string(DominationKind k) {
  switch (k) {
    case DominationKind::plain: return "plain";
    case DominationKind::weakly_convex: return "weakly_convex";
    case DominationKind::convex: return "convex";
  }
  return "?";
}

namespace detail {

/// Scratch buffers for repeated predicate evaluation on one (graph, dm) pair.
/// Used directly by the brute-force oracle; the public predicates wrap it.
class PredicateContext {
 public:
  PredicateContext(const Graph& g, const DistanceMatrix& dm)
      : g_(g), dm_(dm), in_set_(g.vertex_count(), 0),
        covered_(g.vertex_count(), 0), dist_(g.vertex_count(), -1) {
    queue_.reserve(g.vertex_count());
  }

  bool dominating(std::span<const int> members) {
    const int n = g_.vertex_count();
    if (members.empty()) return false;  // nothing covers a nonempty graph
    std::fill(covered_.begin(), covered_.end(), 0);
    int num_covered = 0;
    for (int v : members) {
      if (!covered_[v]) {
        covered_[v] = 1;
        ++num_covered;
      }
      for (int nb : g_.neighbors(v)) {
        if (!covered_[nb]) {
          covered_[nb] = 1;
          ++num_covered;
        }
      }
    }
    return num_covered == n;
  }

  /// Induced-subgraph BFS from every member; distances must match the
  /// whole-graph distances (some shortest path stays inside the set).
  bool weakly_convex(std::span<const int> members) {
    if (members.size() <= 1) return true;
    mark(members);
    for (int src : members) {
      for (int v : members) dist_[v] = -1;
      queue_.clear();
      queue_.push_back(src);
      dist_[src] = 0;
      for (std::size_t head = 0; head < queue_.size(); ++head) {
        int u = queue_[head];
        for (int v : g_.neighbors(u)) {
          if (in_set_[v] && dist_[v] < 0) {
            dist_[v] = dist_[u] + 1;
            queue_.push_back(v);
          }
        }
      }
      for (int v : members)
        if (dist_[v] != dm_(src, v)) return false;
    }
    return true;
  }

  /// Geodesic-interval closure: every vertex on any shortest path between two
  /// members must itself be a member.
  bool convex(std::span<const int> members) {
    const int n = g_.vertex_count();
    if (members.size() <= 1) return true;
    mark(members);
    for (std::size_t a = 0; a + 1 < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        int u = members[a], v = members[b];
        int duv = dm_(u, v);
        if (duv < 2) continue;  // adjacent pairs have no interior vertices
        for (int k = 0; k < n; ++k)
          if (!in_set_[k] && dm_(u, k) + dm_(k, v) == duv) return false;
      }
    }
    return true;
  }

  bool satisfies(std::span<const int> members, DominationKind kind) {
    if (!dominating(members)) return false;
    switch (kind) {
      case DominationKind::plain: return true;
      case DominationKind::weakly_convex: return weakly_convex(members);
      case DominationKind::convex: return convex(members);
    }
    return false;
  }

 private:
  void mark(std::span<const int> members) {
    std::fill(in_set_.begin(), in_set_.end(), 0);
    for (int v : members) in_set_[v] = 1;
  }

  const Graph& g_;
  const DistanceMatrix& dm_;
  std::vector<char> in_set_;
  std::vector<char> covered_;
  std::vector<int> dist_;
  std::vector<int> queue_;
};

}  // namespace detail

/// True iff every vertex is in `s` or adjacent to a member of `s`.
/// The empty set dominates nothing.
inline bool is_dominating(const Graph& g, const VertexSet& s) {
  if (s.empty()) return false;
  std::vector<char> covered(g.vertex_count(), 0);
  int num_covered = 0;
  for (int v : s.members()) {
    if (!covered[v]) {
      covered[v] = 1;
      ++num_covered;
    }
    for (int nb : g.neighbors(v)) {
      if (!covered[nb]) {
        covered[nb] = 1;
        ++num_covered;
      }
    }
  }
  return num_covered == g.vertex_count();
}

inline bool is_weakly_convex(const Graph& g, const DistanceMatrix& dm,
                             const VertexSet& s) {
  detail::PredicateContext ctx(g, dm);
  return ctx.weakly_convex(s.members());
}

inline bool is_convex(const Graph& g, const DistanceMatrix& dm,
                      const VertexSet& s) {
  detail::PredicateContext ctx(g, dm);
  return ctx.convex(s.members());
}

inline bool satisfies(const Graph& g, const DistanceMatrix& dm,
                      const VertexSet& s, DominationKind kind) {
  detail::PredicateContext ctx(g, dm);
  return ctx.satisfies(s.members(), kind);
}

inline constexpr int kDefaultOracleLimit = 20;

/// Brute-force minimum: enumerates subsets by nondecreasing cardinality,
/// lexicographic within a cardinality, and returns the first subset passing
/// the kind's predicates. Optimal by enumeration order. stats.nodes counts
/// subsets tried.
inline SolveResult oracle_minimum(const Graph& g, const DistanceMatrix& dm,
                                  DominationKind kind,
                                  int limit = kDefaultOracleLimit) {
  const int n = g.vertex_count();
  if (n > limit)
    throw Error("graph has " + std::to_string(n) +
                " vertices, oracle limit is " + std::to_string(limit));

  auto start = std::chrono::steady_clock::now();
  detail::PredicateContext ctx(g, dm);
  SolveResult res;
  std::vector<int> comb;
  for (int size = 0; size <= n; ++size) {
    comb.resize(size);
    for (int i = 0; i < size; ++i) comb[i] = i;
    while (true) {
      ++res.stats.nodes;
      if (ctx.satisfies(comb, kind)) {
        res.status = SolveStatus::optimal;
        res.value = size;
        res.witness = VertexSet(comb);
        res.stats.millis =
            std::chrono::duration<double, std::milli>(
                std::chrono::steady_clock::now() - start)
                .count();
        return res;
      }
      // next combination in lexicographic order
      int i = size - 1;
      while (i >= 0 && comb[i] == n - size + i) --i;
      if (i < 0) break;
      ++comb[i];
      for (int j = i + 1; j < size; ++j) comb[j] = comb[j - 1] + 1;
    }
  }
  // Unreachable: the full vertex set passes all three predicates.
  throw Error("oracle found no feasible set; graph invariants violated");
}

}  // namespace cvxdom
