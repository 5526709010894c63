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
#include <chrono>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cvxdom/clauses.hpp"
#include "cvxdom/graph.hpp"
#include "cvxdom/model.hpp"
#include "cvxdom/solve_result.hpp"

namespace cvxdom {

/// Search budget. Unset fields mean unlimited. Exceeding either limit stops
/// the search and reports the best incumbent with SolveStatus::timeout.
struct Budget {
  std::optional<double> time_limit_seconds;
  std::optional<std::uint64_t> node_limit;
};

namespace detail {

/// Branch and bound for minimum-weight satisfying assignments of a clause
/// set where every variable has weight 1. Deterministic: fixed branching
/// order, false branch first, no randomization.
class MinOnesSearch {
 public:
  MinOnesSearch(const ClauseSet& cs, Budget budget)
      : cs_(cs),
        budget_(budget),
        assign_(static_cast<std::size_t>(cs.num_vars), -1),
        pos_occ_(static_cast<std::size_t>(cs.num_vars)),
        neg_occ_(static_cast<std::size_t>(cs.num_vars)),
        sat_(cs.clauses.size(), 0),
        unassigned_(cs.clauses.size(), 0),
        all_positive_(cs.clauses.size(), 1) {
    for (std::size_t c = 0; c < cs.clauses.size(); ++c) {
      const Clause& cl = cs.clauses[c];
      unassigned_[c] = static_cast<int>(cl.literals.size());
      for (int lit : cl.literals) {
        if (lit > 0) {
          pos_occ_[lit - 1].push_back(static_cast<int>(c));
        } else {
          neg_occ_[-lit - 1].push_back(static_cast<int>(c));
          all_positive_[c] = 0;
        }
      }
    }
  }

  SolveResult run() {
    auto t0 = std::chrono::steady_clock::now();
    deadline_.reset();
    if (budget_.time_limit_seconds)
      deadline_ = t0 + std::chrono::duration_cast<
                           std::chrono::steady_clock::duration>(
                           std::chrono::duration<double>(
                               *budget_.time_limit_seconds));
    best_value_ = cs_.num_vars + 1;
    greedy_incumbent();
    search();
    SolveResult r;
    r.stats.nodes = nodes_;
    r.stats.propagations = propagations_;
    r.stats.millis = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    bool have = best_value_ <= cs_.num_vars;
    if (stopped_) {
      r.status = SolveStatus::timeout;
      if (have) {
        r.value = best_value_;
        r.witness = VertexSet(best_set_);
      }
    } else if (have) {
      r.status = SolveStatus::optimal;
      r.value = best_value_;
      r.witness = VertexSet(best_set_);
    } else {
      r.status = SolveStatus::infeasible;
    }
    return r;
  }

 private:
  void do_assign(int v, bool value) {
    assign_[v] = value ? 1 : 0;
    trail_.push_back(v);
    if (value) ++true_count_;
    for (int c : pos_occ_[v]) {
      --unassigned_[c];
      if (value) ++sat_[c];
    }
    for (int c : neg_occ_[v]) {
      --unassigned_[c];
      if (!value) ++sat_[c];
    }
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      int v = trail_.back();
      trail_.pop_back();
      bool value = assign_[v] == 1;
      for (int c : pos_occ_[v]) {
        ++unassigned_[c];
        if (value) --sat_[c];
      }
      for (int c : neg_occ_[v]) {
        ++unassigned_[c];
        if (!value) --sat_[c];
      }
      assign_[v] = -1;
      if (value) --true_count_;
    }
  }

  /// Finds the one unassigned literal of a clause known to have exactly one.
  int sole_unassigned(int c) const {
    for (int lit : cs_.clauses[c].literals) {
      int v = lit > 0 ? lit - 1 : -lit - 1;
      if (assign_[v] == -1) return lit;
    }
    return 0;
  }

  /// Assigns v and runs unit propagation to fixpoint. Returns false on
  /// conflict (some clause fully falsified); caller must undo_to its mark.
  bool assign_and_propagate(int v, bool value) {
    queue_.clear();
    queue_.push_back(value ? v + 1 : -(v + 1));
    std::size_t head = 0;
    bool first = true;
    while (head < queue_.size()) {
      int lit = queue_[head++];
      int u = lit > 0 ? lit - 1 : -lit - 1;
      bool val = lit > 0;
      if (assign_[u] != -1) {
        if ((assign_[u] == 1) == val) continue;
        return false;
      }
      do_assign(u, val);
      if (!first) ++propagations_;
      first = false;
      const auto& falsified = val ? neg_occ_[u] : pos_occ_[u];
      for (int c : falsified) {
        if (sat_[c] > 0) continue;
        if (unassigned_[c] == 0) return false;
        if (unassigned_[c] == 1) queue_.push_back(sole_unassigned(c));
      }
    }
    return true;
  }

  void record_incumbent() {
    best_value_ = true_count_;
    best_set_.clear();
    for (int v = 0; v < cs_.num_vars; ++v)
      if (assign_[v] == 1) best_set_.push_back(v);
  }

  /// Seeds the incumbent: repeatedly satisfy the clauses that still need a
  /// variable set to 1 (open clauses whose unassigned literals are all
  /// positive), picking the variable covering most of them. Clauses left
  /// open keep an unassigned negated literal, so finishing with every
  /// remaining variable at 0 is feasible.
  void greedy_incumbent() {
    scores_.assign(static_cast<std::size_t>(cs_.num_vars), 0);
    for (int round = 0; round <= cs_.num_vars; ++round) {
      std::fill(scores_.begin(), scores_.end(), 0);
      bool any = false;
      for (std::size_t c = 0; c < cs_.clauses.size(); ++c) {
        if (sat_[c] > 0) continue;
        bool urgent = true;
        for (int lit : cs_.clauses[c].literals)
          if (lit < 0 && assign_[-lit - 1] == -1) {
            urgent = false;
            break;
          }
        if (!urgent) continue;
        any = true;
        for (int lit : cs_.clauses[c].literals)
          if (lit > 0 && assign_[lit - 1] == -1) ++scores_[lit - 1];
      }
      if (!any) {
        record_incumbent();
        undo_to(0);
        return;
      }
      int pick = -1;
      for (int v = 0; v < cs_.num_vars; ++v)
        if (scores_[v] > 0 && (pick == -1 || scores_[v] > scores_[pick]))
          pick = v;
      if (pick == -1 || !assign_and_propagate(pick, true)) break;
    }
    undo_to(0);
  }

  /// Admissible bound on extra variables that must still become 1: open
  /// clauses with only positive literals each force one, and clauses sharing
  /// no unassigned variable force distinct ones.
  int disjoint_open_bound() {
    used_.assign(static_cast<std::size_t>(cs_.num_vars), 0);
    int extra = 0;
    for (std::size_t c = 0; c < cs_.clauses.size(); ++c) {
      if (!all_positive_[c] || sat_[c] > 0) continue;
      bool disjoint = true;
      for (int lit : cs_.clauses[c].literals)
        if (assign_[lit - 1] == -1 && used_[lit - 1]) {
          disjoint = false;
          break;
        }
      if (!disjoint) continue;
      ++extra;
      for (int lit : cs_.clauses[c].literals)
        if (assign_[lit - 1] == -1) used_[lit - 1] = 1;
    }
    return extra;
  }

  /// Unassigned variable occurring in the most open clauses, lowest index on
  /// ties; -1 when every clause is satisfied.
  int pick_branch_var() {
    occ_.assign(static_cast<std::size_t>(cs_.num_vars), 0);
    bool open = false;
    for (std::size_t c = 0; c < cs_.clauses.size(); ++c) {
      if (sat_[c] > 0) continue;
      open = true;
      for (int lit : cs_.clauses[c].literals) {
        int v = lit > 0 ? lit - 1 : -lit - 1;
        if (assign_[v] == -1) ++occ_[v];
      }
    }
    if (!open) return -1;
    int pick = -1;
    for (int v = 0; v < cs_.num_vars; ++v)
      if (occ_[v] > 0 && (pick == -1 || occ_[v] > occ_[pick])) pick = v;
    return pick;
  }

  bool out_of_budget() {
    if (budget_.node_limit && nodes_ >= *budget_.node_limit) return true;
    if (deadline_ && (nodes_ & 63) == 0 &&
        std::chrono::steady_clock::now() >= *deadline_)
      return true;
    return false;
  }

  void search() {
    if (stopped_) return;
    if (true_count_ + disjoint_open_bound() >= best_value_) return;
    int v = pick_branch_var();
    if (v == -1) {
      record_incumbent();
      return;
    }
    for (int value = 0; value < 2; ++value) {
      if (out_of_budget()) {
        stopped_ = true;
        return;
      }
      ++nodes_;
      std::size_t mark = trail_.size();
      if (assign_and_propagate(v, value == 1)) search();
      undo_to(mark);
      if (stopped_) return;
    }
  }

  const ClauseSet& cs_;
  Budget budget_;
  std::optional<std::chrono::steady_clock::time_point> deadline_;

  std::vector<signed char> assign_;
  std::vector<std::vector<int>> pos_occ_;
  std::vector<std::vector<int>> neg_occ_;
  std::vector<int> sat_;
  std::vector<int> unassigned_;
  std::vector<signed char> all_positive_;
  std::vector<int> trail_;
  std::vector<int> queue_;
  std::vector<int> scores_;
  std::vector<signed char> used_;
  std::vector<int> occ_;

  int true_count_ = 0;
  int best_value_ = 0;
  std::vector<int> best_set_;
  bool stopped_ = false;
  std::uint64_t nodes_ = 0;
  std::uint64_t propagations_ = 0;
};

}  // namespace detail

/// Minimizes the number of variables set to 1 over all satisfying
/// assignments. Witness members are variable columns.
inline SolveResult solve(const ClauseSet& cs, const Budget& budget = {}) {
  return detail::MinOnesSearch(cs, budget).run();
}

inline SolveResult solve(const LinearModel& m, const Budget& budget = {}) {
  return solve(clausify(m), budget);
}

/// Evaluates every model row at the indicator vector of s (columns in s are
/// 1, the rest 0).
inline bool verify_witness(const LinearModel& m, const VertexSet& s) {
  for (const Constraint& c : m.constraints) {
    int lhs = 0;
    for (const Term& t : c.terms)
      if (s.contains(t.var)) lhs += t.coeff;
    if (lhs < c.rhs) return false;
  }
  return true;
}

}  // namespace cvxdom
