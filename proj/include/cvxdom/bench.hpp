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
#include <atomic>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "json.hpp"

#include "cvxdom/distance.hpp"
#include "cvxdom/errors.hpp"
#include "cvxdom/graph.hpp"
#include "cvxdom/model.hpp"
#include "cvxdom/report.hpp"
#include "cvxdom/solver.hpp"

namespace cvxdom {

struct BenchInstance {
  std::string name;
  Graph graph;
};

struct BenchOptions {
  std::vector<Problem> problems = {Problem::ds, Problem::wcvxds,
                                   Problem::cvxds};
  bool run_full = true;      // cvxds via the full model
  bool run_reduced = false;  // cvxds via the reduced model
  Budget budget;
  int jobs = 0;  // worker threads; 0 = hardware concurrency
};

struct BenchRow {
  std::string instance;
  int n = 0;
  int m = 0;
  Problem problem = Problem::ds;
  Formulation formulation = Formulation::ds_only;
  int constraints_dom = 0;
  int constraints_side = 0;
  std::optional<int> value;
  SolveStatus status = SolveStatus::infeasible;
  std::uint64_t nodes = 0;
  double millis = 0.0;
};

struct BenchSummary {
  int instances = 0;
  int rows = 0;
  int optimal = 0;
  int timeouts = 0;
  int full_reduced_pairs = 0;
  int full_reduced_agreements = 0;
  int lemma1_checked = 0;
  int lemma1_violations = 0;
};

struct BenchResult {
  std::vector<BenchRow> rows;
  BenchSummary summary;
};

inline constexpr char kBenchCsvHeader[] =
    "instance,n,m,problem,formulation,constraints_dom,constraints_side,"
    "value,status,nodes,millis";

inline std::string to_csv(const std::vector<BenchRow>& rows) {
  std::string out = kBenchCsvHeader;
  out += '\n';
  char buf[32];
  for (const BenchRow& r : rows) {
    out += r.instance;
    out += ',' + std::to_string(r.n);
    out += ',' + std::to_string(r.m);
    out += ',';
    out += to_string(r.problem);
    out += ',';
    out += to_string(r.formulation);
    out += ',' + std::to_string(r.constraints_dom);
    out += ',' + std::to_string(r.constraints_side);
    out += ',';
    if (r.value) out += std::to_string(*r.value);
    out += ',';
    out += to_string(r.status);
    out += ',' + std::to_string(r.nodes);
    std::snprintf(buf, sizeof(buf), "%.3f", r.millis);
    out += ',';
    out += buf;
    out += '\n';
  }
  return out;
}

inline nlohmann::ordered_json to_json(const BenchSummary& s) {
  return nlohmann::ordered_json{
      {"instances", s.instances},
      {"rows", s.rows},
      {"optimal", s.optimal},
      {"timeouts", s.timeouts},
      {"full_reduced_pairs", s.full_reduced_pairs},
      {"full_reduced_agreements", s.full_reduced_agreements},
      {"lemma1_checked", s.lemma1_checked},
      {"lemma1_violations", s.lemma1_violations}};
}

namespace detail {

struct BenchTask {
  std::size_t instance = 0;
  Problem problem = Problem::ds;
  Formulation formulation = Formulation::ds_only;
};

inline BenchSummary summarize(const std::vector<BenchRow>& rows,
                              std::size_t instance_count) {
  BenchSummary s;
  s.instances = static_cast<int>(instance_count);
  s.rows = static_cast<int>(rows.size());
  // per instance: optimal value per formulation
  std::map<std::string, std::map<Formulation, int>> values;
  for (const BenchRow& r : rows) {
    if (r.status == SolveStatus::optimal)
      ++s.optimal;
    else if (r.status == SolveStatus::timeout)
      ++s.timeouts;
    if (r.status == SolveStatus::optimal && r.value)
      values[r.instance][r.formulation] = *r.value;
  }
  for (const auto& [name, by_form] : values) {
    auto full = by_form.find(Formulation::cvx_full);
    auto reduced = by_form.find(Formulation::cvx_reduced);
    if (full != by_form.end() && reduced != by_form.end()) {
      ++s.full_reduced_pairs;
      if (full->second == reduced->second) ++s.full_reduced_agreements;
    }
    std::optional<int> ds, wcvx, cvx;
    if (auto it = by_form.find(Formulation::ds_only); it != by_form.end())
      ds = it->second;
    if (auto it = by_form.find(Formulation::wcvx); it != by_form.end())
      wcvx = it->second;
    if (full != by_form.end())
      cvx = full->second;
    else if (reduced != by_form.end())
      cvx = reduced->second;
    bool comparable = false;
    bool ok = true;
    if (ds && wcvx) {
      comparable = true;
      ok = ok && *ds <= *wcvx;
    }
    if (wcvx && cvx) {
      comparable = true;
      ok = ok && *wcvx <= *cvx;
    }
    if (ds && cvx) {
      comparable = true;
      ok = ok && *ds <= *cvx;
    }
    if (comparable) {
      ++s.lemma1_checked;
      if (!ok) ++s.lemma1_violations;
    }
  }
  return s;
}

}  // namespace detail

/// Runs every requested problem/formulation on every instance. Instances are
/// processed by a worker pool; each row lands at a precomputed index, so the
/// output order (instances sorted by name, then problem, then formulation)
/// does not depend on scheduling.
inline BenchResult run_bench(std::vector<BenchInstance> instances,
                             const BenchOptions& options) {
  if (instances.empty()) throw Error("bench: no instances");
  if (options.problems.empty()) throw Error("bench: no problems selected");
  if (!options.run_full && !options.run_reduced &&
      std::find(options.problems.begin(), options.problems.end(),
                Problem::cvxds) != options.problems.end())
    throw Error("bench: cvxds selected but no formulation enabled");
  std::sort(instances.begin(), instances.end(),
            [](const BenchInstance& a, const BenchInstance& b) {
              return a.name < b.name;
            });

  std::vector<detail::BenchTask> tasks;
  for (std::size_t i = 0; i < instances.size(); ++i)
    for (Problem p : options.problems) {
      if (p == Problem::cvxds) {
        if (options.run_full)
          tasks.push_back({i, p, Formulation::cvx_full});
        if (options.run_reduced)
          tasks.push_back({i, p, Formulation::cvx_reduced});
      } else {
        tasks.push_back({i, p, formulation_of(p)});
      }
    }
  if (tasks.empty()) throw Error("bench: no tasks (cvxds with no formulation)");

  std::vector<DistanceMatrix> dms;
  dms.reserve(instances.size());
  for (const BenchInstance& inst : instances)
    dms.emplace_back(inst.graph);

  BenchResult result;
  result.rows.resize(tasks.size());

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};

  auto worker = [&] {
    for (;;) {
      std::size_t t = next.fetch_add(1);
      if (t >= tasks.size() || failed.load()) return;
      try {
        const detail::BenchTask& task = tasks[t];
        const BenchInstance& inst = instances[task.instance];
        LinearModel model =
            build_model(inst.graph, dms[task.instance], task.formulation);
        SolveResult sr = solve(model, options.budget);
        BenchRow& row = result.rows[t];
        row.instance = inst.name;
        row.n = inst.graph.vertex_count();
        row.m = inst.graph.edge_count();
        row.problem = task.problem;
        row.formulation = task.formulation;
        row.constraints_dom = model.count(ConstraintTag::domination);
        row.constraints_side = model.count(ConstraintTag::convexity) +
                               model.count(ConstraintTag::weak_convexity);
        row.value = sr.value;
        row.status = sr.status;
        row.nodes = sr.stats.nodes;
        row.millis = sr.stats.millis;
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
        return;
      }
    }
  };

  unsigned hw = std::thread::hardware_concurrency();
  std::size_t jobs = options.jobs > 0 ? static_cast<std::size_t>(options.jobs)
                                      : (hw > 0 ? hw : 1);
  jobs = std::min(jobs, tasks.size());
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (std::size_t i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  result.summary = detail::summarize(result.rows, instances.size());
  return result;
}

}  // namespace cvxdom
