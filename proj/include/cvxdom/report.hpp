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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "cvxdom/domination.hpp"
#include "cvxdom/errors.hpp"
#include "cvxdom/model.hpp"
#include "cvxdom/solve_result.hpp"

namespace cvxdom {

/// The three minimization problems exposed to users.
enum class Problem { ds, wcvxds, cvxds };

inline std::string_view to_string(Problem p) {
  switch (p) {
    case Problem::ds: return "ds";
    case Problem::wcvxds: return "wcvxds";
    case Problem::cvxds: return "cvxds";
  }
  return "?";
}

inline Problem problem_from_string(std::string_view s) {
  if (s == "ds") return Problem::ds;
  if (s == "wcvxds") return Problem::wcvxds;
  if (s == "cvxds") return Problem::cvxds;
  throw Error("unknown problem \"" + std::string(s) + "\"");
}

/// Set property a witness for the problem must satisfy.
inline DominationKind kind_of(Problem p) {
  switch (p) {
    case Problem::ds: return DominationKind::plain;
    case Problem::wcvxds: return DominationKind::weakly_convex;
    case Problem::cvxds: return DominationKind::convex;
  }
  return DominationKind::plain;
}

/// Model family solving the problem. `reduced` only affects cvxds.
inline Formulation formulation_of(Problem p, bool reduced = false) {
  switch (p) {
    case Problem::ds: return Formulation::ds_only;
    case Problem::wcvxds: return Formulation::wcvx;
    case Problem::cvxds:
      return reduced ? Formulation::cvx_reduced : Formulation::cvx_full;
  }
  return Formulation::ds_only;
}

/// One solve or oracle run, flattened for JSON output. Model-related fields
/// are absent for oracle runs (no model is built).
struct RunReport {
  std::string instance;
  int n = 0;
  int m = 0;
  Problem problem = Problem::ds;
  std::optional<Formulation> formulation;
  std::optional<int> rows_domination;
  std::optional<int> rows_convexity;
  std::optional<int> rows_weak_convexity;
  SolveStatus status = SolveStatus::infeasible;
  std::optional<int> value;
  std::vector<int> witness_ids;
  std::uint64_t nodes = 0;
  std::uint64_t propagations = 0;
  double millis = 0.0;
  std::optional<int> oracle_value;
  std::optional<bool> consistent;
};

inline nlohmann::ordered_json to_json(const RunReport& r) {
  nlohmann::ordered_json j;
  j["instance"] = r.instance;
  j["n"] = r.n;
  j["m"] = r.m;
  j["problem"] = std::string(to_string(r.problem));
  if (r.formulation)
    j["formulation"] = std::string(to_string(*r.formulation));
  else
    j["formulation"] = nullptr;
  if (r.rows_domination) {
    j["constraints"] = {{"domination", *r.rows_domination},
                        {"convexity", *r.rows_convexity},
                        {"weak_convexity", *r.rows_weak_convexity}};
  } else {
    j["constraints"] = nullptr;
  }
  j["status"] = std::string(to_string(r.status));
  if (r.value)
    j["value"] = *r.value;
  else
    j["value"] = nullptr;
  if (r.value)
    j["witness"] = r.witness_ids;
  else
    j["witness"] = nullptr;
  j["nodes"] = r.nodes;
  j["propagations"] = r.propagations;
  j["millis"] = r.millis;
  if (r.oracle_value) j["oracle_value"] = *r.oracle_value;
  if (r.consistent) j["consistent"] = *r.consistent;
  return j;
}

}  // namespace cvxdom
