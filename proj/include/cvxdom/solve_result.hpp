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
#include <string_view>

#include "cvxdom/graph.hpp"

namespace cvxdom {

enum class SolveStatus { optimal, infeasible, timeout };

inline std::string_view to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::optimal: return "optimal";
    case SolveStatus::infeasible: return "infeasible";
    case SolveStatus::timeout: return "timeout";
  }
  return "?";
}

struct SearchStats {
  std::uint64_t nodes = 0;         // branch decisions (oracle: subsets tried)
  std::uint64_t propagations = 0;  // forced assignments
  double millis = 0.0;
};

/// Outcome of an exact minimization. When status is optimal, `witness` is a
/// minimum-cardinality set and `value` its size; on timeout they hold the
/// best incumbent found (if any).
struct SolveResult {
  SolveStatus status = SolveStatus::infeasible;
  std::optional<int> value;
  VertexSet witness;
  SearchStats stats;
};

}  // namespace cvxdom
