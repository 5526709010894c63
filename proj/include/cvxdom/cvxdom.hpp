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

#include "cvxdom/bench.hpp"
#include "cvxdom/clauses.hpp"
#include "cvxdom/distance.hpp"
#include "cvxdom/domination.hpp"
#include "cvxdom/errors.hpp"
#include "cvxdom/generators.hpp"
#include "cvxdom/graph.hpp"
#include "cvxdom/graph_io.hpp"
#include "cvxdom/model.hpp"
#include "cvxdom/model_io.hpp"
#include "cvxdom/report.hpp"
#include "cvxdom/solve_result.hpp"
#include "cvxdom/solver.hpp"
