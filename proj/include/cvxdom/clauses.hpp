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
#include <string>
#include <vector>

#include "cvxdom/errors.hpp"
#include "cvxdom/model.hpp"

namespace cvxdom {

/// One disjunction over binary variables. Literal encoding is DIMACS-like:
/// +(col+1) for x_col, -(col+1) for its negation.
struct Clause {
  std::vector<int> literals;
};

/// Clause view of a model. origin[c] is the index of the model constraint
/// clause c was derived from, and clause_tag[c] its constraint family.
struct ClauseSet {
  int num_vars = 0;
  std::vector<Clause> clauses;
  std::vector<std::size_t> origin;
  std::vector<ConstraintTag> clause_tag;

  std::size_t size() const { return clauses.size(); }
};

/// Rewrites a model as clauses. A row with coefficients in {-1,+1} and
/// right-hand side 1 - (number of negative coefficients) holds exactly when
/// at least one positive-coefficient variable is 1 or one negative-coefficient
/// variable is 0, i.e. it is the clause with those literals. Rows of any
/// other shape have no clause equivalent and are rejected.
inline ClauseSet clausify(const LinearModel& m) {
  ClauseSet cs;
  cs.num_vars = m.var_count();
  cs.clauses.reserve(m.constraints.size());
  cs.origin.reserve(m.constraints.size());
  cs.clause_tag.reserve(m.constraints.size());
  for (std::size_t ci = 0; ci < m.constraints.size(); ++ci) {
    const Constraint& con = m.constraints[ci];
    if (con.terms.empty())
      throw Error("constraint " + con.name() + " has no terms");
    int negatives = 0;
    Clause cl;
    cl.literals.reserve(con.terms.size());
    for (const Term& t : con.terms) {
      if (t.coeff == 1) {
        cl.literals.push_back(t.var + 1);
      } else if (t.coeff == -1) {
        cl.literals.push_back(-(t.var + 1));
        ++negatives;
      } else {
        throw Error("constraint " + con.name() + " has a coefficient outside {-1,+1}");
      }
    }
    if (con.rhs != 1 - negatives)
      throw Error("constraint " + con.name() + " is not clausal");
    cs.clauses.push_back(std::move(cl));
    cs.origin.push_back(ci);
    cs.clause_tag.push_back(con.tag);
  }
  return cs;
}

}  // namespace cvxdom
