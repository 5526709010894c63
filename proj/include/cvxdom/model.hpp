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
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cvxdom/distance.hpp"
#include "cvxdom/errors.hpp"
#include "cvxdom/graph.hpp"

namespace cvxdom {

enum class ConstraintTag : std::uint8_t { domination, convexity, weak_convexity };
enum class Formulation : std::uint8_t { ds_only, wcvx, cvx_full, cvx_reduced };

inline std::string_view to_string(ConstraintTag t) {
  switch (t) {
    case ConstraintTag::domination: return "domination";
    case ConstraintTag::convexity: return "convexity";
    case ConstraintTag::weak_convexity: return "weak_convexity";
  }
  return "?";
}

inline std::string_view to_string(Formulation f) {
  switch (f) {
    case Formulation::ds_only: return "ds_only";
    case Formulation::wcvx: return "wcvx";
    case Formulation::cvx_full: return "cvx_full";
    case Formulation::cvx_reduced: return "cvx_reduced";
  }
  return "?";
}

inline Formulation formulation_from_string(std::string_view s) {
  if (s == "ds_only") return Formulation::ds_only;
  if (s == "wcvx") return Formulation::wcvx;
  if (s == "cvx_full") return Formulation::cvx_full;
  if (s == "cvx_reduced") return Formulation::cvx_reduced;
  throw Error("unknown formulation \"" + std::string(s) + "\"");
}

inline ConstraintTag tag_from_string(std::string_view s) {
  if (s == "domination") return ConstraintTag::domination;
  if (s == "convexity") return ConstraintTag::convexity;
  if (s == "weak_convexity") return ConstraintTag::weak_convexity;
  throw Error("unknown constraint tag \"" + std::string(s) + "\"");
}

/// One signed-unit term: `var` is a 0-based column and `coeff` is -1 or +1.
struct Term {
  int var = 0;
  int coeff = 0;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Generating tuple in original vertex ids; unused slots stay 0.
/// domination: (i). weak_convexity: (i,j). convexity: (i,j,k).
struct Provenance {
  int i = 0;
  int j = 0;
  int k = 0;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

/// A ">=" row with coefficients in {-1,+1}. Terms are kept sorted by column.
struct Constraint {
  ConstraintTag tag = ConstraintTag::domination;
  std::vector<Term> terms;
  int rhs = 0;
  Provenance provenance;

  /// Row name used by every serializer: dom_<i>, cvx_<i>_<j>_<k>, wcvx_<i>_<j>.
  std::string name() const {
    switch (tag) {
      case ConstraintTag::domination:
        return "dom_" + std::to_string(provenance.i);
      case ConstraintTag::convexity:
        return "cvx_" + std::to_string(provenance.i) + "_" +
               std::to_string(provenance.j) + "_" +
               std::to_string(provenance.k);
      case ConstraintTag::weak_convexity:
        return "wcvx_" + std::to_string(provenance.i) + "_" +
               std::to_string(provenance.j);
    }
    return "?";
  }

  friend bool operator==(const Constraint&, const Constraint&) = default;
};

/// A minimize-sum-of-binaries model over one variable per vertex.
/// Column c corresponds to the vertex with original id var_original_ids[c];
/// the objective is implicitly min sum x_c with unit coefficients.
struct LinearModel {
  Formulation formulation = Formulation::ds_only;
  std::uint64_t graph_fingerprint = 0;
  std::vector<int> var_original_ids;  // ascending; column -> original id
  std::vector<Constraint> constraints;

  int var_count() const { return static_cast<int>(var_original_ids.size()); }

  std::string var_name(int col) const {
    return "x_" + std::to_string(var_original_ids[col]);
  }

  int count(ConstraintTag t) const {
    int c = 0;
    for (const auto& con : constraints) c += (con.tag == t);
    return c;
  }

  friend bool operator==(const LinearModel&, const LinearModel&) = default;
};

/// keep_trivial re-emits the tautological rows that the index ranges of the
/// convexity and weak-convexity families produce for k in {i,j} and for
/// adjacent pairs (they collapse to -x_j >= -1). Off by default; such rows do
/// not change the feasible set and are not clausal, so keep_trivial models
/// are meant for export, not for the internal solver.
struct BuildOptions {
  bool keep_trivial = false;
};

namespace detail {

/// Combines duplicate columns, drops zero coefficients, keeps terms sorted.
inline std::vector<Term> normalize_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.var < b.var; });
  std::vector<Term> out;
  for (const Term& t : terms) {
    if (!out.empty() && out.back().var == t.var) {
      out.back().coeff += t.coeff;
    } else {
      out.push_back(t);
    }
  }
  std::erase_if(out, [](const Term& t) { return t.coeff == 0; });
  for (const Term& t : out) {
    if (t.coeff != 1 && t.coeff != -1)
      throw Error("constraint coefficient out of {-1,+1}");
  }
  return out;
}

/// Deduplicates side constraints by normalized term signature. Duplicate
/// signatures only arise among the tautologies of keep_trivial mode.
class SideConstraintSink {
 public:
  explicit SideConstraintSink(LinearModel& model) : model_(model) {}

  void add(ConstraintTag tag, std::vector<Term> raw_terms, int rhs,
           Provenance prov) {
    Constraint c{tag, normalize_terms(std::move(raw_terms)), rhs, prov};
    std::vector<int> sig;
    sig.reserve(2 * c.terms.size() + 1);
    for (const Term& t : c.terms) {
      sig.push_back(t.var);
      sig.push_back(t.coeff);
    }
    sig.push_back(c.rhs);
    if (seen_.insert(std::move(sig)).second)
      model_.constraints.push_back(std::move(c));
  }

 private:
  LinearModel& model_;
  std::set<std::vector<int>> seen_;
};

inline LinearModel model_base(const Graph& g, Formulation f) {
  LinearModel m;
  m.formulation = f;
  m.graph_fingerprint = g.fingerprint();
  m.var_original_ids = g.original_ids();
  return m;
}

/// x_i + sum_{j in N(i)} x_j >= 1, one row per vertex. Twin vertices may
/// produce identical rows; all n rows are kept (they have distinct names).
inline void emit_domination(const Graph& g, LinearModel& m) {
  for (int i = 0; i < g.vertex_count(); ++i) {
    Constraint c;
    c.tag = ConstraintTag::domination;
    c.rhs = 1;
    c.provenance = {g.original_id(i), 0, 0};
    c.terms.push_back({i, 1});
    for (int j : g.neighbors(i)) c.terms.push_back({j, 1});
    c.terms = normalize_terms(std::move(c.terms));
    m.constraints.push_back(std::move(c));
  }
}

}  // namespace detail

/// Domination-only model: objective plus the n covering rows.
inline LinearModel build_domination(const Graph& g, const DistanceMatrix& dm,
                                    BuildOptions = {}) {
  (void)dm;
  LinearModel m = detail::model_base(g, Formulation::ds_only);
  detail::emit_domination(g, m);
  return m;
}

/// Full convexity model: domination rows plus x_k - x_i - x_j >= -1 for every
/// pair i<j and every k anywhere in the graph with d(i,k)+d(k,j) = d(i,j).
inline LinearModel build_cvx_full(const Graph& g, const DistanceMatrix& dm,
                                  BuildOptions opts = {}) {
  LinearModel m = detail::model_base(g, Formulation::cvx_full);
  detail::emit_domination(g, m);
  detail::SideConstraintSink sink(m);
  const int n = g.vertex_count();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int dij = dm(i, j);
      for (int k = 0; k < n; ++k) {
        if (!opts.keep_trivial && (k == i || k == j)) continue;
        if (dm(i, k) + dm(k, j) != dij) continue;
        sink.add(ConstraintTag::convexity,
                 {{k, 1}, {i, -1}, {j, -1}}, -1,
                 {g.original_id(i), g.original_id(j), g.original_id(k)});
      }
    }
  }
  return m;
}

/// Reduced convexity model: as build_cvx_full but k is restricted to
/// N(i) u N(j). The emitted rows are a subset of the full model's rows.
inline LinearModel build_cvx_reduced(const Graph& g, const DistanceMatrix& dm,
                                     BuildOptions opts = {}) {
  LinearModel m = detail::model_base(g, Formulation::cvx_reduced);
  detail::emit_domination(g, m);
  detail::SideConstraintSink sink(m);
  const int n = g.vertex_count();
  std::vector<int> candidates;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int dij = dm(i, j);
      candidates.clear();
      auto ni = g.neighbors(i);
      auto nj = g.neighbors(j);
      std::set_union(ni.begin(), ni.end(), nj.begin(), nj.end(),
                     std::back_inserter(candidates));
      for (int k : candidates) {
        if (!opts.keep_trivial && (k == i || k == j)) continue;
        if (dm(i, k) + dm(k, j) != dij) continue;
        sink.add(ConstraintTag::convexity,
                 {{k, 1}, {i, -1}, {j, -1}}, -1,
                 {g.original_id(i), g.original_id(j), g.original_id(k)});
      }
    }
  }
  return m;
}

/// Weak convexity model: domination rows plus, per pair i<j,
/// -x_i - x_j + sum_k x_k >= -1 where k runs over the neighbors of j lying
/// on a shortest i-j path. Adjacent pairs yield tautologies and are skipped
/// unless keep_trivial.
inline LinearModel build_wcvx(const Graph& g, const DistanceMatrix& dm,
                              BuildOptions opts = {}) {
  LinearModel m = detail::model_base(g, Formulation::wcvx);
  detail::emit_domination(g, m);
  detail::SideConstraintSink sink(m);
  const int n = g.vertex_count();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int dij = dm(i, j);
      if (dij == 1 && !opts.keep_trivial) continue;
      std::vector<Term> terms{{i, -1}, {j, -1}};
      for (int k : g.neighbors(j))
        if (dm(i, k) + 1 == dij) terms.push_back({k, 1});
      sink.add(ConstraintTag::weak_convexity, std::move(terms), -1,
               {g.original_id(i), g.original_id(j), 0});
    }
  }
  return m;
}

inline LinearModel build_model(const Graph& g, const DistanceMatrix& dm,
                               Formulation f, BuildOptions opts = {}) {
  switch (f) {
    case Formulation::ds_only: return build_domination(g, dm, opts);
    case Formulation::wcvx: return build_wcvx(g, dm, opts);
    case Formulation::cvx_full: return build_cvx_full(g, dm, opts);
    case Formulation::cvx_reduced: return build_cvx_reduced(g, dm, opts);
  }
  throw Error("unknown formulation");
}

}  // namespace cvxdom
