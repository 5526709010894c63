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
#include <charconv>
#include <cstdio>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "cvxdom/errors.hpp"
#include "cvxdom/model.hpp"

namespace cvxdom {

enum class ModelFormat { lp, mps, json };

inline ModelFormat model_format_from_string(std::string_view s) {
  if (s == "lp") return ModelFormat::lp;
  if (s == "mps") return ModelFormat::mps;
  if (s == "json") return ModelFormat::json;
  throw Error("unsupported model format \"" + std::string(s) + "\"");
}

namespace detail {

inline std::string fingerprint_hex(std::uint64_t fp) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fp));
  return buf;
}

inline std::uint64_t fingerprint_from_hex(std::string_view s) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value, 16);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw Error("bad graph fingerprint \"" + std::string(s) + "\"");
  return value;
}

/// Writes "x_1 + x_2 - x_3" style expressions, wrapping long rows.
inline void write_lp_terms(std::ostringstream& out, const LinearModel& m,
                           const std::vector<Term>& terms,
                           std::size_t indent) {
  std::size_t on_line = 0;
  for (std::size_t t = 0; t < terms.size(); ++t) {
    if (on_line == 8) {
      out << "\n" << std::string(indent, ' ');
      on_line = 0;
    }
    const Term& term = terms[t];
    if (t == 0) {
      if (term.coeff < 0) out << "- ";
    } else {
      out << (term.coeff < 0 ? " - " : " + ");
    }
    out << m.var_name(term.var);
    ++on_line;
  }
}

}  // namespace detail

/// CPLEX-style LP text: Minimize / Subject To / Binary / End.
inline std::string to_lp(const LinearModel& m) {
  std::ostringstream out;
  out << "\\ " << to_string(m.formulation) << " model, "
      << m.var_count() << " binaries, " << m.constraints.size()
      << " constraints, graph " << detail::fingerprint_hex(m.graph_fingerprint)
      << "\n";
  out << "Minimize\n obj: ";
  std::vector<Term> obj;
  obj.reserve(m.var_count());
  for (int c = 0; c < m.var_count(); ++c) obj.push_back({c, 1});
  detail::write_lp_terms(out, m, obj, 6);
  out << "\nSubject To\n";
  for (const Constraint& c : m.constraints) {
    out << " " << c.name() << ": ";
    detail::write_lp_terms(out, m, c.terms, 6);
    out << " >= " << c.rhs << "\n";
  }
  out << "Binary\n";
  for (int c = 0; c < m.var_count(); ++c) out << " " << m.var_name(c) << "\n";
  out << "End\n";
  return out.str();
}

/// MPS text: ROWS / COLUMNS / RHS / BOUNDS (BV) / ENDATA. Column-aligned with
/// a field width wide enough for the longest row name; blank-separated, so
/// both fixed and free MPS readers accept it.
inline std::string to_mps(const LinearModel& m) {
  std::size_t width = 9;
  for (const Constraint& c : m.constraints)
    width = std::max(width, c.name().size() + 1);
  for (int c = 0; c < m.var_count(); ++c)
    width = std::max(width, m.var_name(c).size() + 1);

  auto pad = [width](const std::string& s) {
    std::string out = s;
    out.resize(std::max(width, s.size()), ' ');
    return out;
  };

  // entries per variable column: objective first, then rows in model order
  std::vector<std::vector<std::pair<std::string, int>>> col_entries(
      m.var_count());
  for (int c = 0; c < m.var_count(); ++c) col_entries[c].push_back({"obj", 1});
  for (const Constraint& c : m.constraints) {
    std::string row = c.name();
    for (const Term& t : c.terms) col_entries[t.var].push_back({row, t.coeff});
  }

  std::ostringstream out;
  out << "NAME          " << to_string(m.formulation) << "_"
      << detail::fingerprint_hex(m.graph_fingerprint) << "\n";
  out << "ROWS\n";
  out << " N  obj\n";
  for (const Constraint& c : m.constraints) out << " G  " << c.name() << "\n";
  out << "COLUMNS\n";
  for (int c = 0; c < m.var_count(); ++c) {
    const auto& entries = col_entries[c];
    for (std::size_t e = 0; e < entries.size(); e += 2) {
      out << "    " << pad(m.var_name(c)) << pad(entries[e].first)
          << entries[e].second;
      if (e + 1 < entries.size())
        out << "   " << pad(entries[e + 1].first) << entries[e + 1].second;
      out << "\n";
    }
  }
  out << "RHS\n";
  for (std::size_t i = 0; i < m.constraints.size(); i += 2) {
    out << "    " << pad("rhs") << pad(m.constraints[i].name())
        << m.constraints[i].rhs;
    if (i + 1 < m.constraints.size())
      out << "   " << pad(m.constraints[i + 1].name())
          << m.constraints[i + 1].rhs;
    out << "\n";
  }
  out << "BOUNDS\n";
  for (int c = 0; c < m.var_count(); ++c)
    out << " BV " << pad("bnd") << m.var_name(c) << "\n";
  out << "ENDATA\n";
  return out.str();
}

/// JSON mirror of LinearModel: {metadata, vars, objective, constraints}.
inline nlohmann::ordered_json to_json(const LinearModel& m) {
  nlohmann::ordered_json j;
  j["metadata"] = {
      {"formulation", std::string(to_string(m.formulation))},
      {"graph_fingerprint", detail::fingerprint_hex(m.graph_fingerprint)}};
  auto vars = nlohmann::ordered_json::array();
  for (int c = 0; c < m.var_count(); ++c)
    vars.push_back({{"name", m.var_name(c)}, {"binary", true}});
  j["vars"] = std::move(vars);
  auto obj_terms = nlohmann::ordered_json::array();
  for (int c = 0; c < m.var_count(); ++c)
    obj_terms.push_back({{"var", m.var_name(c)}, {"coeff", 1}});
  j["objective"] = {{"sense", "minimize"}, {"terms", std::move(obj_terms)}};
  auto cons = nlohmann::ordered_json::array();
  for (const Constraint& c : m.constraints) {
    auto terms = nlohmann::ordered_json::array();
    for (const Term& t : c.terms)
      terms.push_back({{"var", m.var_name(t.var)}, {"coeff", t.coeff}});
    nlohmann::ordered_json prov = nlohmann::ordered_json::array();
    prov.push_back(c.provenance.i);
    if (c.tag != ConstraintTag::domination) prov.push_back(c.provenance.j);
    if (c.tag == ConstraintTag::convexity) prov.push_back(c.provenance.k);
    cons.push_back({{"name", c.name()},
                    {"tag", std::string(to_string(c.tag))},
                    {"terms", std::move(terms)},
                    {"sense", ">="},
                    {"rhs", c.rhs},
                    {"provenance", std::move(prov)}});
  }
  j["constraints"] = std::move(cons);
  return j;
}

inline std::string to_json_text(const LinearModel& m) {
  return to_json(m).dump(2) + "\n";
}

/// Inverse of to_json. Validates the model invariants: declared binary
/// variables, all-ones minimize objective, ">=" rows with coefficients in
/// {-1,+1} referencing declared variables only.
inline LinearModel model_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("bad model JSON: ") + e.what());
  }
  try {
    LinearModel m;
    m.formulation = formulation_from_string(
        j.at("metadata").at("formulation").get<std::string>());
    m.graph_fingerprint = detail::fingerprint_from_hex(
        j.at("metadata").at("graph_fingerprint").get<std::string>());

    std::map<std::string, int> col_of;
    for (const auto& v : j.at("vars")) {
      std::string name = v.at("name").get<std::string>();
      if (!v.at("binary").get<bool>())
        throw Error("variable " + name + " is not binary");
      if (name.rfind("x_", 0) != 0)
        throw Error("variable name " + name + " does not match x_<id>");
      int id = 0;
      auto digits = std::string_view(name).substr(2);
      auto [ptr, ec] =
          std::from_chars(digits.data(), digits.data() + digits.size(), id);
      if (ec != std::errc() || ptr != digits.data() + digits.size() || id < 1)
        throw Error("variable name " + name + " does not match x_<id>");
      if (!m.var_original_ids.empty() && id <= m.var_original_ids.back())
        throw Error("variables are not in ascending id order");
      col_of[name] = static_cast<int>(m.var_original_ids.size());
      m.var_original_ids.push_back(id);
    }

    const auto& obj = j.at("objective");
    if (obj.at("sense").get<std::string>() != "minimize")
      throw Error("objective sense must be minimize");
    if (obj.at("terms").size() != m.var_original_ids.size())
      throw Error("objective must cover every variable");
    for (const auto& t : obj.at("terms"))
      if (t.at("coeff").get<int>() != 1)
        throw Error("objective coefficients must all be 1");

    for (const auto& cj : j.at("constraints")) {
      Constraint c;
      c.tag = tag_from_string(cj.at("tag").get<std::string>());
      if (cj.at("sense").get<std::string>() != ">=")
        throw Error("constraint sense must be >=");
      c.rhs = cj.at("rhs").get<int>();
      for (const auto& tj : cj.at("terms")) {
        std::string var = tj.at("var").get<std::string>();
        auto it = col_of.find(var);
        if (it == col_of.end())
          throw Error("constraint references undeclared variable " + var);
        int coeff = tj.at("coeff").get<int>();
        if (coeff != 1 && coeff != -1)
          throw Error("constraint coefficient out of {-1,+1}");
        c.terms.push_back({it->second, coeff});
      }
      const auto& prov = cj.at("provenance");
      std::size_t want = c.tag == ConstraintTag::domination  ? 1
                         : c.tag == ConstraintTag::convexity ? 3
                                                             : 2;
      if (prov.size() != want)
        throw Error("provenance arity mismatch for tag " +
                    std::string(to_string(c.tag)));
      c.provenance.i = prov.at(0).get<int>();
      if (want > 1) c.provenance.j = prov.at(1).get<int>();
      if (want > 2) c.provenance.k = prov.at(2).get<int>();
      m.constraints.push_back(std::move(c));
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("bad model JSON: ") + e.what());
  }
}

inline std::string export_model(const LinearModel& m, ModelFormat f) {
  switch (f) {
    case ModelFormat::lp: return to_lp(m);
    case ModelFormat::mps: return to_mps(m);
    case ModelFormat::json: return to_json_text(m);
  }
  throw Error("unsupported model format");
}

}  // namespace cvxdom
