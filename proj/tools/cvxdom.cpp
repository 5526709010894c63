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

// cvxdom command line: solve / export / verify / oracle / gen / bench.
//
// Exit codes: 0 success (optimum proved), 1 usage or input error, 2 budget
// exhausted, 3 internal consistency failure. Machine output (JSON, graph
// files, models) goes to stdout; diagnostics go to stderr.

#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cvxdom/cvxdom.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitBudget = 2;
constexpr int kExitInconsistent = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw cvxdom::Error("cannot read file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw cvxdom::Error("cannot write file " + path);
  out << content;
}

cvxdom::Graph load_graph(const std::string& path) {
  std::string text = read_file(path);
  try {
    return cvxdom::parse_graph(text);
  } catch (const cvxdom::ParseError& e) {
    throw cvxdom::Error(path + ": " + e.what());
  } catch (const cvxdom::Error& e) {
    throw cvxdom::Error(path + ": " + e.what());
  }
}

std::string instance_name(const std::string& path) {
  return fs::path(path).stem().string();
}

std::uint64_t parse_u64(const std::string& tok, const char* what) {
  std::uint64_t value = 0;
  auto [ptr, ec] =
      std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw cvxdom::Error(std::string("bad ") + what + " \"" + tok + "\"");
  return value;
}

int parse_pos_int(const std::string& tok, const char* what) {
  std::uint64_t v = parse_u64(tok, what);
  if (v < 1 || v > 1000000000)
    throw cvxdom::Error(std::string(what) + " out of range: " + tok);
  return static_cast<int>(v);
}

cvxdom::Budget make_budget(double time_limit, std::uint64_t node_limit) {
  cvxdom::Budget b;
  if (time_limit > 0) b.time_limit_seconds = time_limit;
  if (node_limit > 0) b.node_limit = node_limit;
  return b;
}

std::vector<int> parse_id_list(const std::string& csv) {
  std::vector<int> ids;
  std::string tok;
  std::istringstream in(csv);
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) throw cvxdom::Error("empty id in set \"" + csv + "\"");
    ids.push_back(parse_pos_int(tok, "vertex id"));
  }
  if (ids.empty()) throw cvxdom::Error("empty vertex set");
  return ids;
}

void emit_json(const nlohmann::ordered_json& j) {
  std::cout << j.dump() << "\n";
}

// ---------------------------------------------------------------- solve

// --formulation only affects cvxds; reject unknown tokens instead of
// silently solving the full model
bool reduced_requested(const std::string& token, cvxdom::Problem problem) {
  if (token == "full") return false;
  if (token != "reduced")
    throw cvxdom::Error("unknown formulation \"" + token +
                        "\" (expected full or reduced)");
  if (problem != cvxdom::Problem::cvxds)
    throw cvxdom::Error("--formulation reduced only applies to cvxds");
  return true;
}

struct SolveArgs {
  std::string graph_path;
  std::string problem = "ds";
  std::string formulation = "full";
  double time_limit = 60.0;
  std::uint64_t node_limit = 0;
  bool with_oracle = false;
  int oracle_limit = cvxdom::kDefaultOracleLimit;
};

int run_solve(const SolveArgs& a) {
  cvxdom::Graph g = load_graph(a.graph_path);
  cvxdom::DistanceMatrix dm(g);
  cvxdom::Problem problem = cvxdom::problem_from_string(a.problem);
  cvxdom::Formulation form =
      cvxdom::formulation_of(problem, reduced_requested(a.formulation, problem));
  cvxdom::LinearModel model = cvxdom::build_model(g, dm, form);
  cvxdom::SolveResult sr =
      cvxdom::solve(model, make_budget(a.time_limit, a.node_limit));

  cvxdom::RunReport report;
  report.instance = instance_name(a.graph_path);
  report.n = g.vertex_count();
  report.m = g.edge_count();
  report.problem = problem;
  report.formulation = form;
  report.rows_domination = model.count(cvxdom::ConstraintTag::domination);
  report.rows_convexity = model.count(cvxdom::ConstraintTag::convexity);
  report.rows_weak_convexity =
      model.count(cvxdom::ConstraintTag::weak_convexity);
  report.status = sr.status;
  report.value = sr.value;
  if (sr.value) report.witness_ids = sr.witness.to_original(g);
  report.nodes = sr.stats.nodes;
  report.propagations = sr.stats.propagations;
  report.millis = sr.stats.millis;

  bool witness_bad = false;
  if (sr.status == cvxdom::SolveStatus::optimal) {
    witness_bad = !cvxdom::verify_witness(model, sr.witness) ||
                  !cvxdom::satisfies(g, dm, sr.witness,
                                     cvxdom::kind_of(problem));
  }

  bool mismatch = false;
  if (a.with_oracle) {
    cvxdom::SolveResult ov =
        cvxdom::oracle_minimum(g, dm, cvxdom::kind_of(problem),
                               a.oracle_limit);
    report.oracle_value = ov.value;
    mismatch = sr.status == cvxdom::SolveStatus::optimal &&
               sr.value != ov.value;
    report.consistent = !mismatch;
  }

  emit_json(cvxdom::to_json(report));
  if (witness_bad) {
    std::cerr << "error: witness fails verification; solver bug\n";
    return kExitInconsistent;
  }
  if (mismatch) {
    std::cerr << "error: solver and oracle disagree\n";
    return kExitInconsistent;
  }
  switch (sr.status) {
    case cvxdom::SolveStatus::optimal: return kExitOk;
    case cvxdom::SolveStatus::timeout: return kExitBudget;
    case cvxdom::SolveStatus::infeasible: break;
  }
  std::cerr << "error: model infeasible on a connected graph; builder bug\n";
  return kExitInconsistent;
}

// ---------------------------------------------------------------- export

struct ExportArgs {
  std::string graph_path;
  std::string problem = "ds";
  std::string formulation = "full";
  std::string format = "lp";
  std::string out_path;
  bool keep_trivial = false;
};

int run_export(const ExportArgs& a) {
  cvxdom::Graph g = load_graph(a.graph_path);
  cvxdom::DistanceMatrix dm(g);
  cvxdom::Problem problem = cvxdom::problem_from_string(a.problem);
  cvxdom::Formulation form =
      cvxdom::formulation_of(problem, reduced_requested(a.formulation, problem));
  cvxdom::BuildOptions opts;
  opts.keep_trivial = a.keep_trivial;
  cvxdom::LinearModel model = cvxdom::build_model(g, dm, form, opts);
  cvxdom::ModelFormat format = cvxdom::model_format_from_string(a.format);
  write_output(a.out_path, cvxdom::export_model(model, format));
  return kExitOk;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string graph_path;
  std::string problem = "ds";
  std::string set_csv;
};

int run_verify(const VerifyArgs& a) {
  cvxdom::Graph g = load_graph(a.graph_path);
  cvxdom::DistanceMatrix dm(g);
  cvxdom::Problem problem = cvxdom::problem_from_string(a.problem);
  cvxdom::VertexSet set =
      cvxdom::VertexSet::from_original(g, parse_id_list(a.set_csv));

  bool dominating = cvxdom::is_dominating(g, set);
  nlohmann::ordered_json j;
  j["dominating"] = dominating;
  bool feasible = dominating;
  if (problem == cvxdom::Problem::wcvxds) {
    bool wc = cvxdom::is_weakly_convex(g, dm, set);
    j["weakly_convex"] = wc;
    feasible = feasible && wc;
  } else if (problem == cvxdom::Problem::cvxds) {
    bool cv = cvxdom::is_convex(g, dm, set);
    j["convex"] = cv;
    feasible = feasible && cv;
  }
  j["feasible"] = feasible;
  emit_json(j);

  // the model rows must tell the same story as the predicates
  cvxdom::LinearModel model =
      cvxdom::build_model(g, dm, cvxdom::formulation_of(problem));
  if (cvxdom::verify_witness(model, set) != feasible) {
    std::cerr << "error: predicates and model rows disagree\n";
    return kExitInconsistent;
  }
  return kExitOk;
}

// ---------------------------------------------------------------- oracle

struct OracleArgs {
  std::string graph_path;
  std::string problem = "ds";
  int limit = cvxdom::kDefaultOracleLimit;
};

int run_oracle(const OracleArgs& a) {
  cvxdom::Graph g = load_graph(a.graph_path);
  cvxdom::DistanceMatrix dm(g);
  cvxdom::Problem problem = cvxdom::problem_from_string(a.problem);
  cvxdom::SolveResult sr =
      cvxdom::oracle_minimum(g, dm, cvxdom::kind_of(problem), a.limit);

  cvxdom::RunReport report;
  report.instance = instance_name(a.graph_path);
  report.n = g.vertex_count();
  report.m = g.edge_count();
  report.problem = problem;
  report.status = sr.status;
  report.value = sr.value;
  if (sr.value) report.witness_ids = sr.witness.to_original(g);
  report.nodes = sr.stats.nodes;
  report.millis = sr.stats.millis;
  emit_json(cvxdom::to_json(report));
  return kExitOk;
}

// ---------------------------------------------------------------- gen

struct GenArgs {
  std::string family;
  std::vector<std::string> params;
  std::string out_path;
};

cvxdom::Graph gen_graph(const std::string& family,
                        const std::vector<std::string>& params) {
  auto want = [&](std::size_t k) {
    if (params.size() != k)
      throw cvxdom::Error("gen " + family + " takes " + std::to_string(k) +
                          " parameter(s)");
  };
  if (family == "path") {
    want(1);
    return cvxdom::gen_path(parse_pos_int(params[0], "n"));
  }
  if (family == "cycle") {
    want(1);
    return cvxdom::gen_cycle(parse_pos_int(params[0], "n"));
  }
  if (family == "grid") {
    want(2);
    return cvxdom::gen_grid(parse_pos_int(params[0], "rows"),
                            parse_pos_int(params[1], "cols"));
  }
  if (family == "torus") {
    want(2);
    return cvxdom::gen_torus(parse_pos_int(params[0], "rows"),
                             parse_pos_int(params[1], "cols"));
  }
  if (family == "gnm") {
    want(3);
    return cvxdom::gen_gnm(parse_pos_int(params[0], "n"),
                           parse_u64(params[1], "m"),
                           parse_u64(params[2], "seed"));
  }
  throw cvxdom::Error("unknown family \"" + family +
                      "\" (path, cycle, grid, torus, gnm)");
}

int run_gen(const GenArgs& a) {
  cvxdom::Graph g = gen_graph(a.family, a.params);
  std::string comment = a.family;
  for (const std::string& p : a.params) comment += " " + p;
  write_output(a.out_path, cvxdom::write_dimacs(g, comment));
  return kExitOk;
}

// ---------------------------------------------------------------- bench

struct BenchArgs {
  std::vector<std::string> inputs;
  std::string problems = "ds,wcvxds,cvxds";
  std::string formulations = "full";
  double time_limit = 60.0;
  std::uint64_t node_limit = 0;
  int jobs = 0;
  std::string csv_path = "bench.csv";
};

void add_spec_instances(const std::string& spec,
                        std::vector<cvxdom::BenchInstance>& out) {
  std::vector<std::string> parts;
  std::string tok;
  std::istringstream in(spec);
  while (std::getline(in, tok, ':')) parts.push_back(tok);
  if (parts.empty()) throw cvxdom::Error("empty instance spec");
  std::string family = parts[0];
  std::vector<std::string> rest(parts.begin() + 1, parts.end());

  if (family == "gnm") {
    if (rest.size() != 4)
      throw cvxdom::Error("gnm spec is gnm:count:n:m:seed");
    int count = parse_pos_int(rest[0], "count");
    int n = parse_pos_int(rest[1], "n");
    std::uint64_t m = parse_u64(rest[2], "m");
    std::uint64_t seed = parse_u64(rest[3], "seed");
    for (int i = 0; i < count; ++i) {
      char name[64];
      std::snprintf(name, sizeof(name), "gnm_n%d_m%llu_s%06llu", n,
                    static_cast<unsigned long long>(m),
                    static_cast<unsigned long long>(seed + i));
      out.push_back({name, cvxdom::gen_gnm(n, m, seed + i)});
    }
    return;
  }
  std::string name = family;
  for (const std::string& p : rest) name += "_" + p;
  out.push_back({name, gen_graph(family, rest)});
}

std::vector<cvxdom::BenchInstance> collect_instances(
    const std::vector<std::string>& inputs) {
  std::vector<cvxdom::BenchInstance> instances;
  for (const std::string& input : inputs) {
    if (fs::is_directory(input)) {
      std::vector<fs::path> files;
      for (const auto& entry : fs::directory_iterator(input)) {
        if (!entry.is_regular_file()) continue;
        std::string ext = entry.path().extension().string();
        if (ext == ".col" || ext == ".dimacs" || ext == ".edges" ||
            ext == ".graph" || ext == ".txt")
          files.push_back(entry.path());
      }
      if (files.empty())
        throw cvxdom::Error("no graph files in directory " + input);
      std::sort(files.begin(), files.end());
      for (const fs::path& f : files)
        instances.push_back(
            {f.stem().string(), load_graph(f.string())});
    } else if (fs::is_regular_file(input)) {
      instances.push_back({instance_name(input), load_graph(input)});
    } else if (input.find(':') != std::string::npos) {
      add_spec_instances(input, instances);
    } else {
      throw cvxdom::Error("no such file, directory or instance spec: " +
                          input);
    }
  }
  return instances;
}

int run_bench(const BenchArgs& a) {
  cvxdom::BenchOptions options;
  options.problems.clear();
  {
    std::string tok;
    std::istringstream in(a.problems);
    while (std::getline(in, tok, ','))
      options.problems.push_back(cvxdom::problem_from_string(tok));
  }
  options.run_full = false;
  options.run_reduced = false;
  {
    std::string tok;
    std::istringstream in(a.formulations);
    while (std::getline(in, tok, ',')) {
      if (tok == "full")
        options.run_full = true;
      else if (tok == "reduced")
        options.run_reduced = true;
      else
        throw cvxdom::Error("unknown formulation \"" + tok + "\"");
    }
  }
  options.budget = make_budget(a.time_limit, a.node_limit);
  options.jobs = a.jobs;

  cvxdom::BenchResult result =
      cvxdom::run_bench(collect_instances(a.inputs), options);

  write_output(a.csv_path, cvxdom::to_csv(result.rows));
  emit_json(cvxdom::to_json(result.summary));
  std::cerr << result.summary.rows << " rows -> " << a.csv_path << "\n";

  const cvxdom::BenchSummary& s = result.summary;
  if (s.lemma1_violations > 0 ||
      s.full_reduced_agreements != s.full_reduced_pairs) {
    std::cerr << "error: consistency check failed (chain violations or "
                 "formulation disagreement)\n";
    return kExitInconsistent;
  }
  if (s.timeouts > 0) return kExitBudget;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact solvers for minimum dominating sets, plain or with (weak) "
      "convexity requirements"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  CLI::App* solve_cmd =
      app.add_subcommand("solve", "solve a problem on a graph file");
  solve_cmd->add_option("graph", solve_args.graph_path, "graph file")
      ->required();
  solve_cmd
      ->add_option("--problem", solve_args.problem, "ds | wcvxds | cvxds")
      ->required();
  solve_cmd->add_option("--formulation", solve_args.formulation,
                        "full | reduced (cvxds only, default full)");
  solve_cmd->add_option("--time-limit", solve_args.time_limit,
                        "seconds, 0 = unlimited (default 60)");
  solve_cmd->add_option("--node-limit", solve_args.node_limit,
                        "search nodes, 0 = unlimited");
  solve_cmd->add_flag("--with-oracle", solve_args.with_oracle,
                      "cross-check against brute force");
  solve_cmd->add_option("--oracle-limit", solve_args.oracle_limit,
                        "max n for the brute-force cross-check");

  ExportArgs export_args;
  CLI::App* export_cmd =
      app.add_subcommand("export", "write the model for a graph");
  export_cmd->add_option("graph", export_args.graph_path, "graph file")
      ->required();
  export_cmd
      ->add_option("--problem", export_args.problem, "ds | wcvxds | cvxds")
      ->required();
  export_cmd->add_option("--formulation", export_args.formulation,
                         "full | reduced (cvxds only, default full)");
  export_cmd
      ->add_option("-f,--format", export_args.format, "lp | mps | json")
      ->required();
  export_cmd->add_flag("--keep-trivial", export_args.keep_trivial,
                       "keep rows that are satisfied identically");
  export_cmd->add_option("-o,--output", export_args.out_path,
                         "output path (default stdout)");

  VerifyArgs verify_args;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "check a vertex set against a problem");
  verify_cmd->add_option("graph", verify_args.graph_path, "graph file")
      ->required();
  verify_cmd
      ->add_option("--problem", verify_args.problem, "ds | wcvxds | cvxds")
      ->required();
  verify_cmd
      ->add_option("--set", verify_args.set_csv,
                   "comma-separated vertex ids")
      ->required();

  OracleArgs oracle_args;
  CLI::App* oracle_cmd =
      app.add_subcommand("oracle", "brute-force optimum (small graphs)");
  oracle_cmd->add_option("graph", oracle_args.graph_path, "graph file")
      ->required();
  oracle_cmd
      ->add_option("--problem", oracle_args.problem, "ds | wcvxds | cvxds")
      ->required();
  oracle_cmd->add_option("--limit", oracle_args.limit,
                         "refuse graphs with more vertices than this");

  GenArgs gen_args;
  CLI::App* gen_cmd =
      app.add_subcommand("gen", "generate a graph (DIMACS to stdout)");
  gen_cmd
      ->add_option("family", gen_args.family,
                   "path | cycle | grid | torus | gnm")
      ->required();
  gen_cmd->add_option("params", gen_args.params,
                      "path n | cycle n | grid r c | torus r c | gnm n m "
                      "seed");
  gen_cmd->add_option("-o,--output", gen_args.out_path,
                      "output path (default stdout)");

  BenchArgs bench_args;
  CLI::App* bench_cmd = app.add_subcommand(
      "bench", "run a problem matrix over many instances");
  bench_cmd
      ->add_option("inputs", bench_args.inputs,
                   "graph files, directories, or specs like gnm:50:10:15:7")
      ->required();
  bench_cmd->add_option("--problems", bench_args.problems,
                        "comma list (default ds,wcvxds,cvxds)");
  bench_cmd->add_option("--formulations", bench_args.formulations,
                        "comma list of full,reduced for cvxds (default "
                        "full)");
  bench_cmd->add_option("--time-limit", bench_args.time_limit,
                        "seconds per task, 0 = unlimited (default 60)");
  bench_cmd->add_option("--node-limit", bench_args.node_limit,
                        "nodes per task, 0 = unlimited");
  bench_cmd->add_option("--jobs", bench_args.jobs,
                        "worker threads (default: hardware)");
  bench_cmd->add_option("--csv", bench_args.csv_path,
                        "row output path (default bench.csv)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (solve_cmd->parsed()) return run_solve(solve_args);
    if (export_cmd->parsed()) return run_export(export_args);
    if (verify_cmd->parsed()) return run_verify(verify_args);
    if (oracle_cmd->parsed()) return run_oracle(oracle_args);
    if (gen_cmd->parsed()) return run_gen(gen_args);
    if (bench_cmd->parsed()) return run_bench(bench_args);
  } catch (const cvxdom::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
