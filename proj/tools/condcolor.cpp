// Command-line front end: generate family graphs, emit closed-form
// colorings, verify colorings, solve exactly, and run theorem sweeps.
//
// Exit codes: 0 ok, 1 invalid coloring, 2 input/usage error, 3 budget
// exhausted.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "condcolor/claims.hpp"
#include "condcolor/constructions.hpp"
#include "condcolor/io.hpp"
#include "condcolor/solver.hpp"
#include "condcolor/sweep.hpp"

namespace {

using namespace condcolor;

constexpr int kExitOk = 0;
constexpr int kExitInvalidColoring = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct FamilyArgs {
  std::string family;
  int n = 0, m = 0, t = 0, p = 0;
  std::string base = "cycle";
};

void add_family_options(CLI::App* cmd, FamilyArgs& args) {
  cmd->add_option("family", args.family, "family name: path, cycle, complete, wheel, "
                                         "cycle-square, grid2n, strong-grid, web, power")
      ->required();
  cmd->add_option("--n", args.n, "primary size parameter");
  cmd->add_option("--m", args.m, "second grid dimension (strong-grid)");
  cmd->add_option("--t", args.t, "ring count (web)");
  cmd->add_option("--p", args.p, "power exponent (power)");
  cmd->add_option("--base", args.base, "base family for power: path or cycle");
}

FamilySpec to_spec(const FamilyArgs& args) {
  auto family = parse_family(args.family);
  if (!family) throw std::invalid_argument("unknown family: " + args.family);
  FamilySpec spec;
  spec.family = *family;
  spec.n = args.n;
  spec.m = args.m;
  spec.t = args.t;
  spec.p = args.p;
  if (*family == Family::power_of) {
    auto base = parse_family(args.base);
    if (!base) throw std::invalid_argument("unknown base family: " + args.base);
    spec.base = *base;
  }
  return spec;
}

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
  } else {
    std::ofstream out(output_path);
    if (!out) throw std::invalid_argument("cannot open output file: " + output_path);
    out << text;
  }
}

// Accepts "7", "3..12", or "3,5,7".
std::vector<int> parse_range(const std::string& text) {
  std::vector<int> out;
  if (auto dots = text.find(".."); dots != std::string::npos) {
    int lo = std::stoi(text.substr(0, dots));
    int hi = std::stoi(text.substr(dots + 2));
    for (int i = lo; i <= hi; ++i) out.push_back(i);
    return out;
  }
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(std::stoi(item));
  return out;
}

// Graph files may be DIMACS .col or the JSON schema; sniff the first byte.
Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph file: " + path);
  char first = 0;
  in >> first;
  in.putback(first);
  return first == '{' ? graph_from_json(in) : from_dimacs(in);
}

int run_gen(const FamilyArgs& args, const std::string& format, const std::string& output) {
  FamilySpec spec = to_spec(args);
  Graph g = build(spec);
  if (format == "dimacs")
    emit(to_dimacs(g), output);
  else if (format == "json")
    emit(graph_to_json(g, spec), output);
  else if (format == "dot")
    emit(to_dot(g), output);
  else
    throw std::invalid_argument("unknown format: " + format);
  return kExitOk;
}

int run_construct(const FamilyArgs& args, int r, const std::string& output) {
  FamilySpec spec = to_spec(args);
  Graph g = build(spec);
  ClaimedColoring claimed = [&]() -> ClaimedColoring {
    switch (spec.family) {
      case Family::grid2n:
        if (r < 2) throw UnsupportedCase("grid2n coloring covers r >= 2");
        return grid2n_coloring(spec.n);
      case Family::cycle_square:
        return cycle_square_coloring(spec.n, r);
      case Family::strong_grid:
        return strong_grid_coloring(spec.n, spec.m, r);
      case Family::web:
        if (r != 2) throw UnsupportedCase("web dynamic coloring covers r = 2 only");
        return web_dynamic_coloring(spec.t, spec.n);
      default:
        throw UnsupportedCase("no closed-form coloring for family " + family_name(spec.family));
    }
  }();

  Verdict verdict = verify_conditional(g, claimed.coloring, {r, claimed.claimed_k});
  nlohmann::json j;
  j["source"] = claimed.source;
  j["claimed_k"] = claimed.claimed_k;
  j["claimed_r"] = claimed.claimed_r;
  j["coloring"] = nlohmann::json::parse(coloring_to_json(claimed.coloring));
  j["verdict"] = nlohmann::json::parse(verdict_to_json(verdict));
  emit(j.dump(2), output);
  return verdict.valid() ? kExitOk : kExitInvalidColoring;
}

int run_verify(const std::string& graph_path, const std::string& coloring_path, int r, int k,
               bool strict, const std::string& output) {
  Graph g = load_graph(graph_path);
  std::ifstream cin_file(coloring_path);
  if (!cin_file) throw std::invalid_argument("cannot open coloring file: " + coloring_path);
  Coloring c = coloring_from_json(cin_file);
  if (k > 0) c.k = k;
  Verdict verdict = verify_conditional(g, c, {r, c.k}, strict);
  emit(verdict_to_json(verdict), output);
  return verdict.valid() ? kExitOk : kExitInvalidColoring;
}

int run_solve(const FamilyArgs& args, const std::string& graph_path, int r, std::uint64_t budget,
              const std::string& output) {
  Graph g = graph_path.empty() ? build(to_spec(args)) : load_graph(graph_path);
  SolveResult result = chi_r_exact(g, r, budget);
  nlohmann::json j;
  j["chi"] = result.chi;
  j["status"] = result.status == SolveStatus::solved ? "solved" : "budget_exhausted";
  j["witness"] = nlohmann::json::parse(coloring_to_json(result.witness));
  j["bounds"] = nlohmann::json::array();
  for (const auto& b : result.lower_bounds) j["bounds"].push_back({{"name", b.name}, {"value", b.value}});
  j["nodes"] = result.nodes_explored;
  j["elapsed_us"] = result.elapsed.count();
  emit(j.dump(2), output);
  return result.status == SolveStatus::solved ? kExitOk : kExitBudget;
}

int run_sweep_cmd(const std::string& theorem_text, const std::string& n_range,
                  const std::string& t_range, const std::string& r_list, int solver_cap,
                  std::uint64_t budget, const std::string& output) {
  auto theorem = parse_theorem(theorem_text);
  if (!theorem) throw std::invalid_argument("unknown theorem: " + theorem_text);
  SweepOptions opts;
  opts.solver_cap = solver_cap;
  opts.node_budget = budget;
  if (!r_list.empty()) opts.r_values = parse_range(r_list);
  SweepReport report = run_sweep(*theorem, parse_range(n_range),
                                 t_range.empty() ? std::vector<int>{} : parse_range(t_range), opts);
  emit(sweep_report_to_json(report), output);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"conditional-coloring toolkit: graph families, closed-form colorings, "
               "verification, and exact chi_r"};
  app.require_subcommand(1);

  std::string format = "json", output;
  int r = 2, k = 0, solver_cap = 14;
  bool strict = false;
  std::uint64_t budget = condcolor::kDefaultNodeBudget;
  std::string graph_path, coloring_path, theorem, n_range = "3..12", t_range, r_list;
  FamilyArgs gen_args, construct_args, solve_args;

  auto* gen = app.add_subcommand("gen", "generate a family graph");
  add_family_options(gen, gen_args);
  gen->add_option("--format", format, "dimacs, json, or dot");
  gen->add_option("--output", output, "write to file instead of stdout");

  auto* construct = app.add_subcommand("construct", "emit a closed-form coloring and its verdict");
  add_family_options(construct, construct_args);
  construct->add_option("--r", r, "conditional coloring order r")->required();
  construct->add_option("--output", output);

  auto* verify = app.add_subcommand("verify", "check a coloring file against a graph file");
  verify->add_option("--graph", graph_path, "graph file (DIMACS or JSON)")->required();
  verify->add_option("--coloring", coloring_path, "coloring JSON file")->required();
  verify->add_option("--r", r)->required();
  verify->add_option("--k", k, "override palette size");
  verify->add_flag("--strict-surjective", strict, "require every color 1..k to be used");
  verify->add_option("--output", output);

  auto* solve = app.add_subcommand("solve", "compute exact chi_r");
  add_family_options(solve, solve_args);
  solve->get_option("family")->required(false);
  solve->add_option("--graph", graph_path, "solve a graph file instead of a family");
  solve->add_option("--r", r)->required();
  solve->add_option("--budget", budget, "search node budget");
  solve->add_option("--output", output);

  auto* sweep = app.add_subcommand("sweep", "verify a theorem's claims over a parameter range");
  sweep->add_option("theorem", theorem, "prop1, thm1, thm2, or thm3")->required();
  sweep->add_option("--n", n_range, "n values, e.g. 3..12 or 13,14,19");
  sweep->add_option("--t", t_range, "t values (thm3)");
  sweep->add_option("--r", r_list, "override r values");
  sweep->add_option("--solver-cap", solver_cap, "skip exact solving above this vertex count");
  sweep->add_option("--budget", budget, "search node budget");
  sweep->add_option("--output", output);

  auto* errata = app.add_subcommand("errata", "print the construction errata table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (gen->parsed()) return run_gen(gen_args, format, output);
    if (construct->parsed()) return run_construct(construct_args, r, output);
    if (verify->parsed()) return run_verify(graph_path, coloring_path, r, k, strict, output);
    if (solve->parsed()) {
      if (solve_args.family.empty() && graph_path.empty())
        throw std::invalid_argument("solve: give a family or --graph");
      return run_solve(solve_args, graph_path, r, budget, output);
    }
    if (sweep->parsed()) return run_sweep_cmd(theorem, n_range, t_range, r_list, solver_cap, budget, output);
    if (errata->parsed()) {
      std::cout << condcolor::errata_json() << "\n";
      return kExitOk;
    }
  } catch (const condcolor::ExcludedCase& e) {
    std::cerr << "excluded case: " << e.what() << "\n";
    return kExitUsage;
  } catch (const condcolor::UnsupportedCase& e) {
    std::cerr << "unsupported case: " << e.what() << "\n";
    return kExitUsage;
  } catch (const condcolor::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
