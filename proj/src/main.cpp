// Command-line entry point: solve deletion instances, verify solutions, and
// generate hardness instances. File formats live in io.hpp.
#include <chrono>
#include <iostream>

#include <CLI11.hpp>

#include "fdelete/io.hpp"
#include "fdelete/solve.hpp"

namespace {

using namespace fdelete;

Family load_family(const std::string& name, const std::string& family_file) {
  if (name == "custom") {
    if (family_file.empty())
      throw std::invalid_argument("--family custom requires --family-file");
    return family_from_json(nlohmann::json::parse(read_file(family_file)));
  }
  if (name == "p3" || name == "p4" || name == "c4") return named_family(name);
  // single-member shorthands for the generators: p<h>, c<h>, k<h>
  if (name.size() >= 2 && (name[0] == 'p' || name[0] == 'c' || name[0] == 'k') &&
      name.find_first_not_of("0123456789", 1) == std::string::npos) {
    int h = std::stoi(name.substr(1));
    if (h >= 2) {
      Graph m = name[0] == 'p' ? path_graph(h) : name[0] == 'c' ? cycle_graph(h)
                                                                : complete_graph(h);
      return Family{name, {m}};
    }
  }
  throw std::invalid_argument("unknown family: " + name);
}

Mode mode_from_string(const std::string& s) {
  if (s == "tm") return Mode::tm;
  if (s == "minor") return Mode::minor;
  throw std::invalid_argument("unknown mode: " + s);
}

// solution files: whitespace-separated 1-based vertex ids (matching .gr)
std::vector<int> parse_solution(const std::string& text, int n) {
  std::istringstream in(text);
  std::vector<int> s;
  long long v;
  while (in >> v) {
    if (v < 1 || v > n) throw std::invalid_argument("solution: vertex id out of range");
    s.push_back((int)v - 1);
  }
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

struct SolveArgs {
  std::string family = "p3", family_file, mode = "tm", engine = "auto", graph, td;
  int budget = -1;
  bool json = false;
};

int run_solve(const SolveArgs& a) {
  Graph g = parse_gr(read_file(a.graph));
  Family f = load_family(a.family, a.family_file);
  std::optional<TreeDecomposition> td;
  if (!a.td.empty()) {
    td = parse_td(read_file(a.td));
    auto diag = validate_td(g, *td);
    if (!diag.ok) throw std::invalid_argument("invalid tree decomposition: " + diag.message);
  }
  auto t0 = std::chrono::steady_clock::now();
  SolveReport rep = solve(g, f, mode_from_string(a.mode), engine_from_string(a.engine), td);
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  if (!verify_solution(g, f, mode_from_string(a.mode), rep.solution.witness))
    throw std::logic_error("solver produced an invalid witness");
  if (a.json) {
    nlohmann::json j;
    j["schema"] = 1;
    j["instance"] = a.graph;
    j["solver"] = rep.engine;
    j["optimum"] = rep.solution.optimum;
    nlohmann::json w = nlohmann::json::array();
    for (int v : rep.solution.witness) w.push_back(v + 1);
    j["solution"] = w;
    j["wall_ms"] = ms;
    j["verified"] = true;
    if (a.budget >= 0) j["within_budget"] = rep.solution.optimum <= a.budget;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "optimum " << rep.solution.optimum << "\n";
    std::cout << "witness";
    for (int v : rep.solution.witness) std::cout << " " << v + 1;
    std::cout << "\n";
    std::cout << "engine " << rep.engine << "\n";
    if (a.budget >= 0)
      std::cout << "within-budget " << (rep.solution.optimum <= a.budget ? "yes" : "no") << "\n";
  }
  return 0;
}

struct VerifyArgs {
  std::string family = "p3", family_file, mode = "tm", graph, solution;
};

int run_verify(const VerifyArgs& a) {
  Graph g = parse_gr(read_file(a.graph));
  Family f = load_family(a.family, a.family_file);
  auto s = parse_solution(read_file(a.solution), g.n);
  bool ok = verify_solution(g, f, mode_from_string(a.mode), s);
  std::cout << (ok ? "valid" : "invalid") << "\n";
  return ok ? 0 : 1;
}

struct GenArgs {
  std::string kind, family = "p6", family_file, graph, completion = "auto", out = "instance";
  int k = 2, s = 2, h = 0;
  unsigned long long seed = 1;
  double extra_p = 0.3;
  bool emit_td_file = true;
};

int run_gen(const GenArgs& a) {
  Family f = load_family(a.family, a.family_file);
  HardnessInstance inst;
  std::string completion = "none";
  if (a.kind == "vc") {
    if (a.graph.empty()) throw std::invalid_argument("gen vc requires --graph");
    inst = vc_reduction(parse_gr(read_file(a.graph)), f);
  } else if (a.kind == "choice") {
    inst = choice_gadget(f, a.s);
  } else if (a.kind == "permclique") {
    Completion comp;
    bool is_path = f.members.size() == 1 &&
                   is_isomorphic(f.members[0], path_graph(f.members[0].n));
    std::string want = a.completion;
    if (want == "auto") want = is_path ? "paths" : "kclass";
    if (want == "paths") {
      comp.kind = Completion::paths;
      comp.h = a.h > 0 ? a.h : (is_path ? f.members[0].n : 0);
    } else if (want == "kclass") {
      comp.kind = Completion::kclass;
    } else if (want != "none") {
      throw std::invalid_argument("unknown completion: " + a.completion);
    }
    auto [g_pc, sigma] = random_permclique_grid(a.k, a.extra_p, a.seed);
    auto pc = general_construction(g_pc, a.k, f, comp);
    inst = pc.inst;
    completion = want;
    // sidecar solution for the planted permutation
    auto sol = sigma_solution(pc, sigma);
    std::ostringstream ss;
    for (int v : sol) ss << v + 1 << "\n";
    write_file(a.out + ".solution", ss.str());
  } else {
    throw std::invalid_argument("unknown generator: " + a.kind);
  }
  write_file(a.out + ".gr", emit_gr(inst.graph));
  if (a.emit_td_file) write_file(a.out + ".td", emit_td(heuristic_td(inst.graph), inst.graph.n));
  write_file(a.out + ".json", registry_to_json(inst, completion).dump(2) + "\n");
  std::cout << "budget " << inst.budget << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimum vertex deletion against forbidden (topological) minors"};
  app.set_help_flag("--help", "print help");  // keep -h free for gen's --h option
  app.require_subcommand(1);

  SolveArgs sa;
  auto* solve_cmd = app.add_subcommand("solve", "solve an instance");
  solve_cmd->add_option("--family", sa.family, "p3|p4|c4|custom");
  solve_cmd->add_option("--family-file", sa.family_file, "JSON family (custom)");
  solve_cmd->add_option("--mode", sa.mode, "tm|minor");
  solve_cmd->add_option("--engine", sa.engine, "auto|dp|folio|oracle");
  solve_cmd->add_option("--graph", sa.graph, ".gr instance")->required();
  solve_cmd->add_option("--td", sa.td, ".td tree decomposition");
  solve_cmd->add_option("--budget", sa.budget, "report whether optimum <= budget");
  solve_cmd->add_flag("--json", sa.json, "JSON report");

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "verify a solution file");
  verify_cmd->add_option("--family", va.family, "p3|p4|c4|custom");
  verify_cmd->add_option("--family-file", va.family_file, "JSON family (custom)");
  verify_cmd->add_option("--mode", va.mode, "tm|minor");
  verify_cmd->add_option("--graph", va.graph, ".gr instance")->required();
  verify_cmd->add_option("--solution", va.solution, "file of 1-based vertex ids")->required();

  GenArgs ga;
  auto* gen_cmd = app.add_subcommand("gen", "generate a hardness instance");
  gen_cmd->set_help_flag("--help", "print help");
  gen_cmd->add_option("kind", ga.kind, "vc|permclique|choice")->required();
  gen_cmd->add_option("--family", ga.family, "p3|p4|c4|custom");
  gen_cmd->add_option("--family-file", ga.family_file, "JSON family (custom)");
  gen_cmd->add_option("--graph", ga.graph, "vertex cover input (.gr)");
  gen_cmd->add_option("--k", ga.k, "permutation clique side");
  gen_cmd->add_option("--s", ga.s, "choice gadget size");
  gen_cmd->add_option("--h", ga.h, "path length for the paths completion");
  gen_cmd->add_option("--completion", ga.completion, "auto|paths|kclass|none");
  gen_cmd->add_option("--seed", ga.seed, "generator seed");
  gen_cmd->add_option("--extra-p", ga.extra_p, "extra edge probability");
  gen_cmd->add_option("--out", ga.out, "output path prefix");

  try {
    app.parse(argc, argv);
    if (*solve_cmd) return run_solve(sa);
    if (*verify_cmd) return run_verify(va);
    return run_gen(ga);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const fdelete::CapabilityError& e) {
    std::cerr << "capability error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
