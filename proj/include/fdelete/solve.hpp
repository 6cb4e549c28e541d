// Engine dispatch: routes a (family, mode, engine) request to the bespoke
// path/cycle DPs, the generic folio DP, or the brute-force oracle.
#pragma once

#include <optional>

#include "fdelete/dp_c4.hpp"
#include "fdelete/dp_folio.hpp"
#include "fdelete/dp_paths.hpp"
#include "fdelete/oracle.hpp"

namespace fdelete {

enum class Engine { auto_pick, dp, folio, oracle };

inline Engine engine_from_string(const std::string& s) {
  if (s == "auto") return Engine::auto_pick;
  if (s == "dp") return Engine::dp;
  if (s == "folio") return Engine::folio;
  if (s == "oracle") return Engine::oracle;
  throw std::invalid_argument("unknown engine: " + s);
}

struct SolveReport {
  Solution solution;
  std::string engine;  // the engine actually used
};

inline SolveReport solve(const Graph& g, const Family& f, Mode mode, Engine engine,
                         const std::optional<TreeDecomposition>& td_in = std::nullopt) {
  validate_family(f);
  auto td = [&]() { return td_in ? *td_in : heuristic_td(g); };
  bool bespoke = mode == Mode::tm && (f.name == "p3" || f.name == "p4" || f.name == "c4");
  if (engine == Engine::auto_pick) engine = bespoke ? Engine::dp : Engine::folio;

  switch (engine) {
    case Engine::dp: {
      if (!bespoke)
        throw std::invalid_argument("engine dp: only p3/p4/c4 families in tm mode");
      if (f.name == "c4") {
        auto r = solve_c4(g, td());
        return {{r.optimum, r.witness}, "dp-c4"};
      }
      auto ntd = make_nice(td(), g);
      auto r = f.name == "p3" ? solve_p3(g, ntd) : solve_p4(g, ntd);
      return {{r.optimum, r.witness}, "dp-" + f.name};
    }
    case Engine::folio: {
      Solution s;
      if (g.edge_count() == 0) {
        s = mode == Mode::tm ? solve_tm_folio(g, f) : solve_minor(g, f);
      } else {
        BranchDecomposition bd = td_to_branch(td(), g);
        s = mode == Mode::tm ? solve_tm_folio(g, f, bd) : solve_minor(g, f, bd);
      }
      return {s, "folio"};
    }
    case Engine::oracle:
      return {min_deletion_bruteforce(g, f, mode), "oracle"};
    default:
      throw std::logic_error("solve: unreachable engine");
  }
}

}  // namespace fdelete
