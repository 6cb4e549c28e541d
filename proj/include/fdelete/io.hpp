// File formats: PACE-style .gr graphs and .td tree decompositions, JSON
// custom-family descriptions, and the gadget-registry sidecar.
#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "fdelete/decomp.hpp"
#include "fdelete/family.hpp"
#include "fdelete/graph.hpp"
#include "fdelete/hardness.hpp"

namespace fdelete {

// .gr grammar: comment lines `c ...`; header `p tw <n> <m>`; then m edge
// lines `<u> <v>` with 1-based vertex ids.
inline Graph parse_gr(std::istream& in) {
  std::string line;
  Graph g(0);
  long long n = -1, m = -1, seen = 0;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok == "c") continue;
    if (tok == "p") {
      std::string kind;
      if (n >= 0 || !(ls >> kind >> n >> m) || kind != "tw" || n < 0 || m < 0)
        throw std::invalid_argument("gr: malformed problem line");
      g = Graph((int)n);
      continue;
    }
    if (n < 0) throw std::invalid_argument("gr: edge before problem line");
    long long u = 0, v = 0;
    std::istringstream es(line);
    if (!(es >> u >> v) || u < 1 || v < 1 || u > n || v > n || u == v)
      throw std::invalid_argument("gr: malformed edge line: " + line);
    g.add_edge((int)u - 1, (int)v - 1);
    ++seen;
  }
  if (n < 0) throw std::invalid_argument("gr: missing problem line");
  if (seen != m) throw std::invalid_argument("gr: edge count mismatch");
  return g;
}

inline Graph parse_gr(const std::string& text) {
  std::istringstream in(text);
  return parse_gr(in);
}

inline std::string emit_gr(const Graph& g) {
  std::ostringstream out;
  auto edges = g.edges();
  out << "p tw " << g.n << " " << edges.size() << "\n";
  for (auto [u, v] : edges) out << u + 1 << " " << v + 1 << "\n";
  return out.str();
}

// .td grammar: comments `c ...`; header `s td <bags> <maxbagsize> <n>`; bag
// lines `b <id> <v...>` (ids 1-based); then tree edges `<id1> <id2>`.
inline TreeDecomposition parse_td(std::istream& in) {
  std::string line;
  TreeDecomposition td;
  long long bags = -1, maxbag = -1, n = -1;
  std::vector<char> seen_bag;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok == "c") continue;
    if (tok == "s") {
      std::string kind;
      if (bags >= 0 || !(ls >> kind >> bags >> maxbag >> n) || kind != "td" || bags < 0)
        throw std::invalid_argument("td: malformed solution line");
      td.bags.assign(bags, {});
      seen_bag.assign(bags, 0);
      continue;
    }
    if (bags < 0) throw std::invalid_argument("td: content before solution line");
    if (tok == "b") {
      long long id = 0;
      if (!(ls >> id) || id < 1 || id > bags) throw std::invalid_argument("td: bad bag id");
      if (seen_bag[id - 1]) throw std::invalid_argument("td: duplicate bag");
      seen_bag[id - 1] = 1;
      long long v;
      std::vector<int> bag;
      while (ls >> v) {
        if (v < 1 || v > n) throw std::invalid_argument("td: bag vertex out of range");
        bag.push_back((int)v - 1);
      }
      std::sort(bag.begin(), bag.end());
      bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
      if ((long long)bag.size() > maxbag) throw std::invalid_argument("td: bag too large");
      td.bags[id - 1] = std::move(bag);
      continue;
    }
    long long a = 0, b = 0;
    std::istringstream es(line);
    if (!(es >> a >> b) || a < 1 || b < 1 || a > bags || b > bags || a == b)
      throw std::invalid_argument("td: malformed tree edge: " + line);
    td.tree_edges.push_back({(int)a - 1, (int)b - 1});
  }
  if (bags < 0) throw std::invalid_argument("td: missing solution line");
  for (char s : seen_bag)
    if (!s) throw std::invalid_argument("td: missing bag line");
  return td;
}

inline TreeDecomposition parse_td(const std::string& text) {
  std::istringstream in(text);
  return parse_td(in);
}

inline std::string emit_td(const TreeDecomposition& td, int n) {
  std::ostringstream out;
  size_t maxbag = 0;
  for (const auto& b : td.bags) maxbag = std::max(maxbag, b.size());
  out << "s td " << td.bags.size() << " " << maxbag << " " << n << "\n";
  for (size_t i = 0; i < td.bags.size(); ++i) {
    out << "b " << i + 1;
    for (int v : td.bags[i]) out << " " << v + 1;
    out << "\n";
  }
  for (auto [a, b] : td.tree_edges) out << a + 1 << " " << b + 1 << "\n";
  return out.str();
}

// JSON graph: {"n": 4, "edges": [[0,1], ...]} with 0-based ids.
inline nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.n;
  j["edges"] = nlohmann::json::array();
  for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
  return j;
}

inline Graph graph_from_json(const nlohmann::json& j) {
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw std::invalid_argument("json graph: missing vertex count");
  Graph g(j["n"].get<int>());
  for (const auto& e : j.value("edges", nlohmann::json::array())) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("json graph: bad edge");
    int u = e[0].get<int>(), v = e[1].get<int>();
    if (!g.valid_vertex(u) || !g.valid_vertex(v) || u == v)
      throw std::invalid_argument("json graph: edge out of range");
    g.add_edge(u, v);
  }
  return g;
}

// Custom family file: {"name": "...", "members": [<json graph>, ...]}.
inline Family family_from_json(const nlohmann::json& j) {
  Family f;
  f.name = j.value("name", "custom");
  if (!j.contains("members") || !j["members"].is_array())
    throw std::invalid_argument("json family: missing members array");
  for (const auto& m : j["members"]) f.members.push_back(graph_from_json(m));
  validate_family(f);
  return f;
}

inline nlohmann::json family_to_json(const Family& f) {
  nlohmann::json j;
  j["name"] = f.name;
  j["members"] = nlohmann::json::array();
  for (const auto& m : f.members) j["members"].push_back(graph_to_json(m));
  return j;
}

// Sidecar registry for generated hardness instances.
inline nlohmann::json registry_to_json(const HardnessInstance& inst,
                                       const std::string& completion = "none") {
  nlohmann::json j;
  j["schema"] = 1;
  j["budget"] = inst.budget;
  j["completion"] = completion;
  j["meta"] = inst.meta;
  j["gadgets"] = nlohmann::json::object();
  for (const auto& [name, verts] : inst.registry) j["gadgets"][name] = verts;
  return j;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << content;
}

}  // namespace fdelete
