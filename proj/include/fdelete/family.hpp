// Forbidden-pattern families and containment mode.
#pragma once

#include <string>
#include <vector>

#include "fdelete/graph.hpp"

namespace fdelete {

enum class Mode { tm, minor };

struct Family {
  std::string name;           // "p3", "p4", "c4", or "custom"
  std::vector<Graph> members;
};

inline Family family_p3() { return {"p3", {path_graph(3)}}; }
inline Family family_p4() { return {"p4", {path_graph(4)}}; }
inline Family family_c4() { return {"c4", {cycle_graph(4)}}; }

inline Family named_family(const std::string& name) {
  if (name == "p3") return family_p3();
  if (name == "p4") return family_p4();
  if (name == "c4") return family_c4();
  throw std::invalid_argument("unknown family: " + name);
}

inline void validate_family(const Family& f) {
  if (f.members.empty()) throw std::invalid_argument("family must be non-empty");
  for (const auto& h : f.members) {
    if (h.n == 0) throw std::invalid_argument("family members must be non-empty graphs");
    if (component_count(h) != 1)
      throw std::invalid_argument("family members must be connected");
  }
}

}  // namespace fdelete
