// Python bindings for the core operations: graphs, decompositions, solvers,
// verification, and the hardness-instance generators.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fdelete/hardness.hpp"
#include "fdelete/io.hpp"
#include "fdelete/solve.hpp"

namespace py = pybind11;
using namespace fdelete;

PYBIND11_MODULE(_core, m) {
  m.doc() = "minimum vertex deletion against forbidden (topological) minors";

  py::register_exception<CapabilityError>(m, "CapabilityError", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n") = 0)
      .def_readonly("n", &Graph::n)
      .def("add_edge", &Graph::add_edge)
      .def("has_edge", &Graph::has_edge)
      .def("edge_count", &Graph::edge_count)
      .def("edges", &Graph::edges)
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.n) +
               ", m=" + std::to_string(g.edge_count()) + ")";
      });
  m.def("path_graph", &path_graph);
  m.def("cycle_graph", &cycle_graph);
  m.def("complete_graph", &complete_graph);

  py::enum_<Mode>(m, "Mode").value("tm", Mode::tm).value("minor", Mode::minor);

  py::class_<Family>(m, "Family")
      .def(py::init([](std::string name, std::vector<Graph> members) {
             Family f{std::move(name), std::move(members)};
             validate_family(f);
             return f;
           }),
           py::arg("name"), py::arg("members"))
      .def_readwrite("name", &Family::name)
      .def_readwrite("members", &Family::members);
  m.def("named_family", &named_family);

  py::class_<TreeDecomposition>(m, "TreeDecomposition")
      .def(py::init<>())
      .def_readwrite("bags", &TreeDecomposition::bags)
      .def_readwrite("tree_edges", &TreeDecomposition::tree_edges)
      .def("width", [](const TreeDecomposition& td) {
        size_t mx = 1;
        for (const auto& b : td.bags) mx = std::max(mx, b.size());
        return (int)mx - 1;
      });
  m.def("heuristic_td", &heuristic_td);

  py::class_<Solution>(m, "Solution")
      .def_readonly("optimum", &Solution::optimum)
      .def_readonly("witness", &Solution::witness);
  py::class_<SolveReport>(m, "SolveReport")
      .def_readonly("solution", &SolveReport::solution)
      .def_readonly("engine", &SolveReport::engine);

  m.def(
      "solve",
      [](const Graph& g, const Family& f, Mode mode, const std::string& engine,
         const std::optional<TreeDecomposition>& td) {
        return solve(g, f, mode, engine_from_string(engine), td);
      },
      py::arg("graph"), py::arg("family"), py::arg("mode") = Mode::tm,
      py::arg("engine") = "auto", py::arg("td") = std::nullopt);
  m.def("verify_solution", &verify_solution, py::arg("graph"), py::arg("family"),
        py::arg("mode"), py::arg("solution"));
  m.def(
      "min_deletion_bruteforce",
      [](const Graph& g, const Family& f, Mode mode, int max_n) {
        return min_deletion_bruteforce(g, f, mode, OracleOptions{max_n});
      },
      py::arg("graph"), py::arg("family"), py::arg("mode") = Mode::tm,
      py::arg("max_n") = 14);

  m.def("parse_gr", py::overload_cast<const std::string&>(&parse_gr));
  m.def("emit_gr", &emit_gr);
  m.def("parse_td", py::overload_cast<const std::string&>(&parse_td));
  m.def("emit_td", &emit_td);

  py::class_<HardnessInstance>(m, "HardnessInstance")
      .def_readonly("graph", &HardnessInstance::graph)
      .def_readonly("budget", &HardnessInstance::budget)
      .def_readonly("registry", &HardnessInstance::registry)
      .def_readonly("meta", &HardnessInstance::meta);
  m.def("choice_gadget", &choice_gadget, py::arg("family"), py::arg("s"));
  m.def("choice_gadget_solution", &choice_gadget_solution, py::arg("xs"), py::arg("z"),
        py::arg("i"));
  m.def("vc_reduction", &vc_reduction, py::arg("graph"), py::arg("family"));
  m.def("kclass_member", &kclass_member);

  py::class_<Completion> completion(m, "Completion");
  py::enum_<Completion::Kind>(completion, "Kind")
      .value("none", Completion::none)
      .value("paths", Completion::paths)
      .value("kclass", Completion::kclass);
  completion
      .def(py::init([](Completion::Kind kind, int h) {
             return Completion{kind, h};
           }),
           py::arg("kind") = Completion::none, py::arg("h") = 0)
      .def_readwrite("kind", &Completion::kind)
      .def_readwrite("h", &Completion::h);

  py::class_<PermcliqueInstance::ChoiceIds>(m, "ChoiceIds")
      .def_readonly("xs", &PermcliqueInstance::ChoiceIds::xs)
      .def_readonly("z", &PermcliqueInstance::ChoiceIds::z);
  py::class_<PermcliqueInstance>(m, "PermcliqueInstance")
      .def_readonly("inst", &PermcliqueInstance::inst)
      .def_readonly("k", &PermcliqueInstance::k)
      .def_readonly("pc_edges", &PermcliqueInstance::pc_edges)
      .def_readonly("c", &PermcliqueInstance::c)
      .def_readonly("r", &PermcliqueInstance::r)
      .def_readonly("t", &PermcliqueInstance::t)
      .def_readonly("col_choice", &PermcliqueInstance::col_choice)
      .def_readonly("d", &PermcliqueInstance::d);
  m.def("general_construction", &general_construction, py::arg("grid"), py::arg("k"),
        py::arg("family"), py::arg("completion"));
  m.def("sigma_solution", &sigma_solution, py::arg("instance"), py::arg("sigma"));
  m.def("random_permclique_grid", &random_permclique_grid, py::arg("k"),
        py::arg("extra_p"), py::arg("seed"));
  m.def("all_permutation_cliques", &all_permutation_cliques, py::arg("grid"), py::arg("k"));
  m.def("check_permutation_property", &check_permutation_property, py::arg("instance"),
        py::arg("solution"));
}
