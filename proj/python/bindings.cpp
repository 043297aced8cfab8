#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "homflow/amalgam.hpp"
#include "homflow/flows.hpp"
#include "homflow/io.hpp"
#include "homflow/limit.hpp"
#include "homflow/ramsey.hpp"

namespace py = pybind11;
using namespace homflow;

PYBIND11_MODULE(_homflow, m) {
  m.doc() = "finite-scale checks for amalgamation classes, Ramsey properties, "
            "order flows and the chain-gluing construction";

  py::class_<FinStructure>(m, "FinStructure")
      .def_readonly("size", &FinStructure::size)
      .def_property_readonly("linear_order",
                             [](const FinStructure& a) { return a.linear_order; })
      .def("to_json", &structure_to_string)
      .def("validate", &FinStructure::validate)
      .def("__eq__", [](const FinStructure& a, const FinStructure& b) { return a == b; })
      .def("__repr__", [](const FinStructure& a) {
        return "<FinStructure size=" + std::to_string(a.size) + ">";
      });

  m.def("from_json", &structure_from_string, py::arg("text"));
  m.def("graph", [](int n, const std::vector<std::pair<int, int>>& edges) {
    return FinStructure::graph(n, edges);
  });
  m.def("complete_graph", &FinStructure::complete_graph);
  m.def("path", &FinStructure::path);
  m.def("cycle", &FinStructure::cycle);
  m.def("poset", [](int n, const std::vector<std::pair<int, int>>& less) {
    return FinStructure::poset(n, less);
  });
  m.def("chain_poset", &FinStructure::chain_poset);
  m.def("antichain_poset", &FinStructure::antichain_poset);
  m.def("with_linear_order", &with_linear_order);
  m.def("drop_linear_order", &drop_linear_order);

  py::class_<ClassSpec>(m, "ClassSpec")
      .def_readonly("ordered", &ClassSpec::ordered)
      .def("name", &ClassSpec::name)
      .def("__repr__", [](const ClassSpec& k) { return "<ClassSpec " + k.name() + ">"; });
  m.def("graphs", &ClassSpec::graphs, py::arg("ordered") = false);
  m.def("kn_free", &ClassSpec::kn_free, py::arg("n"), py::arg("ordered") = false);
  m.def("posets", &ClassSpec::posets, py::arg("ordered") = false);
  m.def("class_from_flag", &class_from_flag, py::arg("flag"), py::arg("ordered") = false);

  m.def("contains", &contains);
  m.def("enumerate_members", &enumerate_members);
  m.def("admissible_orders", &admissible_orders);
  m.def("check_hereditary",
        [](const ClassSpec& k, int bound) { return check_hereditary(k, bound).ok; });
  m.def("check_jep", [](const ClassSpec& k, int bound) { return check_jep(k, bound).ok; });
  m.def("check_amalgamation",
        [](const ClassSpec& k, int bound) { return check_amalgamation(k, bound).ok; });
  m.def("check_reasonable",
        [](const ClassSpec& k, int bound) { return check_reasonable(k, bound).ok; });

  m.def("embeds", &embeds);
  m.def("enumerate_embedding_maps", &enumerate_embedding_maps);
  m.def("are_isomorphic", [](const FinStructure& a, const FinStructure& b) {
    auto e = are_isomorphic(a, b);
    return e ? std::optional<std::vector<int>>(e->map) : std::nullopt;
  });
  m.def("automorphisms", &automorphisms);
  m.def("induced_substructure", &induced_substructure);

  m.def(
      "amalgamate",
      [](const FinStructure& a, const FinStructure& b, const FinStructure& c,
         const std::vector<int>& i, const std::vector<int>& j, const ClassSpec& k, bool ordered) {
        Embedding ei{a, b, i}, ej{a, c, j};
        AmalgamResult r =
            ordered ? amalgamate_ordered(a, b, c, ei, ej, k) : amalgamate(a, b, c, ei, ej, k);
        return py::make_tuple(r.amalgam, r.into_b.map, r.into_c.map);
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("i"), py::arg("j"), py::arg("k"),
      py::arg("ordered") = false);

  m.def(
      "arrows",
      [](const FinStructure& c, const FinStructure& b, const FinStructure& a, int k,
         bool exhaustive) {
        ArrowResult r = arrows({c, b, a, k}, exhaustive);
        std::optional<py::tuple> bad;
        if (r.bad) bad = py::make_tuple(r.bad->copies, r.bad->colors);
        return py::make_tuple(r.holds, bad);
      },
      py::arg("c"), py::arg("b"), py::arg("a"), py::arg("k") = 2, py::arg("exhaustive") = false);
  m.def("find_ramsey_witness", &find_ramsey_witness, py::arg("a"), py::arg("b"), py::arg("k"),
        py::arg("cls"), py::arg("size_bound"));
  m.def("check_ordering_property", &check_ordering_property, py::arg("b"), py::arg("cls"),
        py::arg("size_bound"));
  m.def("check_order_rigidity", &check_order_rigidity);

  py::class_<FiniteFlow>(m, "FiniteFlow")
      .def_readonly("points", &FiniteFlow::points)
      .def_readonly("group", &FiniteFlow::group);
  m.def("make_flow", &make_flow, py::arg("base"), py::arg("cls"), py::arg("max_size") = 8);
  m.def("act", &act);
  m.def("orbit_closure", &orbit_closure);
  m.def("is_minimal", &is_minimal);
  m.def("check_torder_equivalence", [](const FinStructure& a, int bound) {
    TorderReport r = check_torder_equivalence(a, bound);
    py::dict d;
    d["homogeneous"] = r.homogeneous;
    d["pairs"] = r.pairs;
    d["forward_ok"] = r.forward_ok;
    d["agreement"] = r.agreement;
    return d;
  });

  m.def(
      "build_limit",
      [](const FinStructure& seed, const ClassSpec& k, int budget, int window) {
        ConstructionState st = run(seed, k, budget, window);
        AuditReport rep = audit_state(st);
        py::dict d;
        std::vector<int> sizes;
        for (const auto& s : st.stages) sizes.push_back(s.size);
        d["stages"] = st.stages;
        d["stage_sizes"] = sizes;
        d["steps"] = st.steps_done;
        d["exhausted"] = st.exhausted;
        d["audit_ok"] = rep.ok;
        d["audit_issues"] = rep.issues;
        return d;
      },
      py::arg("seed"), py::arg("cls"), py::arg("budget"), py::arg("window") = 1);
  m.def("check_extension_property", [](const FinStructure& a, const ClassSpec& k, int bound) {
    EpReport r = check_extension_property(a, k, bound);
    return py::make_tuple(r.pass, r.fail);
  });
}
