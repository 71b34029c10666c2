#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "paracount/bp.hpp"
#include "paracount/check.hpp"
#include "paracount/cli.hpp"
#include "paracount/cnf.hpp"
#include "paracount/error.hpp"
#include "paracount/fo.hpp"
#include "paracount/hom.hpp"
#include "paracount/io.hpp"
#include "paracount/pdet.hpp"
#include "paracount/walk_count.hpp"

namespace py = pybind11;
using namespace paracount;

namespace {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

py::int_ to_py(const BigInt& value) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(value.str().c_str(), nullptr, 10));
}

DirectedGraph make_graph(std::size_t n, const EdgeList& edges) {
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (const auto& [u, v] : edges) out.push_back({u, v});
  return DirectedGraph::create(n, std::move(out));
}

std::vector<bool> to_bits(const std::vector<int>& bits) { return {bits.begin(), bits.end()}; }

}  // namespace

PYBIND11_MODULE(_paracount, m) {
  m.doc() = "Exact counting for walks, CNF-constrained walks, formulas, homomorphisms, "
            "parameterised determinants and branching programs";

  static py::exception<Error> error(m, "Error");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error)(e.what());
      exc.attr("name") = e.name();
      PyErr_SetObject(error.ptr(), exc.ptr());
    }
  });

  m.def("count_reach", [](std::size_t n, const EdgeList& edges, Vertex s, Vertex t, std::uint64_t k) {
    return to_py(count_reach(make_graph(n, edges), s, t, k));
  }, py::arg("n"), py::arg("edges"), py::arg("s"), py::arg("t"), py::arg("k"));

  m.def("count_log_reach", [](std::size_t n, const EdgeList& edges, Vertex s, Vertex t, std::uint64_t a,
                              std::uint64_t k, std::uint64_t b) {
    return to_py(count_log_reach_b(make_graph(n, edges), s, t, a, k, b));
  }, py::arg("n"), py::arg("edges"), py::arg("s"), py::arg("t"), py::arg("a"), py::arg("k"),
     py::arg("b") = 2);

  m.def("count_log_walk", [](std::size_t n, const EdgeList& edges, std::uint64_t a, std::uint64_t k,
                             std::uint64_t b) {
    return to_py(count_log_walk_b(make_graph(n, edges), a, k, b));
  }, py::arg("n"), py::arg("edges"), py::arg("a"), py::arg("k"), py::arg("b") = 2);

  m.def("count_reach_colour", [](std::size_t n, const EdgeList& edges, std::vector<std::uint32_t> colours,
                                 Vertex s, Vertex t, std::uint64_t k) {
    return to_py(count_reach_colour(VertexColouring::create(make_graph(n, edges), std::move(colours)), s, t, k));
  }, py::arg("n"), py::arg("edges"), py::arg("colours"), py::arg("s"), py::arg("t"), py::arg("k"));

  m.def("count_log_reach2_cnf", [](std::size_t n, const EdgeList& edges, Vertex s, Vertex t,
                                   const std::vector<std::vector<std::int64_t>>& clauses, std::uint64_t a,
                                   std::uint64_t k) {
    const DirectedGraph g = make_graph(n, edges);
    return to_py(count_log_reach2_cnf(g, s, t, EdgeCNF::from_signed(g, clauses), a, k));
  }, py::arg("n"), py::arg("edges"), py::arg("s"), py::arg("t"), py::arg("clauses"), py::arg("a"),
     py::arg("k"));

  m.def("count_cycle_cover2_cnf", [](std::size_t n, const EdgeList& edges,
                                     const std::vector<std::vector<std::int64_t>>& clauses, std::uint64_t a,
                                     std::uint64_t k) {
    const DirectedGraph g = make_graph(n, edges);
    return to_py(count_cycle_cover2_cnf(g, EdgeCNF::from_signed(g, clauses), a, k));
  }, py::arg("n"), py::arg("edges"), py::arg("clauses"), py::arg("a"), py::arg("k"));

  m.def("pdet", [](const std::vector<std::vector<int>>& rows, std::uint64_t k, const std::string& method,
                   std::uint64_t limit) {
    const ZeroOneMatrix a = ZeroOneMatrix::create(rows);
    if (method == "direct") return to_py(pdet_direct(a, k));
    if (method == "clow") return to_py(pdet_clow(a, k, limit));
    fail("invalid-argument", "method must be direct or clow, got " + method);
  }, py::arg("rows"), py::arg("k"), py::arg("method") = "direct", py::arg("limit") = kDefaultLimit);

  m.def("det_cross_check", [](const std::vector<std::vector<int>>& rows) {
    return to_py(det_cross_check(ZeroOneMatrix::create(rows)));
  }, py::arg("rows"));

  m.def("count_mc", [](const std::string& formula, const std::string& structure, std::uint64_t k,
                       const std::string& method, std::uint64_t r, std::uint64_t arity) {
    const QFFormula phi = parse_formula(formula);
    const RelationalStructure a = parse_structure(structure);
    if (method == "brute") return to_py(count_mc(phi, a, k));
    if (method == "local") return to_py(count_mc_local(phi, a, k, r, arity));
    fail("invalid-argument", "method must be brute or local, got " + method);
  }, py::arg("formula"), py::arg("structure"), py::arg("k"), py::arg("method") = "brute",
     py::arg("r") = 1, py::arg("arity") = 2);

  m.def("formula_size", [](const std::string& formula) { return formula_size(parse_formula(formula)); },
        py::arg("formula"));

  m.def("count_hom_path_star", [](std::size_t n, const std::string& target, std::uint64_t k) {
    return to_py(count_hom_path_star(n, parse_structure(target), k));
  }, py::arg("n"), py::arg("target"), py::arg("k"));

  m.def("bp_count", [](const std::string& program, const std::vector<int>& x, const std::string& method) {
    const BranchingProgram p = parse_bp(program);
    if (method == "acc") return to_py(bp_count_acc(p, to_bits(x)));
    if (method == "fast") return to_py(bp_count_fast(p, to_bits(x)));
    fail("invalid-argument", "method must be acc or fast, got " + method);
  }, py::arg("program"), py::arg("x"), py::arg("method") = "acc");

  m.def("bp_stagger", [](const std::string& program) { return serialize_bp(stagger(parse_bp(program))); },
        py::arg("program"));

  m.def("selftest", [](std::uint64_t seed, const std::string& scale) {
    if (scale != "smoke" && scale != "full") fail("invalid-argument", "scale must be smoke or full");
    py::list out;
    for (const check::PropertyResult& r :
         check::run_suites(seed, scale == "full" ? check::Scale::Full : check::Scale::Smoke)) {
      py::dict d;
      d["criterion"] = r.criterion;
      d["name"] = r.name;
      d["passed"] = r.passed;
      d["cases"] = r.cases;
      d["detail"] = r.detail;
      out.append(d);
    }
    return out;
  }, py::arg("seed") = 7, py::arg("scale") = "smoke");

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"));
}
