#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sharedp/engine.hpp"
#include "sharedp/generator.hpp"
#include "sharedp/graph.hpp"
#include "sharedp/oracle.hpp"
#include "sharedp/query.hpp"
#include "sharedp/split_graph.hpp"

namespace py = pybind11;
using namespace sharedp;

PYBIND11_MODULE(_sharedp, m) {
    m.doc() = "batch k-vertex-disjoint-paths engine";

    py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
    py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);

    py::class_<Graph>(m, "Graph")
        .def_property_readonly("n", &Graph::vertex_count)
        .def_property_readonly("m", &Graph::edge_count)
        .def("out_neighbors",
             [](const Graph& g, VertexId v) {
                 auto nb = g.out_neighbors(v);
                 return std::vector<VertexId>(nb.begin(), nb.end());
             })
        .def("in_neighbors",
             [](const Graph& g, VertexId v) {
                 auto nb = g.in_neighbors(v);
                 return std::vector<VertexId>(nb.begin(), nb.end());
             })
        .def("has_edge", &Graph::has_edge)
        .def("__repr__", [](const Graph& g) {
            return "<Graph n=" + std::to_string(g.vertex_count()) + " m=" +
                   std::to_string(g.edge_count()) + ">";
        });

    py::class_<Query>(m, "Query")
        .def_readonly("id", &Query::id)
        .def_readonly("s", &Query::s)
        .def_readonly("t", &Query::t);

    py::class_<Batch>(m, "Batch")
        .def_readonly("queries", &Batch::queries)
        .def_readonly("k", &Batch::k)
        .def("__len__", [](const Batch& b) { return b.queries.size(); });

    py::class_<QueryResult>(m, "QueryResult")
        .def_readonly("id", &QueryResult::id)
        .def_readonly("s", &QueryResult::s)
        .def_readonly("t", &QueryResult::t)
        .def_readonly("found", &QueryResult::found)
        .def_readonly("paths", &QueryResult::paths)
        .def_readonly("elapsed_seconds", &QueryResult::elapsed_seconds)
        .def_readonly("timed_out", &QueryResult::timed_out)
        .def("__repr__", [](const QueryResult& r) {
            return "<QueryResult id=" + std::to_string(r.id) + " found=" + std::to_string(r.found) +
                   ">";
        });

    py::class_<VerifyReport>(m, "VerifyReport")
        .def_readonly("ok", &VerifyReport::ok)
        .def_readonly("violations", &VerifyReport::violations);

    m.def("load_graph", &load_graph, py::arg("path"), py::arg("undirected") = false);
    m.def(
        "graph_from_edges",
        [](std::uint32_t n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
            return Graph::from_edges(n, edges);
        },
        py::arg("n"), py::arg("edges"));
    m.def("load_queries", &load_queries, py::arg("path"), py::arg("graph"), py::arg("k"));
    m.def("make_batch", &make_batch, py::arg("pairs"), py::arg("k"), py::arg("graph"));

    m.def(
        "sharedp_batch",
        [](const Graph& g, const Batch& b) { return sharedp_batch(g, b); },
        py::arg("graph"), py::arg("batch"), py::call_guard<py::gil_scoped_release>());
    m.def(
        "maxflow_single",
        [](const Graph& g, const Query& q, std::uint32_t k) { return maxflow_single(g, q, k); },
        py::arg("graph"), py::arg("query"), py::arg("k"),
        py::call_guard<py::gil_scoped_release>());

    m.def("verify_disjoint", &verify_disjoint, py::arg("graph"), py::arg("s"), py::arg("t"),
          py::arg("paths"));
    m.def("max_disjoint_count", &max_disjoint_count, py::arg("graph"), py::arg("s"), py::arg("t"),
          py::arg("cap"));

    m.def(
        "generate_queries",
        [](const Graph& g, std::uint32_t k, std::uint32_t count, std::uint64_t seed) {
            GeneratedBatch gen = generate_queries(g, k, count, seed);
            py::dict meta;
            meta["requested_k"] = gen.requested_k;
            meta["final_k"] = gen.final_k;
            meta["attempts"] = gen.attempts;
            meta["reductions"] = gen.reductions;
            return py::make_tuple(gen.batch, meta);
        },
        py::arg("graph"), py::arg("k"), py::arg("count"), py::arg("seed") = 0);
}
