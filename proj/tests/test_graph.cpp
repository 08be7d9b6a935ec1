#include <doctest.h>

#include <random>
#include <set>
#include <sstream>

#include "sharedp/graph.hpp"
#include "support/test_graphs.hpp"

using namespace sharedp;

namespace {

Graph from_text(const std::string& text, bool undirected = false) {
    std::istringstream is(text);
    return parse_graph(is, undirected, "<mem>");
}

std::vector<VertexId> vec(std::span<const VertexId> s) { return {s.begin(), s.end()}; }

}  // namespace

TEST_CASE("load drops duplicate edges") {
    Graph g = from_text("0 1\n1 2\n0 1\n");
    CHECK(g.vertex_count() == 3);
    CHECK(vec(g.out_neighbors(0)) == std::vector<VertexId>{1});
    CHECK(vec(g.out_neighbors(1)) == std::vector<VertexId>{2});
    CHECK(vec(g.out_neighbors(2)).empty());
    CHECK(g.edge_count() == 2);
}

TEST_CASE("load drops self-loops") {
    Graph g = from_text("0 0\n0 1\n");
    CHECK(vec(g.out_neighbors(0)) == std::vector<VertexId>{1});
}

TEST_CASE("undirected load inserts both directions") {
    Graph g = from_text("0 1\n", true);
    CHECK(vec(g.out_neighbors(0)) == std::vector<VertexId>{1});
    CHECK(vec(g.out_neighbors(1)) == std::vector<VertexId>{0});
}

TEST_CASE("comments and blank lines are skipped; gaps become isolated vertices") {
    Graph g = from_text("# header\n\n0 5\n");
    CHECK(g.vertex_count() == 6);
    CHECK(g.edge_count() == 1);
    CHECK(g.out_degree(3) == 0);
}

TEST_CASE("parse failures name the line") {
    CHECK_THROWS_WITH_AS(from_text("0 1\nx y\n"), doctest::Contains(":2:"), LoadError);
    CHECK_THROWS_WITH_AS(from_text("0 -1\n"), doctest::Contains(":1:"), LoadError);
    CHECK_THROWS_WITH_AS(from_text("0\n"), doctest::Contains("malformed"), LoadError);
    CHECK_THROWS_WITH_AS(from_text("0 1 2\n"), doctest::Contains("malformed"), LoadError);
    CHECK_THROWS_AS(load_graph("/nonexistent/file"), LoadError);
}

TEST_CASE("out_neighbors examples") {
    Graph g = testing::diamond();
    CHECK(vec(g.out_neighbors(0)) == std::vector<VertexId>{1, 2});
    CHECK(vec(g.out_neighbors(3)).empty());
    CHECK(vec(g.in_neighbors(3)) == std::vector<VertexId>{1, 2});
}

TEST_CASE("split-space encode and decode round-trip") {
    const std::uint32_t n = 37;
    for (VertexId v = 0; v < n; ++v) {
        CHECK(proj(v, n) == v);
        CHECK(proj(in_copy(v, n), n) == v);
        CHECK(!is_in_copy(v, n));
        CHECK(is_in_copy(in_copy(v, n), n));
    }
}

TEST_CASE("serialize round-trips the edge multiset") {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 20; ++round) {
        Graph g = testing::erdos_renyi(2 + rng() % 20, 0.2, rng);
        std::ostringstream os;
        g.save_edges(os);
        std::set<std::pair<VertexId, VertexId>> original;
        for (VertexId u = 0; u < g.vertex_count(); ++u)
            for (VertexId v : g.out_neighbors(u)) original.insert({u, v});

        std::istringstream is(os.str());
        Graph h = parse_graph(is, false, "<roundtrip>");
        std::set<std::pair<VertexId, VertexId>> reloaded;
        for (VertexId u = 0; u < h.vertex_count(); ++u)
            for (VertexId v : h.out_neighbors(u)) reloaded.insert({u, v});
        CHECK(original == reloaded);
        CHECK(g.edge_count() == h.edge_count());
    }
}
