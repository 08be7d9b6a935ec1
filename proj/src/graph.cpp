#include "sharedp/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

namespace sharedp {

namespace {

// Parses "u v" with optional surrounding whitespace. Returns false for
// comment/blank lines, throws LoadError otherwise.
bool parse_pair_line(const std::string& line, std::size_t lineno, const std::string& origin,
                     std::uint64_t& a, std::uint64_t& b) {
    std::size_t i = 0;
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i == line.size() || line[i] == '#') return false;

    auto fail = [&](const std::string& what) -> void {
        throw LoadError(origin + ":" + std::to_string(lineno) + ": " + what + ": '" + line + "'");
    };

    std::uint64_t vals[2];
    for (int k = 0; k < 2; ++k) {
        if (i < line.size() && line[i] == '-') fail("negative id");
        const char* first = line.data() + i;
        const char* last = line.data() + line.size();
        auto [ptr, ec] = std::from_chars(first, last, vals[k]);
        if (ec != std::errc{} || ptr == first) fail("malformed line");
        i = static_cast<std::size_t>(ptr - line.data());
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (k == 0 && i == line.size()) fail("malformed line");
    }
    if (i != line.size()) fail("malformed line");
    a = vals[0];
    b = vals[1];
    return true;
}

}  // namespace

Graph Graph::from_edges(std::uint32_t n, std::vector<std::pair<VertexId, VertexId>> edges) {
    std::erase_if(edges, [](const auto& e) { return e.first == e.second; });
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    Graph g;
    g.n_ = n;
    g.m_ = edges.size();
    g.out_.assign(n, {});
    g.in_.assign(n, {});
    for (const auto& [u, v] : edges) g.out_[u].push_back(v);
    for (const auto& [u, v] : edges) g.in_[v].push_back(u);
    for (auto& nb : g.in_) std::sort(nb.begin(), nb.end());
    return g;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    const auto& nb = out_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

void Graph::save_edges(std::ostream& os) const {
    for (VertexId u = 0; u < n_; ++u)
        for (VertexId v : out_[u]) os << u << ' ' << v << '\n';
}

Graph parse_graph(std::istream& is, bool undirected, const std::string& origin) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::uint64_t max_id = 0;
    bool saw_vertex = false;

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        std::uint64_t a, b;
        if (!parse_pair_line(line, lineno, origin, a, b)) continue;
        if (a > 0xFFFFFFFFull || b > 0xFFFFFFFFull)
            throw LoadError(origin + ":" + std::to_string(lineno) + ": vertex id too large");
        saw_vertex = true;
        max_id = std::max({max_id, a, b});
        edges.emplace_back(static_cast<VertexId>(a), static_cast<VertexId>(b));
        if (undirected) edges.emplace_back(static_cast<VertexId>(b), static_cast<VertexId>(a));
    }

    std::uint32_t n = saw_vertex ? static_cast<std::uint32_t>(max_id + 1) : 0;
    return Graph::from_edges(n, std::move(edges));
}

Graph load_graph(const std::string& path, bool undirected) {
    std::ifstream f(path);
    if (!f) throw LoadError("cannot open graph file: " + path);
    return parse_graph(f, undirected, path);
}

}  // namespace sharedp
