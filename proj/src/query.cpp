#include "sharedp/query.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

namespace sharedp {

namespace {

void validate_pair(VertexId s, VertexId t, const Graph& g, const std::string& where) {
    if (s == t) throw LoadError(where + ": query source equals target (" + std::to_string(s) + ")");
    if (s >= g.vertex_count() || t >= g.vertex_count())
        throw LoadError(where + ": vertex id out of range for graph with " +
                        std::to_string(g.vertex_count()) + " vertices");
}

}  // namespace

Batch make_batch(const std::vector<std::pair<VertexId, VertexId>>& pairs, std::uint32_t k,
                 const Graph& g) {
    if (k < 1) throw UsageError("k must be >= 1");
    Batch b;
    b.k = k;
    b.queries.reserve(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        auto [s, t] = pairs[i];
        validate_pair(s, t, g, "query " + std::to_string(i));
        b.queries.push_back({static_cast<std::uint32_t>(i), s, t});
    }
    return b;
}

Batch parse_queries(std::istream& is, const Graph& g, std::uint32_t k, const std::string& origin) {
    if (k < 1) throw UsageError("k must be >= 1");
    Batch b;
    b.k = k;

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        std::size_t i = 0;
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i == line.size() || line[i] == '#') continue;

        std::istringstream ss(line);
        long long s = -1, t = -1;
        std::string where = origin + ":" + std::to_string(lineno);
        if (!(ss >> s >> t) || s < 0 || t < 0) throw LoadError(where + ": malformed query line: '" + line + "'");
        std::string rest;
        if (ss >> rest) throw LoadError(where + ": malformed query line: '" + line + "'");
        validate_pair(static_cast<VertexId>(s), static_cast<VertexId>(t), g, where);
        b.queries.push_back({static_cast<std::uint32_t>(b.queries.size()),
                             static_cast<VertexId>(s), static_cast<VertexId>(t)});
    }
    return b;
}

Batch load_queries(const std::string& path, const Graph& g, std::uint32_t k) {
    std::ifstream f(path);
    if (!f) throw LoadError("cannot open query file: " + path);
    return parse_queries(f, g, k, path);
}

void save_queries(std::ostream& os, const Batch& batch) {
    for (const Query& q : batch.queries) os << q.s << ' ' << q.t << '\n';
}

}  // namespace sharedp
