#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "sharedp/common.hpp"
#include "sharedp/graph.hpp"
#include "sharedp/queryset.hpp"

namespace sharedp {

struct Query {
    std::uint32_t id = 0;
    VertexId s = 0;
    VertexId t = 0;
};

// A batch of kDP queries sharing one k. Ids are dense in [0, |Q|) and fix the
// QuerySet width for the whole execution. Duplicate (s, t) pairs are distinct
// queries.
struct Batch {
    std::vector<Query> queries;
    std::uint32_t k = 1;

    std::uint32_t width() const { return static_cast<std::uint32_t>(queries.size()); }

    QuerySet empty_set() const { return QuerySet(width()); }
    QuerySet full_set() const { return QuerySet::full(width()); }
};

Batch make_batch(const std::vector<std::pair<VertexId, VertexId>>& pairs, std::uint32_t k,
                 const Graph& g);

// Query text format: "s t" per line, '#' comments. Ids assigned in file
// order. s == t or an id outside the graph is a validation error naming the
// line.
Batch load_queries(const std::string& path, const Graph& g, std::uint32_t k);

Batch parse_queries(std::istream& is, const Graph& g, std::uint32_t k, const std::string& origin);

void save_queries(std::ostream& os, const Batch& batch);

}  // namespace sharedp
