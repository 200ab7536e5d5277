#pragma once

#include <cstdint>
#include <vector>

#include "gfp/attributes.hpp"
#include "gfp/graph.hpp"
#include "gfp/random.hpp"

namespace gfp::test {

inline Graph make_graph(const std::vector<RawEdge>& edges,
                        const std::vector<std::int64_t>& extra = {}) {
    return build_graph(edges, extra).graph;
}

// hub 0, leaves 1..3
inline Graph star4() { return make_graph({{0, 1}, {0, 2}, {0, 3}}); }

// 0 - 1 - 2
inline Graph path3() { return make_graph({{0, 1}, {1, 2}}); }

inline Graph ring(std::size_t n) {
    std::vector<RawEdge> edges;
    for (std::size_t i = 0; i < n; ++i)
        edges.emplace_back(static_cast<std::int64_t>(i), static_cast<std::int64_t>((i + 1) % n));
    return make_graph(edges);
}

inline AttributeTable uniform_noise(const Graph& graph, std::uint64_t seed,
                                    const char* name = "noise") {
    Rng rng(seed);
    std::vector<double> values(graph.node_count());
    for (auto& v : values) v = rng.unit();
    return AttributeTable(name, std::move(values));
}

inline bool same_graph(const Graph& a, const Graph& b) {
    if (a.node_count() != b.node_count() || a.edge_count() != b.edge_count()) return false;
    for (std::size_t i = 0; i < a.node_count(); ++i) {
        const auto na = a.neighbors(static_cast<Graph::NodeId>(i));
        const auto nb = b.neighbors(static_cast<Graph::NodeId>(i));
        if (na.size() != nb.size()) return false;
        for (std::size_t p = 0; p < na.size(); ++p)
            if (na[p] != nb[p]) return false;
    }
    return true;
}

}  // namespace gfp::test
