#include "gfp/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace gfp {

Graph::Graph(std::vector<std::size_t> offsets, std::vector<NodeId> adjacency)
    : offsets_(std::move(offsets)), adjacency_(std::move(adjacency)) {
    if (offsets_.empty() || offsets_.front() != 0 || offsets_.back() != adjacency_.size())
        throw std::invalid_argument("Graph: malformed offsets");
    const std::size_t n = offsets_.size() - 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (offsets_[i] > offsets_[i + 1])
            throw std::invalid_argument("Graph: offsets not monotone");
        for (std::size_t p = offsets_[i]; p < offsets_[i + 1]; ++p) {
            const NodeId j = adjacency_[p];
            if (j >= n) throw std::invalid_argument("Graph: neighbor id out of range");
            if (j == i) throw std::invalid_argument("Graph: self-loop");
            if (p > offsets_[i] && adjacency_[p - 1] >= j)
                throw std::invalid_argument("Graph: neighbor list not sorted/unique");
        }
    }
    // symmetry: every (i, j) entry needs its (j, i) mirror
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t p = offsets_[i]; p < offsets_[i + 1]; ++p) {
            const NodeId j = adjacency_[p];
            const auto* lo = adjacency_.data() + offsets_[j];
            const auto* hi = adjacency_.data() + offsets_[j + 1];
            if (!std::binary_search(lo, hi, static_cast<NodeId>(i)))
                throw std::invalid_argument("Graph: adjacency not symmetric");
        }
    }
}

bool Graph::has_edge(NodeId a, NodeId b) const {
    const auto adj = neighbors(a);
    return std::binary_search(adj.begin(), adj.end(), b);
}

std::vector<std::uint32_t> Graph::degree_sequence() const {
    const std::size_t n = node_count();
    std::vector<std::uint32_t> degrees(n);
    for (std::size_t i = 0; i < n; ++i) degrees[i] = degree(static_cast<NodeId>(i));
    return degrees;
}

BuildResult build_graph(const std::vector<RawEdge>& edges,
                        const std::vector<std::int64_t>& extra_nodes) {
    // Node set: every id mentioned anywhere, including self-loop-only ids.
    std::vector<std::int64_t> ids;
    ids.reserve(edges.size() * 2 + extra_nodes.size());
    for (const auto& [u, v] : edges) {
        if (u < 0 || v < 0) throw std::invalid_argument("build_graph: negative node id");
        ids.push_back(u);
        ids.push_back(v);
    }
    for (const auto id : extra_nodes) {
        if (id < 0) throw std::invalid_argument("build_graph: negative node id");
        ids.push_back(id);
    }
    if (ids.empty()) throw std::invalid_argument("empty graph");

    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    const std::size_t n = ids.size();

    std::unordered_map<std::int64_t, Graph::NodeId> to_compact;
    to_compact.reserve(n * 2);
    for (std::size_t i = 0; i < n; ++i) to_compact.emplace(ids[i], static_cast<Graph::NodeId>(i));

    BuildResult result;
    result.original_ids = std::move(ids);

    std::vector<std::pair<Graph::NodeId, Graph::NodeId>> canon;
    canon.reserve(edges.size());
    for (const auto& [u, v] : edges) {
        if (u == v) {
            ++result.self_loops_dropped;
            continue;
        }
        auto a = to_compact.at(u);
        auto b = to_compact.at(v);
        if (a > b) std::swap(a, b);
        canon.emplace_back(a, b);
    }

    std::sort(canon.begin(), canon.end());
    const auto unique_end = std::unique(canon.begin(), canon.end());
    result.duplicate_edges_dropped = static_cast<std::size_t>(canon.end() - unique_end);
    canon.erase(unique_end, canon.end());

    std::vector<std::size_t> offsets(n + 1, 0);
    for (const auto& [a, b] : canon) {
        ++offsets[a + 1];
        ++offsets[b + 1];
    }
    for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];

    // One pass over the lex-sorted edges fills every neighbor list already
    // ascending: node x first receives smaller endpoints (ascending a), then
    // its own (x, b) run with b ascending.
    std::vector<Graph::NodeId> adjacency(canon.size() * 2);
    std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
    for (const auto& [a, b] : canon) {
        adjacency[cursor[a]++] = b;
        adjacency[cursor[b]++] = a;
    }

    result.graph = Graph(std::move(offsets), std::move(adjacency));
    return result;
}

InducedSubgraph induced_subgraph(const Graph& parent,
                                 std::span<const Graph::NodeId> nodes) {
    std::vector<Graph::NodeId> sorted(nodes.begin(), nodes.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.empty()) throw std::invalid_argument("induced_subgraph: empty node set");
    if (sorted.back() >= parent.node_count())
        throw std::invalid_argument("induced_subgraph: node id out of range");

    std::unordered_map<Graph::NodeId, Graph::NodeId> to_sub;
    to_sub.reserve(sorted.size() * 2);
    for (std::size_t i = 0; i < sorted.size(); ++i)
        to_sub.emplace(sorted[i], static_cast<Graph::NodeId>(i));

    std::vector<RawEdge> edges;
    std::vector<std::int64_t> all_nodes(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i) all_nodes[i] = static_cast<std::int64_t>(i);
    for (const auto u : sorted) {
        for (const auto v : parent.neighbors(u)) {
            if (v <= u) continue;
            const auto it = to_sub.find(v);
            if (it != to_sub.end())
                edges.emplace_back(to_sub.at(u), it->second);
        }
    }

    auto built = build_graph(edges, all_nodes);
    return InducedSubgraph{std::move(built.graph), std::move(sorted)};
}

}  // namespace gfp
