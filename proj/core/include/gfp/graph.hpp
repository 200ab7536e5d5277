#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace gfp {

/// Immutable simple undirected graph in compressed adjacency (CSR) form.
///
/// Nodes are compact ids 0..N-1. Neighbor lists are sorted ascending, carry
/// no self-loops and no duplicates, and are symmetric (j in adj(i) iff i in
/// adj(j)), so sum of degrees == 2L. The constructor verifies all of this;
/// once built, a Graph is safe for concurrent reads.
class Graph {
public:
    using NodeId = std::uint32_t;

    Graph() = default;

    /// offsets has size N+1; adjacency holds the concatenated neighbor lists.
    /// Throws std::invalid_argument on any invariant violation.
    Graph(std::vector<std::size_t> offsets, std::vector<NodeId> adjacency);

    std::size_t node_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t edge_count() const { return adjacency_.size() / 2; }

    std::uint32_t degree(NodeId i) const {
        return static_cast<std::uint32_t>(offsets_[i + 1] - offsets_[i]);
    }

    std::span<const NodeId> neighbors(NodeId i) const {
        return {adjacency_.data() + offsets_[i], adjacency_.data() + offsets_[i + 1]};
    }

    bool has_edge(NodeId a, NodeId b) const;

    /// Degree sequence k_0..k_{N-1} (derived from adjacency).
    std::vector<std::uint32_t> degree_sequence() const;

private:
    std::vector<std::size_t> offsets_;   // N+1
    std::vector<NodeId> adjacency_;      // 2L, per-node sorted ascending
};

using RawEdge = std::pair<std::int64_t, std::int64_t>;

/// Result of canonicalizing raw input into a Graph.
///
/// original_ids maps compact id -> source id (ascending, so compact order is
/// source-id order). Dropped self-loops and duplicate edges are counted, not
/// silently discarded.
struct BuildResult {
    Graph graph;
    std::vector<std::int64_t> original_ids;
    std::size_t self_loops_dropped = 0;
    std::size_t duplicate_edges_dropped = 0;
};

/// Build a canonical simple undirected graph from a raw edge list.
///
/// Input may contain duplicates, both orientations, and self-loops; all are
/// collapsed or dropped with counts. extra_nodes forces ids into the node set
/// even when no surviving edge touches them (they become isolated nodes).
/// A node mentioned only by a dropped self-loop is likewise retained.
/// Throws std::invalid_argument if the node set would be empty or an id is
/// negative.
BuildResult build_graph(const std::vector<RawEdge>& edges,
                        const std::vector<std::int64_t>& extra_nodes = {});

/// Subgraph induced by a set of nodes (compact ids of `parent`).
/// parent_ids maps the subgraph's compact ids back to the parent's.
struct InducedSubgraph {
    Graph graph;
    std::vector<Graph::NodeId> parent_ids;
};

InducedSubgraph induced_subgraph(const Graph& parent,
                                 std::span<const Graph::NodeId> nodes);

}  // namespace gfp
