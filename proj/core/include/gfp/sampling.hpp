#pragma once

#include <array>
#include <cstdint>
#include <ostream>
#include <vector>

#include "gfp/attributes.hpp"
#include "gfp/graph.hpp"

namespace gfp {

/// Parallel node lists of the three sampling strategies. For every i,
/// friends[i] and biased[i] are neighbors of control[i], and biased[i]
/// attains the maximum x over control[i]'s neighborhood.
struct SampleGroups {
    std::vector<Graph::NodeId> control;
    std::vector<Graph::NodeId> friends;
    std::vector<Graph::NodeId> biased;
    std::uint64_t seed = 0;
    std::size_t sample_size = 0;
};

/// Draws the control group uniformly without replacement from nodes with
/// k >= 1, one uniform neighbor per control node (friend group), and the
/// highest-x neighbor per control node with ties broken uniformly (biased
/// group). Fully reproducible from the seed. Throws std::invalid_argument
/// when fewer than `size` non-isolated nodes exist and std::runtime_error
/// when a biased pick needs a missing attribute.
SampleGroups sample_groups(const Graph& graph, const AttributeTable& x,
                           std::size_t size, std::uint64_t seed);

/// Distribution summary of one group: moments plus a survival function
/// (CCDF) table over the unique x values, suitable for log-log plots.
struct GroupSummary {
    std::string group;
    std::size_t n = 0;
    std::size_t n_missing = 0;
    double mean = 0.0;
    double median = 0.0;
    double max = 0.0;
    std::vector<std::pair<double, double>> ccdf;  // (x, P(X >= x))
};

std::array<GroupSummary, 3> group_summary(const SampleGroups& groups,
                                          const AttributeTable& x);

/// Snowball (breadth-first) subgraph sample: whole BFS layers are admitted
/// while they fit, then a uniform random subset of the first non-fitting
/// layer tops the sample up to exactly max_nodes. exhausted is set when the
/// start node's component ran out first (the result is then the whole
/// component).
struct SnowballResult {
    std::vector<Graph::NodeId> nodes;  // ascending
    bool exhausted = false;
};

SnowballResult snowball_sample(const Graph& graph, Graph::NodeId start,
                               std::size_t max_nodes, std::uint64_t seed);

/// groups.csv rows: index,control_id,friend_id,biased_id,x_control,x_friend,
/// x_biased (ids are source ids via original_ids; missing x written as NA).
void write_groups_csv(std::ostream& out, const SampleGroups& groups,
                      const AttributeTable& x,
                      const std::vector<std::int64_t>& original_ids);

void write_summary_csv(std::ostream& out, std::span<const GroupSummary> summaries);

void write_ccdf_csv(std::ostream& out, const GroupSummary& summary);

}  // namespace gfp
