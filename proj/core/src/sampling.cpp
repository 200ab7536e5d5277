#include "gfp/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "detail/format.hpp"
#include "gfp/random.hpp"

namespace gfp {

namespace {

// argmax of x over the neighborhood, ties broken uniformly. Two scans keep
// it allocation-free: find the max and tie count, then take the drawn tie.
Graph::NodeId best_neighbor(const Graph& graph, const AttributeTable& x,
                            Graph::NodeId node, Rng& rng) {
    double best = 0.0;
    std::size_t ties = 0;
    for (const auto j : graph.neighbors(node)) {
        if (x.is_missing(j))
            throw std::runtime_error("biased sampling: missing attribute for neighbor " +
                                     std::to_string(j) + " of node " + std::to_string(node));
        const double v = x.value(j);
        if (ties == 0 || v > best) {
            best = v;
            ties = 1;
        } else if (v == best) {
            ++ties;
        }
    }
    std::size_t pick = static_cast<std::size_t>(rng.below(ties));
    for (const auto j : graph.neighbors(node)) {
        if (x.value(j) == best) {
            if (pick == 0) return j;
            --pick;
        }
    }
    throw std::logic_error("best_neighbor: tie scan out of sync");
}

GroupSummary summarize(std::string group, const std::vector<Graph::NodeId>& ids,
                       const AttributeTable& x) {
    GroupSummary summary;
    summary.group = std::move(group);
    summary.n = ids.size();

    std::vector<double> values;
    values.reserve(ids.size());
    for (const auto id : ids) {
        if (x.is_missing(id)) {
            ++summary.n_missing;
            continue;
        }
        values.push_back(x.value(id));
    }
    if (values.empty()) return summary;

    std::sort(values.begin(), values.end());
    double sum = 0.0;
    for (const double v : values) sum += v;
    summary.mean = sum / static_cast<double>(values.size());
    const std::size_t mid = values.size() / 2;
    summary.median = (values.size() % 2 == 1) ? values[mid]
                                              : 0.5 * (values[mid - 1] + values[mid]);
    summary.max = values.back();

    // survival function over unique values: P(X >= v)
    const double n = static_cast<double>(values.size());
    std::size_t i = 0;
    while (i < values.size()) {
        std::size_t j = i;
        while (j < values.size() && values[j] == values[i]) ++j;
        summary.ccdf.emplace_back(values[i],
                                  static_cast<double>(values.size() - i) / n);
        i = j;
    }
    return summary;
}

}  // namespace

SampleGroups sample_groups(const Graph& graph, const AttributeTable& x,
                           std::size_t size, std::uint64_t seed) {
    if (x.size() != graph.node_count())
        throw std::invalid_argument("binding error: attribute table length mismatch");
    if (size == 0) throw std::invalid_argument("sample size must be at least 1");

    std::vector<Graph::NodeId> eligible;
    eligible.reserve(graph.node_count());
    for (std::size_t i = 0; i < graph.node_count(); ++i)
        if (graph.degree(static_cast<Graph::NodeId>(i)) >= 1)
            eligible.push_back(static_cast<Graph::NodeId>(i));
    if (eligible.size() < size)
        throw std::invalid_argument("sample size " + std::to_string(size) + " exceeds the " +
                                    std::to_string(eligible.size()) + " non-isolated nodes");

    SampleGroups groups;
    groups.seed = seed;
    groups.sample_size = size;
    groups.control.reserve(size);
    groups.friends.reserve(size);
    groups.biased.reserve(size);

    Rng rng(seed);
    // Partial Fisher-Yates: position i swaps in a uniform pick from [i, end),
    // so the prefix is a uniform sample without replacement. Friend and
    // biased draws interleave per control node; the draw order is part of
    // the reproducibility contract.
    for (std::size_t i = 0; i < size; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng.below(eligible.size() - i));
        std::swap(eligible[i], eligible[j]);
        const auto control = eligible[i];
        groups.control.push_back(control);

        const auto adj = graph.neighbors(control);
        groups.friends.push_back(adj[static_cast<std::size_t>(rng.below(adj.size()))]);
        groups.biased.push_back(best_neighbor(graph, x, control, rng));
    }
    return groups;
}

std::array<GroupSummary, 3> group_summary(const SampleGroups& groups,
                                          const AttributeTable& x) {
    for (const auto* ids : {&groups.control, &groups.friends, &groups.biased})
        for (const auto id : *ids)
            if (id >= x.size())
                throw std::invalid_argument("group_summary: node id out of table range");
    return {
        summarize("control", groups.control, x),
        summarize("friend", groups.friends, x),
        summarize("biased", groups.biased, x),
    };
}

SnowballResult snowball_sample(const Graph& graph, Graph::NodeId start,
                               std::size_t max_nodes, std::uint64_t seed) {
    if (start >= graph.node_count())
        throw std::invalid_argument("snowball_sample: start node out of range");
    if (max_nodes == 0) throw std::invalid_argument("snowball_sample: max_nodes must be >= 1");

    SnowballResult result;
    std::vector<std::uint8_t> visited(graph.node_count(), 0);
    std::vector<Graph::NodeId> frontier{start};
    visited[start] = 1;

    while (!frontier.empty()) {
        if (result.nodes.size() + frontier.size() <= max_nodes) {
            result.nodes.insert(result.nodes.end(), frontier.begin(), frontier.end());
        } else {
            // final layer: fill the remaining quota with a uniform subset
            const std::size_t need = max_nodes - result.nodes.size();
            Rng rng(seed);
            for (std::size_t i = 0; i < need; ++i) {
                const std::size_t j = i + static_cast<std::size_t>(rng.below(frontier.size() - i));
                std::swap(frontier[i], frontier[j]);
                result.nodes.push_back(frontier[i]);
            }
            std::sort(result.nodes.begin(), result.nodes.end());
            return result;
        }
        if (result.nodes.size() == max_nodes) break;

        std::vector<Graph::NodeId> next;
        for (const auto u : frontier) {
            for (const auto v : graph.neighbors(u)) {
                if (!visited[v]) {
                    visited[v] = 1;
                    next.push_back(v);
                }
            }
        }
        std::sort(next.begin(), next.end());
        frontier = std::move(next);
    }

    result.exhausted = result.nodes.size() < max_nodes;
    std::sort(result.nodes.begin(), result.nodes.end());
    return result;
}

void write_groups_csv(std::ostream& out, const SampleGroups& groups,
                      const AttributeTable& x,
                      const std::vector<std::int64_t>& original_ids) {
    auto emit_x = [&](Graph::NodeId id) {
        if (x.is_missing(id))
            out << "NA";
        else
            out << detail::format_double(x.value(id));
    };
    out << "index,control_id,friend_id,biased_id,x_control,x_friend,x_biased\n";
    for (std::size_t i = 0; i < groups.control.size(); ++i) {
        out << i << ',' << original_ids[groups.control[i]] << ','
            << original_ids[groups.friends[i]] << ',' << original_ids[groups.biased[i]] << ',';
        emit_x(groups.control[i]);
        out << ',';
        emit_x(groups.friends[i]);
        out << ',';
        emit_x(groups.biased[i]);
        out << '\n';
    }
}

void write_summary_csv(std::ostream& out, std::span<const GroupSummary> summaries) {
    out << "group,n,n_missing,mean,median,max\n";
    for (const auto& s : summaries) {
        out << s.group << ',' << s.n << ',' << s.n_missing << ','
            << detail::format_double(s.mean) << ',' << detail::format_double(s.median) << ','
            << detail::format_double(s.max) << '\n';
    }
}

void write_ccdf_csv(std::ostream& out, const GroupSummary& summary) {
    out << "x,ccdf\n";
    for (const auto& [value, p] : summary.ccdf)
        out << detail::format_double(value) << ',' << detail::format_double(p) << '\n';
}

}  // namespace gfp
