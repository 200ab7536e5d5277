#include "gfp/attributes.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace gfp {

AttributeTable::AttributeTable(std::string name, std::vector<double> values,
                               std::vector<std::uint8_t> missing)
    : name_(std::move(name)), values_(std::move(values)), missing_(std::move(missing)) {
    if (!missing_.empty() && missing_.size() != values_.size())
        throw std::invalid_argument("AttributeTable: missing mask length mismatch");
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!is_missing(i) && !std::isfinite(values_[i]))
            throw std::invalid_argument("AttributeTable '" + name_ +
                                        "': non-finite value at node " + std::to_string(i));
    }
}

std::size_t AttributeTable::missing_count() const {
    if (missing_.empty()) return 0;
    return static_cast<std::size_t>(
        std::accumulate(missing_.begin(), missing_.end(), std::size_t{0}));
}

AttributeTable degree_attribute(const Graph& graph) {
    std::vector<double> values(graph.node_count());
    for (std::size_t i = 0; i < values.size(); ++i)
        values[i] = static_cast<double>(graph.degree(static_cast<Graph::NodeId>(i)));
    return AttributeTable("degree", std::move(values));
}

BindingReport validate(const Graph& graph, const AttributeTable& attrs) {
    if (attrs.size() != graph.node_count())
        throw std::invalid_argument("binding error: attribute table has " +
                                    std::to_string(attrs.size()) + " entries for a graph of " +
                                    std::to_string(graph.node_count()) + " nodes");
    BindingReport report;
    report.node_count = graph.node_count();
    report.missing_values = attrs.missing_count();
    for (std::size_t i = 0; i < graph.node_count(); ++i)
        if (graph.degree(static_cast<Graph::NodeId>(i)) == 0) ++report.isolated_nodes;
    return report;
}

}  // namespace gfp
