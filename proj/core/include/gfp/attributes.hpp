#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gfp/graph.hpp"

namespace gfp {

/// Named real-valued per-node characteristic vector, in compact node-id
/// order. Entries may be marked missing; all non-missing values are finite
/// (checked at construction).
class AttributeTable {
public:
    AttributeTable() = default;

    /// missing may be empty (no missing values) or values.size() long.
    AttributeTable(std::string name, std::vector<double> values,
                   std::vector<std::uint8_t> missing = {});

    const std::string& name() const { return name_; }
    std::size_t size() const { return values_.size(); }

    double value(std::size_t i) const { return values_[i]; }
    bool is_missing(std::size_t i) const {
        return !missing_.empty() && missing_[i] != 0;
    }

    std::size_t missing_count() const;

    const std::vector<double>& values() const { return values_; }

private:
    std::string name_;
    std::vector<double> values_;
    std::vector<std::uint8_t> missing_;  // empty means none missing
};

/// The degree vector as a characteristic (x = k).
AttributeTable degree_attribute(const Graph& graph);

/// Result of binding an AttributeTable against a Graph.
struct BindingReport {
    std::size_t node_count = 0;
    std::size_t missing_values = 0;
    std::size_t isolated_nodes = 0;  // k == 0
};

/// Checks that the table covers the graph. Throws std::invalid_argument on a
/// length mismatch; otherwise reports missing-value and isolated-node counts.
BindingReport validate(const Graph& graph, const AttributeTable& attrs);

}  // namespace gfp
