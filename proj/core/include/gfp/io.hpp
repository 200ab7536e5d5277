#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "gfp/attributes.hpp"
#include "gfp/graph.hpp"

namespace gfp {

// Edge-list file: one edge per line, two whitespace-separated non-negative
// integer ids; lines starting with '#' (and blank lines) are ignored.
//
// Attribute file: header line `node <name1> <name2> ...`, then one row per
// node: integer id followed by one real value per column; `NA` marks a
// missing value.

std::vector<RawEdge> read_edge_list(const std::filesystem::path& path);

/// Writes the canonical edge list (each edge once, smaller original id
/// first, sorted).
void write_edge_list(const std::filesystem::path& path, const Graph& graph,
                     const std::vector<std::int64_t>& original_ids);

/// Attribute file contents before binding to a graph: rows keyed by source
/// node id, one column per characteristic.
struct AttributeColumn {
    std::string name;
    std::vector<double> values;           // row order
    std::vector<std::uint8_t> missing;    // row order
};

struct AttributeFileData {
    std::vector<std::int64_t> node_ids;   // row order
    std::vector<AttributeColumn> columns;
};

AttributeFileData read_attribute_file(const std::filesystem::path& path);

/// Binds file columns to a graph built over `original_ids`. Every node must
/// have exactly one row and every row id must be a node; anything else is a
/// binding error. Output tables are in compact node-id order.
std::vector<AttributeTable> bind_attributes(const AttributeFileData& data,
                                            const std::vector<std::int64_t>& original_ids);

void write_attribute_file(const std::filesystem::path& path,
                          const std::vector<std::int64_t>& node_ids,
                          const std::vector<AttributeTable>& tables);

}  // namespace gfp
