#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "gfp/attributes.hpp"
#include "gfp/graph.hpp"

namespace gfp {

/// One publication: pre-disambiguated author ids, citation count, optional
/// ISO-8601 date. author_ids must be non-empty and duplicate-free.
struct PublicationRecord {
    std::string paper_id;
    std::vector<std::int64_t> author_ids;
    std::int64_t citations = 0;
    std::optional<std::string> date;
};

struct RecordLoadResult {
    std::vector<PublicationRecord> records;
    std::vector<std::string> line_errors;  // "line N: reason"
};

/// Parses a JSON-lines record file (one object per line with fields
/// `paper_id`, `authors`, `citations`, optional `date`). Malformed lines are
/// collected with line numbers. Throws std::runtime_error if the file cannot
/// be read or no line yields a valid record.
RecordLoadResult load_records(const std::filesystem::path& path);

/// Per-author characteristics derived from the records.
struct AuthorProfile {
    std::int64_t author_id = 0;
    std::uint32_t n_coauthors = 0;   // degree in the projected graph
    std::int64_t n_citations = 0;    // full paper credit to every coauthor
    std::uint32_t n_publications = 0;
    double citations_per_publication = 0.0;
};

/// Coauthorship projection: authors are nodes, a single unweighted link joins
/// any pair that co-wrote at least one paper. Single-author records still
/// add their author as an (isolated) node.
struct CoauthorshipResult {
    Graph graph;
    std::vector<std::int64_t> author_ids;        // compact id -> author id
    std::vector<AuthorProfile> profiles;         // compact node-id order
    std::array<AttributeTable, 4> characteristics;  // coauthors, citations,
                                                    // publications,
                                                    // citations_per_publication
    std::size_t skipped_empty_records = 0;
};

CoauthorshipResult project_coauthorship(const std::vector<PublicationRecord>& records);

}  // namespace gfp
