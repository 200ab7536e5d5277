#include "gfp/ingest.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

namespace gfp {

namespace {

PublicationRecord parse_record(const nlohmann::json& obj) {
    if (!obj.is_object()) throw std::runtime_error("record is not an object");

    PublicationRecord record;
    if (!obj.contains("paper_id") || !obj["paper_id"].is_string())
        throw std::runtime_error("missing or non-string 'paper_id'");
    record.paper_id = obj["paper_id"].get<std::string>();

    if (!obj.contains("authors") || !obj["authors"].is_array())
        throw std::runtime_error("missing or non-array 'authors'");
    std::unordered_set<std::int64_t> seen;
    for (const auto& a : obj["authors"]) {
        if (!a.is_number_integer()) throw std::runtime_error("non-integer author id");
        const auto id = a.get<std::int64_t>();
        if (id < 0) throw std::runtime_error("negative author id");
        if (!seen.insert(id).second)
            throw std::runtime_error("duplicate author id " + std::to_string(id));
        record.author_ids.push_back(id);
    }
    if (record.author_ids.empty()) throw std::runtime_error("empty author list");

    if (!obj.contains("citations") || !obj["citations"].is_number_integer())
        throw std::runtime_error("missing or non-integer 'citations'");
    record.citations = obj["citations"].get<std::int64_t>();
    if (record.citations < 0) throw std::runtime_error("negative citation count");

    if (obj.contains("date")) {
        if (!obj["date"].is_string()) throw std::runtime_error("non-string 'date'");
        record.date = obj["date"].get<std::string>();
    }
    return record;
}

}  // namespace

RecordLoadResult load_records(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open record file: " + path.string());

    RecordLoadResult result;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            const auto obj = nlohmann::json::parse(line);
            result.records.push_back(parse_record(obj));
        } catch (const std::exception& e) {
            result.line_errors.push_back("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (result.records.empty())
        throw std::runtime_error("zero valid records in " + path.string());
    return result;
}

CoauthorshipResult project_coauthorship(const std::vector<PublicationRecord>& records) {
    if (records.empty()) throw std::invalid_argument("no publication records");

    CoauthorshipResult result;
    std::vector<RawEdge> edges;
    std::vector<std::int64_t> authors;
    for (const auto& record : records) {
        if (record.author_ids.empty()) {
            ++result.skipped_empty_records;
            continue;
        }
        std::unordered_set<std::int64_t> seen;
        for (const auto id : record.author_ids)
            if (!seen.insert(id).second)
                throw std::invalid_argument("duplicate author id in record '" +
                                            record.paper_id + "'");
        for (std::size_t a = 0; a < record.author_ids.size(); ++a) {
            authors.push_back(record.author_ids[a]);
            for (std::size_t b = a + 1; b < record.author_ids.size(); ++b)
                edges.emplace_back(record.author_ids[a], record.author_ids[b]);
        }
    }
    if (authors.empty()) throw std::invalid_argument("all records have empty author lists");

    auto built = build_graph(edges, authors);
    result.graph = std::move(built.graph);
    result.author_ids = std::move(built.original_ids);

    const std::size_t n = result.graph.node_count();
    std::unordered_map<std::int64_t, std::size_t> to_compact;
    to_compact.reserve(n * 2);
    for (std::size_t i = 0; i < n; ++i) to_compact.emplace(result.author_ids[i], i);

    result.profiles.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        result.profiles[i].author_id = result.author_ids[i];
        result.profiles[i].n_coauthors = result.graph.degree(static_cast<Graph::NodeId>(i));
    }
    for (const auto& record : records) {
        for (const auto id : record.author_ids) {
            auto& profile = result.profiles[to_compact.at(id)];
            profile.n_publications += 1;
            profile.n_citations += record.citations;
        }
    }
    for (auto& profile : result.profiles)
        profile.citations_per_publication =
            static_cast<double>(profile.n_citations) / static_cast<double>(profile.n_publications);

    std::vector<double> coauthors(n), citations(n), publications(n), cpp(n);
    for (std::size_t i = 0; i < n; ++i) {
        coauthors[i] = static_cast<double>(result.profiles[i].n_coauthors);
        citations[i] = static_cast<double>(result.profiles[i].n_citations);
        publications[i] = static_cast<double>(result.profiles[i].n_publications);
        cpp[i] = result.profiles[i].citations_per_publication;
    }
    result.characteristics = {
        AttributeTable("coauthors", std::move(coauthors)),
        AttributeTable("citations", std::move(citations)),
        AttributeTable("publications", std::move(publications)),
        AttributeTable("citations_per_publication", std::move(cpp)),
    };
    return result;
}

}  // namespace gfp
