#include "gfp/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "detail/format.hpp"

namespace gfp {

namespace {

std::runtime_error parse_error(const std::filesystem::path& path, std::size_t line,
                               const std::string& what) {
    return std::runtime_error(path.string() + ":" + std::to_string(line) + ": " + what);
}

bool parse_int(std::string_view token, std::int64_t& out) {
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
    return ec == std::errc{} && ptr == token.data() + token.size();
}

bool parse_real(std::string_view token, double& out) {
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
    return ec == std::errc{} && ptr == token.data() + token.size();
}

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream stream(line);
    std::string token;
    while (stream >> token) tokens.push_back(std::move(token));
    return tokens;
}

}  // namespace

std::vector<RawEdge> read_edge_list(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open edge file: " + path.string());

    std::vector<RawEdge> edges;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        const auto tokens = split_ws(line);
        if (tokens.empty()) continue;
        if (tokens.size() != 2)
            throw parse_error(path, lineno, "expected two node ids, got " +
                                                std::to_string(tokens.size()) + " tokens");
        std::int64_t u = 0, v = 0;
        if (!parse_int(tokens[0], u) || !parse_int(tokens[1], v))
            throw parse_error(path, lineno, "non-integer node id");
        if (u < 0 || v < 0) throw parse_error(path, lineno, "negative node id");
        edges.emplace_back(u, v);
    }
    return edges;
}

void write_edge_list(const std::filesystem::path& path, const Graph& graph,
                     const std::vector<std::int64_t>& original_ids) {
    if (original_ids.size() != graph.node_count())
        throw std::invalid_argument("write_edge_list: id map length mismatch");
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write edge file: " + path.string());
    out << "# " << graph.node_count() << " nodes, " << graph.edge_count() << " edges\n";
    for (std::size_t i = 0; i < graph.node_count(); ++i) {
        for (const auto j : graph.neighbors(static_cast<Graph::NodeId>(i))) {
            if (j < i) continue;
            out << original_ids[i] << ' ' << original_ids[j] << '\n';
        }
    }
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

AttributeFileData read_attribute_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open attribute file: " + path.string());

    std::string line;
    std::size_t lineno = 0;

    // header: node <name1> <name2> ...
    std::vector<std::string> header;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        header = split_ws(line);
        break;
    }
    if (header.empty() || header[0] != "node")
        throw parse_error(path, lineno, "attribute header must start with 'node'");
    if (header.size() < 2) throw parse_error(path, lineno, "attribute header names no columns");

    AttributeFileData data;
    data.columns.resize(header.size() - 1);
    for (std::size_t c = 0; c + 1 < header.size(); ++c) data.columns[c].name = header[c + 1];

    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        const auto tokens = split_ws(line);
        if (tokens.empty()) continue;
        if (tokens.size() != header.size())
            throw parse_error(path, lineno, "expected " + std::to_string(header.size()) +
                                                " fields, got " + std::to_string(tokens.size()));
        std::int64_t id = 0;
        if (!parse_int(tokens[0], id)) throw parse_error(path, lineno, "non-integer node id");
        if (id < 0) throw parse_error(path, lineno, "negative node id");
        data.node_ids.push_back(id);
        for (std::size_t c = 0; c < data.columns.size(); ++c) {
            auto& col = data.columns[c];
            if (tokens[c + 1] == "NA") {
                col.values.push_back(0.0);
                col.missing.push_back(1);
            } else {
                double v = 0.0;
                if (!parse_real(tokens[c + 1], v))
                    throw parse_error(path, lineno, "bad value '" + tokens[c + 1] +
                                                        "' in column " + col.name);
                col.values.push_back(v);
                col.missing.push_back(0);
            }
        }
    }
    return data;
}

std::vector<AttributeTable> bind_attributes(const AttributeFileData& data,
                                            const std::vector<std::int64_t>& original_ids) {
    const std::size_t n = original_ids.size();
    std::unordered_map<std::int64_t, std::size_t> to_compact;
    to_compact.reserve(n * 2);
    for (std::size_t i = 0; i < n; ++i) to_compact.emplace(original_ids[i], i);

    std::vector<std::uint8_t> seen(n, 0);
    std::vector<std::size_t> row_of(n, 0);
    for (std::size_t r = 0; r < data.node_ids.size(); ++r) {
        const auto it = to_compact.find(data.node_ids[r]);
        if (it == to_compact.end())
            throw std::invalid_argument("binding error: attribute row for unknown node id " +
                                        std::to_string(data.node_ids[r]));
        if (seen[it->second])
            throw std::invalid_argument("binding error: duplicate attribute row for node id " +
                                        std::to_string(data.node_ids[r]));
        seen[it->second] = 1;
        row_of[it->second] = r;
    }
    if (data.node_ids.size() != n) {
        std::size_t absent = 0;
        for (const auto s : seen)
            if (!s) ++absent;
        throw std::invalid_argument("binding error: attribute file missing rows for " +
                                    std::to_string(absent) + " of " + std::to_string(n) +
                                    " nodes");
    }

    std::vector<AttributeTable> tables;
    tables.reserve(data.columns.size());
    for (const auto& col : data.columns) {
        std::vector<double> values(n);
        std::vector<std::uint8_t> missing(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            values[i] = col.values[row_of[i]];
            missing[i] = col.missing[row_of[i]];
        }
        tables.emplace_back(col.name, std::move(values), std::move(missing));
    }
    return tables;
}

void write_attribute_file(const std::filesystem::path& path,
                          const std::vector<std::int64_t>& node_ids,
                          const std::vector<AttributeTable>& tables) {
    for (const auto& t : tables)
        if (t.size() != node_ids.size())
            throw std::invalid_argument("write_attribute_file: table length mismatch");
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write attribute file: " + path.string());

    out << "node";
    for (const auto& t : tables) out << ' ' << t.name();
    out << '\n';
    for (std::size_t i = 0; i < node_ids.size(); ++i) {
        out << node_ids[i];
        for (const auto& t : tables) {
            if (t.is_missing(i))
                out << " NA";
            else
                out << ' ' << detail::format_double(t.value(i));
        }
        out << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace gfp
