// gfp: friendship-paradox analytics on attributed graphs.
//
// Subcommands cover the full pipeline: canonicalize raw inputs (build),
// compute paradox statistics and h(k,x) grids (metrics, grid), run the three
// node-sampling strategies (sample), crawl breadth-first subgraphs
// (snowball), synthesize degree-correlated characteristics (synth), and
// generate random graphs (gen). Every randomized command records its seed in
// the output manifest; identical config and inputs give byte-identical data
// outputs.

#include <chrono>
#include <cstdint>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gfp/attributes.hpp"
#include "gfp/graph.hpp"
#include "gfp/ingest.hpp"
#include "gfp/io.hpp"
#include "gfp/metrics.hpp"
#include "gfp/sampling.hpp"
#include "gfp/synthesis.hpp"
#include "gfp/version.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string fnv1a64_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open input: " + path.string());
    std::uint64_t hash = 1469598103934665603ull;
    char buf[1 << 16];
    while (in.read(buf, sizeof(buf)) || in.gcount() > 0) {
        const auto got = in.gcount();
        for (std::streamsize i = 0; i < got; ++i) {
            hash ^= static_cast<unsigned char>(buf[i]);
            hash *= 1099511628211ull;
        }
        if (!in) break;
    }
    char out[19];
    std::snprintf(out, sizeof(out), "%016llx", static_cast<unsigned long long>(hash));
    return out;
}

std::string utc_now() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::uint64_t resolve_seed(std::optional<std::uint64_t> seed) {
    if (seed) return *seed;
    std::random_device rd;
    const std::uint64_t generated =
        (static_cast<std::uint64_t>(rd()) << 32) ^ static_cast<std::uint64_t>(rd());
    std::cout << "seed: " << generated << " (generated; pass --seed to reproduce)\n";
    return generated;
}

void write_manifest(const fs::path& out_dir, const std::string& command, json config,
                    const std::vector<fs::path>& inputs) {
    json doc;
    doc["command"] = command;
    doc["version"] = GFP_VERSION_STRING;
    doc["config"] = std::move(config);
    json sums = json::object();
    for (const auto& p : inputs) sums[p.string()] = "fnv1a64:" + fnv1a64_file(p);
    doc["inputs"] = sums;
    doc["timestamp"] = utc_now();
    std::ofstream out(out_dir / "manifest.json");
    out << doc.dump(2) << "\n";
    if (!out) throw std::runtime_error("cannot write manifest in " + out_dir.string());
}

fs::path ensure_out_dir(const std::string& out) {
    fs::path dir(out);
    fs::create_directories(dir);
    return dir;
}

struct LoadedGraph {
    gfp::BuildResult built;
    std::vector<gfp::AttributeTable> tables;  // empty without --attrs
};

// The edge-list format cannot express isolated nodes, so when an attribute
// file is present the node set is the union of edge ids and attribute row
// ids; rows for ids no edge touches become isolated nodes.
LoadedGraph load_graph(const std::string& edges_path, const std::string& attrs_path) {
    const auto edges = gfp::read_edge_list(edges_path);
    LoadedGraph loaded;
    if (attrs_path.empty()) {
        loaded.built = gfp::build_graph(edges);
        return loaded;
    }
    const auto data = gfp::read_attribute_file(attrs_path);
    loaded.built = gfp::build_graph(edges, data.node_ids);
    loaded.tables = gfp::bind_attributes(data, loaded.built.original_ids);
    return loaded;
}

const gfp::AttributeTable* find_table(const std::vector<gfp::AttributeTable>& tables,
                                      const std::string& name) {
    for (const auto& t : tables)
        if (t.name() == name) return &t;
    return nullptr;
}

// "degree" is always available; anything else must be an --attrs column.
gfp::AttributeTable select_characteristic(const LoadedGraph& loaded, const std::string& name) {
    if (name == "degree") return gfp::degree_attribute(loaded.built.graph);
    if (const auto* t = find_table(loaded.tables, name)) return *t;
    throw std::runtime_error("characteristic '" + name +
                             "' not found (use a column name from --attrs or 'degree')");
}

void write_text_file(const fs::path& path, const std::string& contents) {
    std::ofstream out(path);
    out << contents;
    if (!out) throw std::runtime_error("cannot write " + path.string());
}

int cmd_build(const std::string& edges_path, const std::string& records_path,
              const std::string& out) {
    const auto out_dir = ensure_out_dir(out);
    json config;
    std::vector<fs::path> inputs;

    if (!records_path.empty()) {
        const auto loaded = gfp::load_records(records_path);
        for (const auto& err : loaded.line_errors) std::cerr << "skipped " << err << "\n";
        const auto projected = gfp::project_coauthorship(loaded.records);

        gfp::write_edge_list(out_dir / "edges.txt", projected.graph, projected.author_ids);
        std::vector<gfp::AttributeTable> tables(projected.characteristics.begin(),
                                                projected.characteristics.end());
        gfp::write_attribute_file(out_dir / "attributes.txt", projected.author_ids, tables);

        std::ofstream nodes(out_dir / "nodes.txt");
        nodes << "# node original_id\n";
        for (std::size_t i = 0; i < projected.author_ids.size(); ++i)
            nodes << i << ' ' << projected.author_ids[i] << '\n';

        std::cout << "records: " << loaded.records.size() << " valid, "
                  << loaded.line_errors.size() << " rejected\n"
                  << "graph: " << projected.graph.node_count() << " authors, "
                  << projected.graph.edge_count() << " coauthor links\n";
        config["records"] = records_path;
        inputs.push_back(records_path);
    } else {
        const auto raw = gfp::read_edge_list(edges_path);
        const auto built = gfp::build_graph(raw);

        gfp::write_edge_list(out_dir / "edges.txt", built.graph, built.original_ids);
        std::ofstream nodes(out_dir / "nodes.txt");
        nodes << "# node original_id\n";
        for (std::size_t i = 0; i < built.original_ids.size(); ++i)
            nodes << i << ' ' << built.original_ids[i] << '\n';

        std::cout << "graph: " << built.graph.node_count() << " nodes, "
                  << built.graph.edge_count() << " edges ("
                  << built.self_loops_dropped << " self-loops, "
                  << built.duplicate_edges_dropped << " duplicates dropped)\n";
        config["edges"] = edges_path;
        inputs.push_back(edges_path);
    }
    write_manifest(out_dir, "build", config, inputs);
    return 0;
}

int cmd_metrics(const std::string& edges_path, const std::string& attrs_path,
                std::vector<std::string> names, const std::string& out, unsigned threads) {
    const auto out_dir = ensure_out_dir(out);
    const auto loaded = load_graph(edges_path, attrs_path);
    if (names.empty()) {
        for (const auto& t : loaded.tables) names.push_back(t.name());
        if (names.empty()) names.emplace_back("degree");
    }

    for (const auto& name : names) {
        const auto x = select_characteristic(loaded, name);
        const auto report = gfp::gfp_report(loaded.built.graph, x, threads);
        write_text_file(out_dir / ("report_" + name + ".json"), gfp::report_to_json(report));
        std::cout << name << ": H=" << report.h_average << " mean_x=" << report.mean_x
                  << " mean_x_nn=" << report.mean_x_nn
                  << (report.gfp_network_level ? " (paradox holds)" : " (paradox does not hold)")
                  << "\n";
    }

    json config;
    config["edges"] = edges_path;
    if (!attrs_path.empty()) config["attrs"] = attrs_path;
    config["x"] = names;
    config["threads"] = threads;
    std::vector<fs::path> inputs{edges_path};
    if (!attrs_path.empty()) inputs.emplace_back(attrs_path);
    write_manifest(out_dir, "metrics", config, inputs);
    return 0;
}

int cmd_grid(const std::string& edges_path, const std::string& attrs_path,
             const std::string& name, const std::string& bins, const std::string& out,
             unsigned threads) {
    const auto out_dir = ensure_out_dir(out);
    const auto loaded = load_graph(edges_path, attrs_path);
    const auto x = select_characteristic(loaded, name);
    const auto& graph = loaded.built.graph;

    const auto policy = bins == "unit" ? gfp::BinPolicy::Unit : gfp::BinPolicy::Log2;
    std::vector<double> eval_k, eval_x;
    for (std::size_t i = 0; i < graph.node_count(); ++i) {
        const auto node = static_cast<gfp::Graph::NodeId>(i);
        if (graph.degree(node) == 0 || x.is_missing(i)) continue;
        eval_k.push_back(static_cast<double>(graph.degree(node)));
        eval_x.push_back(x.value(i));
    }
    if (eval_k.empty()) throw std::runtime_error("no evaluable nodes for grid binning");
    const auto k_edges = gfp::default_bin_edges(eval_k, policy);
    const auto x_edges = gfp::default_bin_edges(eval_x, policy);

    const auto grid = gfp::paradox_probability_grid(graph, x, k_edges, x_edges, threads);
    std::ofstream csv(out_dir / ("grid_" + name + ".csv"));
    gfp::write_grid_csv(csv, grid);
    if (!csv) throw std::runtime_error("cannot write grid csv");

    std::cout << "grid_" << name << ".csv: " << grid.k_bins() << "x" << grid.x_bins()
              << " bins, " << grid.total_count() << " nodes binned\n";

    json config;
    config["edges"] = edges_path;
    if (!attrs_path.empty()) config["attrs"] = attrs_path;
    config["x"] = name;
    config["bins"] = bins;
    config["threads"] = threads;
    std::vector<fs::path> inputs{edges_path};
    if (!attrs_path.empty()) inputs.emplace_back(attrs_path);
    write_manifest(out_dir, "grid", config, inputs);
    return 0;
}

int cmd_sample(const std::string& edges_path, const std::string& attrs_path,
               const std::string& name, std::size_t size,
               std::optional<std::uint64_t> seed_opt, const std::string& out) {
    const auto out_dir = ensure_out_dir(out);
    const auto loaded = load_graph(edges_path, attrs_path);
    const auto x = select_characteristic(loaded, name);
    const auto seed = resolve_seed(seed_opt);

    const auto groups = gfp::sample_groups(loaded.built.graph, x, size, seed);
    const auto summaries = gfp::group_summary(groups, x);

    {
        std::ofstream csv(out_dir / "groups.csv");
        gfp::write_groups_csv(csv, groups, x, loaded.built.original_ids);
        if (!csv) throw std::runtime_error("cannot write groups.csv");
    }
    {
        std::ofstream csv(out_dir / "summary.csv");
        gfp::write_summary_csv(csv, summaries);
    }
    for (const auto& s : summaries) {
        std::ofstream csv(out_dir / ("ccdf_" + s.group + ".csv"));
        gfp::write_ccdf_csv(csv, s);
        std::cout << s.group << ": mean=" << s.mean << " median=" << s.median
                  << " max=" << s.max << "\n";
    }

    json config;
    config["edges"] = edges_path;
    if (!attrs_path.empty()) config["attrs"] = attrs_path;
    config["x"] = name;
    config["size"] = size;
    config["seed"] = seed;
    std::vector<fs::path> inputs{edges_path};
    if (!attrs_path.empty()) inputs.emplace_back(attrs_path);
    write_manifest(out_dir, "sample", config, inputs);
    return 0;
}

int cmd_snowball(const std::string& edges_path, std::int64_t start_original,
                 std::size_t max_nodes, std::optional<std::uint64_t> seed_opt,
                 const std::string& out) {
    const auto out_dir = ensure_out_dir(out);
    const auto built = gfp::build_graph(gfp::read_edge_list(edges_path));
    const auto seed = resolve_seed(seed_opt);

    const auto it = std::lower_bound(built.original_ids.begin(), built.original_ids.end(),
                                     start_original);
    if (it == built.original_ids.end() || *it != start_original)
        throw std::runtime_error("start node " + std::to_string(start_original) +
                                 " not present in the graph");
    const auto start = static_cast<gfp::Graph::NodeId>(it - built.original_ids.begin());

    const auto result = gfp::snowball_sample(built.graph, start, max_nodes, seed);
    if (result.exhausted)
        std::cerr << "warning: component exhausted at " << result.nodes.size() << " of "
                  << max_nodes << " requested nodes\n";

    const auto sub = gfp::induced_subgraph(built.graph, result.nodes);
    {
        std::ofstream nodes(out_dir / "snowball_nodes.txt");
        for (const auto id : result.nodes) nodes << built.original_ids[id] << '\n';
        if (!nodes) throw std::runtime_error("cannot write snowball_nodes.txt");
    }
    std::vector<std::int64_t> sub_original(sub.parent_ids.size());
    for (std::size_t i = 0; i < sub.parent_ids.size(); ++i)
        sub_original[i] = built.original_ids[sub.parent_ids[i]];
    gfp::write_edge_list(out_dir / "snowball_edges.txt", sub.graph, sub_original);

    std::cout << "snowball: " << result.nodes.size() << " nodes, " << sub.graph.edge_count()
              << " induced edges\n";

    json config;
    config["edges"] = edges_path;
    config["start"] = start_original;
    config["size"] = max_nodes;
    config["seed"] = seed;
    write_manifest(out_dir, "snowball", config, {edges_path});
    return 0;
}

int cmd_synth(const std::string& edges_path, double rho,
              std::optional<std::uint64_t> seed_opt, const std::string& out) {
    const auto out_dir = ensure_out_dir(out);
    const auto built = gfp::build_graph(gfp::read_edge_list(edges_path));
    const auto seed = resolve_seed(seed_opt);

    const auto x = gfp::synthesize_correlated(built.graph, {rho, seed, std::nullopt});
    gfp::write_attribute_file(out_dir / "synthesized.txt", built.original_ids, {x});
    std::cout << "synthesized.txt: column " << x.name() << " over "
              << built.graph.node_count() << " nodes\n";

    json config;
    config["edges"] = edges_path;
    config["rho"] = rho;
    config["seed"] = seed;
    write_manifest(out_dir, "synth", config, {edges_path});
    return 0;
}

int cmd_gen(const std::string& model, std::size_t n, double p, std::size_t m,
            const std::string& degrees_from, std::optional<std::uint64_t> seed_opt,
            const std::string& out) {
    const auto out_dir = ensure_out_dir(out);
    const auto seed = resolve_seed(seed_opt);

    gfp::Graph graph;
    json config;
    config["model"] = model;
    config["seed"] = seed;
    std::vector<fs::path> inputs;
    if (model == "erdos_renyi") {
        graph = gfp::erdos_renyi({n, p}, seed);
        config["n"] = n;
        config["p"] = p;
    } else if (model == "barabasi_albert") {
        graph = gfp::barabasi_albert({n, m}, seed);
        config["n"] = n;
        config["m"] = m;
    } else if (model == "configuration") {
        if (degrees_from.empty())
            throw std::runtime_error("configuration model needs --degrees-from <edge file>");
        const auto source = gfp::build_graph(gfp::read_edge_list(degrees_from));
        gfp::ConfigurationReport report;
        graph = gfp::configuration_model({source.graph.degree_sequence()}, seed, &report);
        if (report.dropped > 0)
            std::cerr << "warning: dropped " << report.dropped
                      << " unresolvable stub pairings\n";
        config["degrees_from"] = degrees_from;
        inputs.emplace_back(degrees_from);
    } else {
        throw std::runtime_error("unknown model '" + model + "'");
    }

    std::vector<std::int64_t> ids(graph.node_count());
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<std::int64_t>(i);
    gfp::write_edge_list(out_dir / "edges.txt", graph, ids);
    std::cout << model << ": " << graph.node_count() << " nodes, " << graph.edge_count()
              << " edges\n";
    write_manifest(out_dir, "gen", config, inputs);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"friendship-paradox analytics on attributed graphs"};
    app.set_version_flag("--version", GFP_VERSION_STRING);
    app.require_subcommand(1);

    std::string edges_path, records_path, attrs_path, out = ".";
    std::string bins = "log2", model, degrees_from;
    std::vector<std::string> names;
    std::string x_name = "degree";
    std::size_t size = 0, n = 0, m = 1;
    double rho = 0.0, p = 0.0;
    std::int64_t start = 0;
    unsigned threads = 0;
    std::optional<std::uint64_t> seed;

    auto* build = app.add_subcommand("build", "canonicalize an edge list or project records");
    auto* b_edges = build->add_option("--edges", edges_path, "raw edge-list file");
    auto* b_records = build->add_option("--records", records_path, "publication records (JSON lines)");
    b_edges->excludes(b_records);
    build->add_option("--out", out, "output directory");

    auto* metrics = app.add_subcommand("metrics", "paradox statistics report");
    metrics->add_option("--edges", edges_path, "edge-list file")->required();
    metrics->add_option("--attrs", attrs_path, "attribute file");
    metrics->add_option("--x", names, "characteristic name(s); 'degree' is built in");
    metrics->add_option("--out", out, "output directory");
    metrics->add_option("--threads", threads, "worker cap (0 = all cores)");

    auto* grid = app.add_subcommand("grid", "binned paradox probability h(k,x)");
    grid->add_option("--edges", edges_path, "edge-list file")->required();
    grid->add_option("--attrs", attrs_path, "attribute file");
    grid->add_option("--x", x_name, "characteristic name");
    grid->add_option("--bins", bins, "binning policy")
        ->check(CLI::IsMember({"log2", "unit"}));
    grid->add_option("--out", out, "output directory");
    grid->add_option("--threads", threads, "worker cap (0 = all cores)");

    auto* sample = app.add_subcommand("sample", "control/friend/biased node sampling");
    sample->add_option("--edges", edges_path, "edge-list file")->required();
    sample->add_option("--attrs", attrs_path, "attribute file");
    sample->add_option("--x", x_name, "characteristic name");
    sample->add_option("--size", size, "nodes per group")->required();
    sample->add_option("--seed", seed, "RNG seed (generated and recorded if omitted)");
    sample->add_option("--out", out, "output directory");

    auto* snowball = app.add_subcommand("snowball", "breadth-first subgraph sample");
    snowball->add_option("--edges", edges_path, "edge-list file")->required();
    snowball->add_option("--start", start, "start node id (source id)")->required();
    snowball->add_option("--size", size, "maximum nodes to collect")->required();
    snowball->add_option("--seed", seed, "RNG seed (generated and recorded if omitted)");
    snowball->add_option("--out", out, "output directory");

    auto* synth = app.add_subcommand("synth", "synthesize a degree-correlated characteristic");
    synth->add_option("--edges", edges_path, "edge-list file")->required();
    synth->add_option("--rho", rho, "target degree correlation in [-1, 1]")->required();
    synth->add_option("--seed", seed, "RNG seed (generated and recorded if omitted)");
    synth->add_option("--out", out, "output directory");

    auto* gen = app.add_subcommand("gen", "generate a random graph");
    gen->add_option("--model", model, "erdos_renyi | barabasi_albert | configuration")
        ->required()
        ->check(CLI::IsMember({"erdos_renyi", "barabasi_albert", "configuration"}));
    gen->add_option("--n", n, "node count");
    gen->add_option("--p", p, "edge probability (erdos_renyi)");
    gen->add_option("--m", m, "edges per new node (barabasi_albert)");
    gen->add_option("--degrees-from", degrees_from, "edge file supplying the degree sequence");
    gen->add_option("--seed", seed, "RNG seed (generated and recorded if omitted)");
    gen->add_option("--out", out, "output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (build->parsed()) {
            if (edges_path.empty() && records_path.empty())
                throw std::runtime_error("build needs --edges or --records");
            return cmd_build(edges_path, records_path, out);
        }
        if (metrics->parsed()) return cmd_metrics(edges_path, attrs_path, names, out, threads);
        if (grid->parsed()) return cmd_grid(edges_path, attrs_path, x_name, bins, out, threads);
        if (sample->parsed()) return cmd_sample(edges_path, attrs_path, x_name, size, seed, out);
        if (snowball->parsed()) return cmd_snowball(edges_path, start, size, seed, out);
        if (synth->parsed()) return cmd_synth(edges_path, rho, seed, out);
        if (gen->parsed()) return cmd_gen(model, n, p, m, degrees_from, seed, out);
    } catch (const std::exception& e) {
        std::cerr << "gfp: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
