#include "gfp/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

#include "detail/format.hpp"
#include "detail/parallel.hpp"

namespace gfp {

namespace {

constexpr std::size_t kChunk = 8192;

void check_binding(const Graph& graph, const AttributeTable& x) {
    if (x.size() != graph.node_count())
        throw std::invalid_argument("binding error: attribute table has " +
                                    std::to_string(x.size()) + " entries for a graph of " +
                                    std::to_string(graph.node_count()) + " nodes");
}

struct EvalData {
    std::vector<std::uint8_t> evaluable;
    std::size_t n_evaluated = 0;
    std::size_t excluded_isolated = 0;
    std::size_t excluded_missing_x = 0;
    std::size_t excluded_missing_neighbor = 0;
    std::uint64_t degree_sum = 0;  // over evaluable nodes
};

// A node enters the statistics only when the per-node paradox test is
// defined for it: k >= 1 and complete attribute data on the node and its
// whole neighborhood.
EvalData build_eval_mask(const Graph& graph, const AttributeTable& x) {
    check_binding(graph, x);
    const std::size_t n = graph.node_count();
    EvalData eval;
    eval.evaluable.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const auto node = static_cast<Graph::NodeId>(i);
        const auto k = graph.degree(node);
        if (k == 0) {
            ++eval.excluded_isolated;
            continue;
        }
        if (x.is_missing(i)) {
            ++eval.excluded_missing_x;
            continue;
        }
        bool neighbor_missing = false;
        for (const auto j : graph.neighbors(node)) {
            if (x.is_missing(j)) {
                neighbor_missing = true;
                break;
            }
        }
        if (neighbor_missing) {
            ++eval.excluded_missing_neighbor;
            continue;
        }
        eval.evaluable[i] = 1;
        ++eval.n_evaluated;
        eval.degree_sum += k;
    }
    return eval;
}

struct Moments {
    std::size_t n = 0;
    double mean_k = 0.0;
    double mean_x = 0.0;
    double var_k = 0.0;   // population
    double var_x = 0.0;
    double cov_kx = 0.0;
    double sum_kx = 0.0;  // raw sum of k_i * x_i
    std::uint64_t sum_k = 0;
    std::uint64_t holds = 0;  // nodes satisfying the paradox test
};

// Two-pass population moments plus the per-node paradox count, all over the
// evaluated set. Every floating sum goes through fixed chunks reduced in
// chunk order, so results do not depend on the worker count.
Moments compute_moments(const Graph& graph, const AttributeTable& x, const EvalData& eval,
                        unsigned threads) {
    const std::size_t n = graph.node_count();
    const std::size_t n_chunks = (n + kChunk - 1) / kChunk;

    Moments m;
    m.n = eval.n_evaluated;
    m.sum_k = eval.degree_sum;
    if (m.n == 0) return m;

    std::vector<double> sum_x_part(n_chunks, 0.0);
    detail::for_each_chunk(n, kChunk, threads, [&](std::size_t c, std::size_t lo, std::size_t hi) {
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i)
            if (eval.evaluable[i]) s += x.value(i);
        sum_x_part[c] = s;
    });
    const double sum_x = std::accumulate(sum_x_part.begin(), sum_x_part.end(), 0.0);
    m.mean_x = sum_x / static_cast<double>(m.n);
    m.mean_k = static_cast<double>(m.sum_k) / static_cast<double>(m.n);

    struct Partial {
        double dk2 = 0.0, dx2 = 0.0, dkdx = 0.0, kx = 0.0;
        std::uint64_t holds = 0;
    };
    std::vector<Partial> parts(n_chunks);
    const double mean_k = m.mean_k;
    const double mean_x = m.mean_x;
    detail::for_each_chunk(n, kChunk, threads, [&](std::size_t c, std::size_t lo, std::size_t hi) {
        Partial p;
        for (std::size_t i = lo; i < hi; ++i) {
            if (!eval.evaluable[i]) continue;
            const auto node = static_cast<Graph::NodeId>(i);
            const double k = static_cast<double>(graph.degree(node));
            const double xi = x.value(i);
            const double dk = k - mean_k;
            const double dx = xi - mean_x;
            p.dk2 += dk * dk;
            p.dx2 += dx * dx;
            p.dkdx += dk * dx;
            p.kx += k * xi;
            double neighbor_sum = 0.0;
            for (const auto j : graph.neighbors(node)) neighbor_sum += x.value(j);
            if (xi * k < neighbor_sum) ++p.holds;
        }
        parts[c] = p;
    });
    for (const auto& p : parts) {
        m.var_k += p.dk2;
        m.var_x += p.dx2;
        m.cov_kx += p.dkdx;
        m.sum_kx += p.kx;
        m.holds += p.holds;
    }
    const double inv_n = 1.0 / static_cast<double>(m.n);
    m.var_k *= inv_n;
    m.var_x *= inv_n;
    m.cov_kx *= inv_n;
    return m;
}

[[noreturn]] void throw_no_evaluable() {
    throw std::domain_error("no evaluable nodes (k >= 1 with complete attribute data)");
}

// Edge-level assortativity sums, shifted by the endpoint mean for stability
// (the coefficient is translation-invariant). One pair per undirected link;
// links with a missing endpoint value are skipped.
std::optional<double> assortativity_impl(const Graph& graph, const AttributeTable& x,
                                         std::size_t* links_used = nullptr) {
    const std::size_t n = graph.node_count();
    double endpoint_sum = 0.0;
    std::size_t used = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const auto node = static_cast<Graph::NodeId>(i);
        if (x.is_missing(i)) continue;
        for (const auto j : graph.neighbors(node)) {
            if (j <= i || x.is_missing(j)) continue;
            endpoint_sum += 0.5 * (x.value(i) + x.value(j));
            ++used;
        }
    }
    if (links_used) *links_used = used;
    if (used == 0) return std::nullopt;

    const double shift = endpoint_sum / static_cast<double>(used);
    double sum_prod = 0.0, sum_mean = 0.0, sum_sq = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const auto node = static_cast<Graph::NodeId>(i);
        if (x.is_missing(i)) continue;
        const double xi = x.value(i) - shift;
        for (const auto j : graph.neighbors(node)) {
            if (j <= i || x.is_missing(j)) continue;
            const double xj = x.value(j) - shift;
            sum_prod += xi * xj;
            sum_mean += 0.5 * (xi + xj);
            sum_sq += 0.5 * (xi * xi + xj * xj);
        }
    }
    const double l = static_cast<double>(used);
    const double numerator = l * sum_prod - sum_mean * sum_mean;
    const double denominator = l * sum_sq - sum_mean * sum_mean;
    if (denominator == 0.0) return std::nullopt;
    return numerator / denominator;
}

std::size_t bin_index(const std::vector<double>& edges, double v) {
    // [e_b, e_{b+1}) bins; the last bin also takes its upper edge.
    const auto it = std::upper_bound(edges.begin(), edges.end(), v);
    std::size_t idx = static_cast<std::size_t>(it - edges.begin());
    if (idx == edges.size() && v == edges.back()) return edges.size() - 2;
    return idx - 1;
}

void check_bin_edges(const std::vector<double>& edges, const char* which) {
    if (edges.size() < 2)
        throw std::invalid_argument(std::string(which) + " bin edges: need at least two");
    for (std::size_t i = 1; i < edges.size(); ++i)
        if (!(edges[i - 1] < edges[i]))
            throw std::invalid_argument(std::string(which) +
                                        " bin edges must be strictly increasing");
}

}  // namespace

ParadoxGrid::ParadoxGrid(std::vector<double> k_edges, std::vector<double> x_edges)
    : k_edges_(std::move(k_edges)), x_edges_(std::move(x_edges)) {
    check_bin_edges(k_edges_, "k");
    check_bin_edges(x_edges_, "x");
    counts_.assign(k_bins() * x_bins(), 0);
    holds_.assign(k_bins() * x_bins(), 0);
}

std::uint64_t ParadoxGrid::total_count() const {
    return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
}

std::uint64_t ParadoxGrid::total_holds() const {
    return std::accumulate(holds_.begin(), holds_.end(), std::uint64_t{0});
}

void ParadoxGrid::merge(const ParadoxGrid& other) {
    if (other.k_edges_ != k_edges_ || other.x_edges_ != x_edges_)
        throw std::invalid_argument("ParadoxGrid::merge: bin edges differ");
    for (std::size_t i = 0; i < counts_.size(); ++i) {
        counts_[i] += other.counts_[i];
        holds_[i] += other.holds_[i];
    }
}

bool paradox_holds(const Graph& graph, const AttributeTable& x, Graph::NodeId node) {
    check_binding(graph, x);
    if (node >= graph.node_count())
        throw std::invalid_argument("paradox_holds: node id out of range");
    const auto k = graph.degree(node);
    if (k == 0) throw std::domain_error("paradox test undefined for k=0");
    if (x.is_missing(node))
        throw std::runtime_error("missing attribute value for node " + std::to_string(node));
    double neighbor_sum = 0.0;
    for (const auto j : graph.neighbors(node)) {
        if (x.is_missing(j))
            throw std::runtime_error("missing attribute value for neighbor " +
                                     std::to_string(j) + " of node " + std::to_string(node));
        neighbor_sum += x.value(j);
    }
    // strict: x_i < (sum of neighbor x) / k, ties do not hold
    return x.value(node) * static_cast<double>(k) < neighbor_sum;
}

double average_paradox_probability(const Graph& graph, const AttributeTable& x) {
    const auto eval = build_eval_mask(graph, x);
    if (eval.n_evaluated == 0) throw_no_evaluable();
    const auto m = compute_moments(graph, x, eval, 1);
    return static_cast<double>(m.holds) / static_cast<double>(m.n);
}

double pearson_degree_correlation(const Graph& graph, const AttributeTable& x) {
    const auto eval = build_eval_mask(graph, x);
    if (eval.n_evaluated == 0) throw_no_evaluable();
    const auto m = compute_moments(graph, x, eval, 1);
    if (m.var_k <= 0.0 || m.var_x <= 0.0)
        throw std::domain_error("correlation undefined: zero variance");
    return m.cov_kx / (std::sqrt(m.var_k) * std::sqrt(m.var_x));
}

double characteristic_assortativity(const Graph& graph, const AttributeTable& x) {
    check_binding(graph, x);
    if (graph.edge_count() == 0)
        throw std::domain_error("assortativity undefined: graph has no links");
    std::size_t used = 0;
    const auto r = assortativity_impl(graph, x, &used);
    if (used == 0) throw std::domain_error("assortativity undefined: no usable links");
    if (!r) throw std::domain_error("assortativity undefined: zero denominator");
    return *r;
}

double neighbor_average(const Graph& graph, const AttributeTable& x) {
    const auto eval = build_eval_mask(graph, x);
    if (eval.n_evaluated == 0) throw_no_evaluable();
    const auto m = compute_moments(graph, x, eval, 1);
    return m.sum_kx / static_cast<double>(m.sum_k);
}

ParadoxReport gfp_report(const Graph& graph, const AttributeTable& x, unsigned threads) {
    const auto eval = build_eval_mask(graph, x);
    if (eval.n_evaluated == 0) throw_no_evaluable();
    const auto m = compute_moments(graph, x, eval, threads);

    ParadoxReport report;
    report.characteristic_name = x.name();
    report.n_nodes = graph.node_count();
    report.n_edges = graph.edge_count();
    report.n_evaluated = eval.n_evaluated;
    report.excluded_isolated = eval.excluded_isolated;
    report.excluded_missing_x = eval.excluded_missing_x;
    report.excluded_missing_neighbor = eval.excluded_missing_neighbor;
    report.mean_x = m.mean_x;
    report.std_x = std::sqrt(m.var_x);
    report.mean_k = m.mean_k;
    report.std_k = std::sqrt(m.var_k);
    if (m.var_k > 0.0 && m.var_x > 0.0)
        report.rho_kx = m.cov_kx / (report.std_k * report.std_x);
    report.r_xx = assortativity_impl(graph, x);
    report.h_average = static_cast<double>(m.holds) / static_cast<double>(m.n);
    report.mean_x_nn = m.sum_kx / static_cast<double>(m.sum_k);
    report.f_gap = report.mean_x_nn - report.mean_x;
    report.gfp_network_level = report.mean_x < report.mean_x_nn;
    return report;
}

ParadoxGrid paradox_probability_grid(const Graph& graph, const AttributeTable& x,
                                     const std::vector<double>& k_bin_edges,
                                     const std::vector<double>& x_bin_edges,
                                     unsigned threads) {
    check_bin_edges(k_bin_edges, "k");
    check_bin_edges(x_bin_edges, "x");
    const auto eval = build_eval_mask(graph, x);
    if (eval.n_evaluated == 0) throw_no_evaluable();

    const std::size_t n = graph.node_count();
    double min_k = 0, max_k = 0, min_x = 0, max_x = 0;
    bool first = true;
    for (std::size_t i = 0; i < n; ++i) {
        if (!eval.evaluable[i]) continue;
        const double k = static_cast<double>(graph.degree(static_cast<Graph::NodeId>(i)));
        const double xi = x.value(i);
        if (first) {
            min_k = max_k = k;
            min_x = max_x = xi;
            first = false;
        } else {
            min_k = std::min(min_k, k);
            max_k = std::max(max_k, k);
            min_x = std::min(min_x, xi);
            max_x = std::max(max_x, xi);
        }
    }
    if (min_k < k_bin_edges.front() || max_k > k_bin_edges.back())
        throw std::invalid_argument("k bin edges do not cover observed degrees");
    if (min_x < x_bin_edges.front() || max_x > x_bin_edges.back())
        throw std::invalid_argument("x bin edges do not cover observed values");

    auto fill = [&](ParadoxGrid& grid, std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            if (!eval.evaluable[i]) continue;
            const auto node = static_cast<Graph::NodeId>(i);
            const double k = static_cast<double>(graph.degree(node));
            const double xi = x.value(i);
            double neighbor_sum = 0.0;
            for (const auto j : graph.neighbors(node)) neighbor_sum += x.value(j);
            const bool held = xi * k < neighbor_sum;
            grid.add(bin_index(k_bin_edges, k), bin_index(x_bin_edges, xi), held);
        }
    };

    ParadoxGrid grid(k_bin_edges, x_bin_edges);
    const std::size_t n_chunks = (n + kChunk - 1) / kChunk;
    const std::size_t cells = grid.k_bins() * grid.x_bins();
    // Counts are integers, so merge order cannot change the result; the
    // per-chunk copies only pay off while they stay small.
    if (detail::resolve_threads(threads) > 1 && n_chunks > 1 && n_chunks * cells <= (1u << 22)) {
        std::vector<ParadoxGrid> parts(n_chunks, grid);
        detail::for_each_chunk(n, kChunk, threads,
                               [&](std::size_t c, std::size_t lo, std::size_t hi) {
                                   fill(parts[c], lo, hi);
                               });
        for (const auto& part : parts) grid.merge(part);
    } else {
        fill(grid, 0, n);
    }
    return grid;
}

std::vector<double> default_bin_edges(std::span<const double> values, BinPolicy policy) {
    if (values.empty()) throw std::invalid_argument("default_bin_edges: no values");
    double min_v = values[0], max_v = values[0];
    for (const double v : values) {
        min_v = std::min(min_v, v);
        max_v = std::max(max_v, v);
    }

    std::vector<double> edges;
    if (policy == BinPolicy::Unit) {
        const double lo = std::floor(min_v);
        const double hi = std::floor(max_v) + 1.0;
        if (hi - lo > 4e6)
            throw std::invalid_argument("unit binning would create over 4e6 bins; use log2");
        for (double e = lo; e <= hi; e += 1.0) edges.push_back(e);
        return edges;
    }

    // Log2: powers of two, with a catch-all first bin when values go below 1.
    double next_pow = 1.0;
    if (min_v < 1.0) {
        edges.push_back(min_v);
    } else {
        next_pow = std::exp2(std::floor(std::log2(min_v)));
    }
    for (;;) {
        edges.push_back(next_pow);
        if (next_pow >= max_v) break;
        next_pow *= 2.0;
    }
    if (edges.size() < 2) edges.push_back(next_pow * 2.0);
    return edges;
}

std::string report_to_json(const ParadoxReport& report) {
    nlohmann::json doc;
    doc["characteristic"] = report.characteristic_name;
    doc["n_nodes"] = report.n_nodes;
    doc["n_edges"] = report.n_edges;
    doc["n_evaluated"] = report.n_evaluated;
    doc["excluded_isolated"] = report.excluded_isolated;
    doc["excluded_missing_x"] = report.excluded_missing_x;
    doc["excluded_missing_neighbor"] = report.excluded_missing_neighbor;
    doc["mean_x"] = report.mean_x;
    doc["std_x"] = report.std_x;
    doc["mean_k"] = report.mean_k;
    doc["std_k"] = report.std_k;
    if (report.rho_kx)
        doc["rho_kx"] = *report.rho_kx;
    else
        doc["rho_kx"] = nullptr;
    if (report.r_xx)
        doc["r_xx"] = *report.r_xx;
    else
        doc["r_xx"] = nullptr;
    doc["H"] = report.h_average;
    doc["mean_x_nn"] = report.mean_x_nn;
    doc["F"] = report.f_gap;
    doc["gfp_network_level"] = report.gfp_network_level;
    return doc.dump(2) + "\n";
}

void write_grid_csv(std::ostream& out, const ParadoxGrid& grid) {
    out << "k_bin_lo,k_bin_hi,x_bin_lo,x_bin_hi,count,holds,h\n";
    const auto& ke = grid.k_edges();
    const auto& xe = grid.x_edges();
    for (std::size_t kb = 0; kb < grid.k_bins(); ++kb) {
        for (std::size_t xb = 0; xb < grid.x_bins(); ++xb) {
            const auto c = grid.count(kb, xb);
            if (c == 0) continue;
            const auto h = grid.h(kb, xb);
            out << detail::format_double(ke[kb]) << ',' << detail::format_double(ke[kb + 1])
                << ',' << detail::format_double(xe[xb]) << ',' << detail::format_double(xe[xb + 1])
                << ',' << c << ',' << grid.holds(kb, xb) << ',' << detail::format_double(*h)
                << '\n';
        }
    }
}

}  // namespace gfp
