#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "gfp/attributes.hpp"
#include "gfp/graph.hpp"

namespace gfp {

// Friendship-paradox statistics for one (graph, characteristic) pair.
//
// A node is *evaluated* when k >= 1, its own x is present, and all of its
// neighbors' x are present; the per-node paradox test is undefined otherwise.
// Every statistic below (including the moments feeding rho_kx and F) runs
// over this one evaluated set, which keeps the gap identity
// F = rho_kx * sigma_k * sigma_x / <k> exact. All moments are population
// moments (1/n).

struct ParadoxReport {
    std::string characteristic_name;
    std::size_t n_nodes = 0;       // graph size N, exclusions included
    std::size_t n_edges = 0;
    std::size_t n_evaluated = 0;
    std::size_t excluded_isolated = 0;          // k == 0
    std::size_t excluded_missing_x = 0;         // k >= 1, own x missing
    std::size_t excluded_missing_neighbor = 0;  // k >= 1, a neighbor's x missing

    double mean_x = 0.0;
    double std_x = 0.0;
    double mean_k = 0.0;
    double std_k = 0.0;
    std::optional<double> rho_kx;  // absent when sigma_k or sigma_x is 0
    std::optional<double> r_xx;    // absent when the assortativity denominator is 0
    double h_average = 0.0;        // H: fraction of evaluated nodes holding the paradox
    double mean_x_nn = 0.0;        // degree-weighted mean of x
    double f_gap = 0.0;            // F = mean_x_nn - mean_x
    bool gfp_network_level = false;  // mean_x < mean_x_nn
};

/// Binned paradox-holding probability h(k, x) with the joint (k, x) counts.
/// Bin b spans [edges[b], edges[b+1]); the last bin includes its upper edge.
/// Empty bins have undefined h (nullopt), not zero.
class ParadoxGrid {
public:
    ParadoxGrid(std::vector<double> k_edges, std::vector<double> x_edges);

    std::size_t k_bins() const { return k_edges_.size() - 1; }
    std::size_t x_bins() const { return x_edges_.size() - 1; }
    const std::vector<double>& k_edges() const { return k_edges_; }
    const std::vector<double>& x_edges() const { return x_edges_; }

    std::uint64_t count(std::size_t kb, std::size_t xb) const { return counts_[index(kb, xb)]; }
    std::uint64_t holds(std::size_t kb, std::size_t xb) const { return holds_[index(kb, xb)]; }

    std::optional<double> h(std::size_t kb, std::size_t xb) const {
        const auto c = counts_[index(kb, xb)];
        if (c == 0) return std::nullopt;
        return static_cast<double>(holds_[index(kb, xb)]) / static_cast<double>(c);
    }

    std::uint64_t total_count() const;
    std::uint64_t total_holds() const;

    void add(std::size_t kb, std::size_t xb, bool held) {
        ++counts_[index(kb, xb)];
        if (held) ++holds_[index(kb, xb)];
    }

    void merge(const ParadoxGrid& other);

private:
    std::size_t index(std::size_t kb, std::size_t xb) const { return kb * x_bins() + xb; }

    std::vector<double> k_edges_;
    std::vector<double> x_edges_;
    std::vector<std::uint64_t> counts_;
    std::vector<std::uint64_t> holds_;
};

/// Per-node paradox test: true iff x_i is strictly below the mean x of i's
/// neighbors. Throws std::domain_error for k == 0 and std::runtime_error
/// (naming the node) when a needed attribute is missing.
bool paradox_holds(const Graph& graph, const AttributeTable& x, Graph::NodeId node);

/// H: fraction of evaluated nodes for which the paradox holds (bin-free).
/// Throws std::domain_error when no node is evaluable.
double average_paradox_probability(const Graph& graph, const AttributeTable& x);

/// Pearson correlation between degree and x over evaluated nodes, population
/// moments. Throws std::domain_error when either variance is zero.
double pearson_degree_correlation(const Graph& graph, const AttributeTable& x);

/// Characteristic assortativity: edge-level correlation of x across link
/// endpoints, one (x_l, x'_l) pair per undirected link (the formula is
/// endpoint-symmetric). Links with a missing endpoint value are skipped.
/// Throws std::domain_error when no link is usable or the denominator is 0.
double characteristic_assortativity(const Graph& graph, const AttributeTable& x);

/// Degree-weighted neighbor average: sum(k_i x_i) / sum(k_i) over evaluated
/// nodes — each node counted once per incident edge. Throws std::domain_error
/// on an edgeless (evaluated) set.
double neighbor_average(const Graph& graph, const AttributeTable& x);

/// Full report. Sub-statistics that are undefined (zero variance, degenerate
/// assortativity denominator) are recorded as absent rather than failing the
/// report; an empty evaluated set throws. threads = 0 uses all hardware
/// threads; results are identical for every thread count.
ParadoxReport gfp_report(const Graph& graph, const AttributeTable& x,
                         unsigned threads = 0);

/// h(k, x) over explicit bin edges (strictly increasing, covering the
/// evaluated nodes' values). Throws std::invalid_argument otherwise.
ParadoxGrid paradox_probability_grid(const Graph& graph, const AttributeTable& x,
                                     const std::vector<double>& k_bin_edges,
                                     const std::vector<double>& x_bin_edges,
                                     unsigned threads = 0);

enum class BinPolicy { Log2, Unit };

/// Covering bin edges for the given values: powers of two for Log2 (with a
/// catch-all first bin when values drop below 1), integer-width bins for
/// Unit. values must be non-empty.
std::vector<double> default_bin_edges(std::span<const double> values, BinPolicy policy);

/// Report as a JSON document (stable key order, round-trip precision).
std::string report_to_json(const ParadoxReport& report);

/// Grid as CSV: k_bin_lo,k_bin_hi,x_bin_lo,x_bin_hi,count,holds,h.
/// Empty bins are omitted.
void write_grid_csv(std::ostream& out, const ParadoxGrid& grid);

}  // namespace gfp
