#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "gfp/attributes.hpp"
#include "gfp/graph.hpp"

namespace gfp {

/// Controlled-correlation characteristic synthesis:
///   X_i = rho * y_i + sqrt(1 - rho^2) * z_i
/// where y is the base vector (the degree sequence unless overridden) and z
/// is a uniform random permutation of y. The measured correlation between X
/// and the base concentrates on rho as N grows.
struct SynthesisSpec {
    double rho = 0.0;                          // target correlation, |rho| <= 1
    std::uint64_t seed = 0;
    std::optional<std::vector<double>> base;   // defaults to degrees
};

/// Returns the synthesized table, named X_rho_<rho>_seed_<seed>.
/// Throws std::invalid_argument for |rho| > 1 or N < 2, std::domain_error
/// when the base vector has zero variance (e.g. a regular graph).
AttributeTable synthesize_correlated(const Graph& graph, const SynthesisSpec& spec);

// Random-graph generators for validation experiments. All are deterministic
// under their seed and produce canonical simple graphs.

struct ErdosRenyiParams {
    std::size_t n = 0;
    double p = 0.0;
};

struct BarabasiAlbertParams {
    std::size_t n = 0;
    std::size_t m = 1;  // edges per new node
};

struct ConfigurationParams {
    std::vector<std::uint32_t> degrees;
};

/// Leftovers of the configuration-model cleanup: stub pairings that produced
/// self-loops or duplicate edges are repaired by random edge rewiring; what
/// still violates after the retry cap is dropped.
struct ConfigurationReport {
    std::size_t initial_self_loops = 0;
    std::size_t initial_duplicates = 0;
    std::size_t rewired = 0;
    std::size_t dropped = 0;
};

Graph erdos_renyi(const ErdosRenyiParams& params, std::uint64_t seed);

/// Preferential attachment from a complete seed graph on max(3, m) nodes;
/// each new node attaches to m distinct degree-proportional targets.
/// For m <= 3 the seed is a triangle and L = 3 + m * (n - 3).
Graph barabasi_albert(const BarabasiAlbertParams& params, std::uint64_t seed);

Graph configuration_model(const ConfigurationParams& params, std::uint64_t seed,
                          ConfigurationReport* report = nullptr);

using GraphModelParams =
    std::variant<ErdosRenyiParams, BarabasiAlbertParams, ConfigurationParams>;

Graph generate_graph(const GraphModelParams& params, std::uint64_t seed);

}  // namespace gfp
