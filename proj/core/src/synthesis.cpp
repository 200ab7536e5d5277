#include "gfp/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include "detail/format.hpp"
#include "gfp/random.hpp"

namespace gfp {

namespace {

bool has_variance(std::span<const double> v) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] != v[0]) return true;
    return false;
}

std::string synth_name(double rho, std::uint64_t seed) {
    return "X_rho_" + detail::format_double(rho) + "_seed_" + std::to_string(seed);
}

// Pack an undirected edge (a < b) into one key for the dedup set.
std::uint64_t edge_key(std::uint64_t a, std::uint64_t b) { return (a << 32) | b; }

}  // namespace

AttributeTable synthesize_correlated(const Graph& graph, const SynthesisSpec& spec) {
    if (!(std::abs(spec.rho) <= 1.0))
        throw std::invalid_argument("synthesize_correlated: |rho| must be <= 1");
    const std::size_t n = graph.node_count();
    if (n < 2) throw std::invalid_argument("synthesize_correlated: need at least 2 nodes");

    std::vector<double> base;
    if (spec.base) {
        base = *spec.base;
        if (base.size() != n)
            throw std::invalid_argument("synthesize_correlated: base vector length mismatch");
    } else {
        base.resize(n);
        for (std::size_t i = 0; i < n; ++i)
            base[i] = static_cast<double>(graph.degree(static_cast<Graph::NodeId>(i)));
    }
    if (!has_variance(base))
        throw std::domain_error("synthesize_correlated: base vector has zero variance");

    std::vector<double> shuffled = base;
    Rng rng(spec.seed);
    rng.shuffle(shuffled);

    const double rho = spec.rho;
    const double noise_weight = std::sqrt(1.0 - rho * rho);
    std::vector<double> values(n);
    for (std::size_t i = 0; i < n; ++i) values[i] = rho * base[i] + noise_weight * shuffled[i];
    return AttributeTable(synth_name(rho, spec.seed), std::move(values));
}

Graph erdos_renyi(const ErdosRenyiParams& params, std::uint64_t seed) {
    if (params.n == 0) throw std::invalid_argument("erdos_renyi: n must be >= 1");
    if (!(params.p >= 0.0 && params.p <= 1.0))
        throw std::invalid_argument("erdos_renyi: p must be in [0, 1]");

    const std::int64_t n = static_cast<std::int64_t>(params.n);
    std::vector<std::int64_t> all_nodes(params.n);
    for (std::int64_t i = 0; i < n; ++i) all_nodes[i] = i;

    std::vector<RawEdge> edges;
    if (params.p >= 1.0) {
        edges.reserve(params.n * (params.n - 1) / 2);
        for (std::int64_t v = 1; v < n; ++v)
            for (std::int64_t w = 0; w < v; ++w) edges.emplace_back(v, w);
    } else if (params.p > 0.0) {
        // geometric skips through the pair sequence, O(N + L)
        Rng rng(seed);
        const double log_q = std::log(1.0 - params.p);
        std::int64_t v = 1, w = -1;
        while (v < n) {
            const double r = rng.unit();
            w += 1 + static_cast<std::int64_t>(std::floor(std::log(1.0 - r) / log_q));
            while (w >= v && v < n) {
                w -= v;
                ++v;
            }
            if (v < n) edges.emplace_back(v, w);
        }
    }
    return build_graph(edges, all_nodes).graph;
}

Graph barabasi_albert(const BarabasiAlbertParams& params, std::uint64_t seed) {
    if (params.m < 1) throw std::invalid_argument("barabasi_albert: m must be >= 1");
    const std::size_t seed_size = std::max<std::size_t>(3, params.m);
    if (params.n <= seed_size)
        throw std::invalid_argument("barabasi_albert: n must exceed the seed clique of " +
                                    std::to_string(seed_size));

    std::vector<RawEdge> edges;
    edges.reserve(seed_size * (seed_size - 1) / 2 + params.m * (params.n - seed_size));
    // endpoint multiset: picking a uniform entry is degree-proportional
    std::vector<std::int64_t> endpoints;
    endpoints.reserve(2 * edges.capacity());
    for (std::size_t a = 0; a < seed_size; ++a) {
        for (std::size_t b = a + 1; b < seed_size; ++b) {
            edges.emplace_back(a, b);
            endpoints.push_back(static_cast<std::int64_t>(a));
            endpoints.push_back(static_cast<std::int64_t>(b));
        }
    }

    Rng rng(seed);
    std::vector<std::int64_t> targets;
    targets.reserve(params.m);
    for (std::size_t v = seed_size; v < params.n; ++v) {
        targets.clear();
        while (targets.size() < params.m) {
            const auto t = endpoints[static_cast<std::size_t>(rng.below(endpoints.size()))];
            if (std::find(targets.begin(), targets.end(), t) == targets.end())
                targets.push_back(t);
        }
        for (const auto t : targets) {
            edges.emplace_back(static_cast<std::int64_t>(v), t);
            endpoints.push_back(t);
            endpoints.push_back(static_cast<std::int64_t>(v));
        }
    }
    return build_graph(edges).graph;
}

Graph configuration_model(const ConfigurationParams& params, std::uint64_t seed,
                          ConfigurationReport* report) {
    const std::size_t n = params.degrees.size();
    if (n == 0) throw std::invalid_argument("configuration_model: empty degree sequence");

    std::uint64_t degree_sum = 0;
    for (const auto k : params.degrees) {
        if (k >= n)
            throw std::invalid_argument("configuration_model: degree " + std::to_string(k) +
                                        " impossible in a simple graph of " + std::to_string(n) +
                                        " nodes");
        degree_sum += k;
    }
    if (degree_sum % 2 != 0)
        throw std::invalid_argument("configuration_model: degree sum is odd, stubs cannot pair");

    std::vector<std::uint32_t> stubs;
    stubs.reserve(degree_sum);
    for (std::size_t i = 0; i < n; ++i)
        for (std::uint32_t c = 0; c < params.degrees[i]; ++c)
            stubs.push_back(static_cast<std::uint32_t>(i));

    Rng rng(seed);
    rng.shuffle(stubs);

    ConfigurationReport stats;
    std::unordered_set<std::uint64_t> present;
    present.reserve(degree_sum);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> good;  // authoritative edge order
    std::vector<std::pair<std::uint32_t, std::uint32_t>> bad;
    good.reserve(degree_sum / 2);
    for (std::size_t t = 0; t + 1 < stubs.size(); t += 2) {
        auto a = stubs[t], b = stubs[t + 1];
        if (a > b) std::swap(a, b);
        if (a == b) {
            ++stats.initial_self_loops;
            bad.emplace_back(a, b);
        } else if (!present.insert(edge_key(a, b)).second) {
            ++stats.initial_duplicates;
            bad.emplace_back(a, b);
        } else {
            good.emplace_back(a, b);
        }
    }

    // Repair by swapping endpoints with a random clean edge: (a,b)+(c,d) ->
    // (a,c)+(b,d) or (a,d)+(b,c). Degrees are preserved; a candidate is
    // accepted only if both new edges are simple and unused.
    std::size_t attempts = 0;
    const std::size_t attempt_cap = 1000 + 200 * bad.size();
    while (!bad.empty() && !good.empty() && attempts < attempt_cap) {
        ++attempts;
        const auto [a, b] = bad.back();
        const std::size_t gi = static_cast<std::size_t>(rng.below(good.size()));
        const auto [c, d] = good[gi];

        auto order = [](std::uint32_t x, std::uint32_t y) {
            return x < y ? std::make_pair(x, y) : std::make_pair(y, x);
        };
        const auto [p, q] = rng.coin() ? std::make_pair(std::make_pair(a, c), std::make_pair(b, d))
                                       : std::make_pair(std::make_pair(a, d), std::make_pair(b, c));
        const auto e1 = order(p.first, p.second);
        const auto e2 = order(q.first, q.second);
        if (p.first == p.second || q.first == q.second || e1 == e2) continue;

        present.erase(edge_key(c, d));
        if (present.contains(edge_key(e1.first, e1.second)) ||
            present.contains(edge_key(e2.first, e2.second))) {
            present.insert(edge_key(c, d));
            continue;
        }
        present.insert(edge_key(e1.first, e1.second));
        present.insert(edge_key(e2.first, e2.second));
        good[gi] = e1;
        good.push_back(e2);
        bad.pop_back();
        ++stats.rewired;
    }
    stats.dropped = bad.size();

    std::vector<RawEdge> edges;
    edges.reserve(good.size());
    for (const auto& [a, b] : good) edges.emplace_back(a, b);
    std::vector<std::int64_t> all_nodes(n);
    for (std::size_t i = 0; i < n; ++i) all_nodes[i] = static_cast<std::int64_t>(i);

    if (report) *report = stats;
    return build_graph(edges, all_nodes).graph;
}

Graph generate_graph(const GraphModelParams& params, std::uint64_t seed) {
    return std::visit(
        [seed](const auto& p) -> Graph {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, ErdosRenyiParams>)
                return erdos_renyi(p, seed);
            else if constexpr (std::is_same_v<T, BarabasiAlbertParams>)
                return barabasi_albert(p, seed);
            else
                return configuration_model(p, seed);
        },
        params);
}

}  // namespace gfp
