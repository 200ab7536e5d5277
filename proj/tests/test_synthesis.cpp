#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "gfp/metrics.hpp"
#include "gfp/synthesis.hpp"
#include "helpers.hpp"

using namespace gfp;

TEST_CASE("rho = 1 returns the degree vector exactly") {
    const auto g = barabasi_albert({300, 2}, 1);
    const auto x = synthesize_correlated(g, {1.0, 5, std::nullopt});
    for (std::size_t i = 0; i < g.node_count(); ++i)
        CHECK(x.value(i) == static_cast<double>(g.degree(static_cast<Graph::NodeId>(i))));
    CHECK(pearson_degree_correlation(g, x) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("rho = 0 permutes the degrees; the measured correlation shrinks with N") {
    double small_abs = 0.0, large_abs = 0.0;
    const int seeds = 5;
    for (std::uint64_t s = 0; s < seeds; ++s) {
        const auto small = barabasi_albert({1000, 3}, 10 + s);
        const auto xs = synthesize_correlated(small, {0.0, s, std::nullopt});
        auto sorted_x = xs.values();
        std::sort(sorted_x.begin(), sorted_x.end());
        std::vector<double> sorted_k(small.node_count());
        for (std::size_t i = 0; i < small.node_count(); ++i)
            sorted_k[i] = static_cast<double>(small.degree(static_cast<Graph::NodeId>(i)));
        std::sort(sorted_k.begin(), sorted_k.end());
        CHECK(sorted_x == sorted_k);  // exactly a permutation of the degrees
        small_abs += std::abs(pearson_degree_correlation(small, xs));

        const auto large = barabasi_albert({100000, 3}, 20 + s);
        const auto xl = synthesize_correlated(large, {0.0, s, std::nullopt});
        large_abs += std::abs(pearson_degree_correlation(large, xl));
    }
    CHECK(small_abs / seeds < 0.15);
    CHECK(large_abs / seeds < 0.02);
    CHECK(large_abs < small_abs);
}

TEST_CASE("the permutation preserves the mean identity") {
    const auto g = barabasi_albert({5000, 3}, 3);
    double mean_k = 0.0;
    for (std::size_t i = 0; i < g.node_count(); ++i)
        mean_k += static_cast<double>(g.degree(static_cast<Graph::NodeId>(i)));
    mean_k /= static_cast<double>(g.node_count());

    for (const double rho : {-0.7, 0.0, 0.3, 0.9}) {
        const auto x = synthesize_correlated(g, {rho, 11, std::nullopt});
        double mean_x = 0.0;
        for (std::size_t i = 0; i < g.node_count(); ++i) mean_x += x.value(i);
        mean_x /= static_cast<double>(g.node_count());
        const double expected = (rho + std::sqrt(1.0 - rho * rho)) * mean_k;
        CHECK(std::abs(mean_x - expected) <= 1e-12 * std::max(1.0, std::abs(expected)));
    }
}

TEST_CASE("the synthesized spread stays close to the degree spread") {
    const auto g = barabasi_albert({10000, 3}, 17);
    const auto base_report = gfp_report(g, degree_attribute(g));
    for (std::uint64_t s = 0; s < 5; ++s) {
        const auto x = synthesize_correlated(g, {0.5, s, std::nullopt});
        const auto report = gfp_report(g, x);
        CHECK(report.std_x == doctest::Approx(base_report.std_k).epsilon(0.05));
    }
}

TEST_CASE("measured correlation is monotone in the requested one") {
    const auto g = barabasi_albert({20000, 3}, 23);
    double previous = -2.0;
    for (const double rho : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        double mean_measured = 0.0;
        for (std::uint64_t s = 0; s < 10; ++s) {
            const auto x = synthesize_correlated(g, {rho, s, std::nullopt});
            mean_measured += pearson_degree_correlation(g, x);
        }
        mean_measured /= 10.0;
        CHECK(mean_measured > previous);
        CHECK(mean_measured == doctest::Approx(rho).epsilon(0.15));
        previous = mean_measured;
    }
}

TEST_CASE("negative correlation flips the network-level paradox") {
    const auto g = barabasi_albert({5000, 3}, 29);
    const auto x = synthesize_correlated(g, {-0.5, 1, std::nullopt});
    const auto report = gfp_report(g, x);
    REQUIRE(report.rho_kx.has_value());
    CHECK(*report.rho_kx < -0.3);
    CHECK(!report.gfp_network_level);
    CHECK(report.f_gap < 0.0);
}

TEST_CASE("synthesis guards") {
    const auto regular = test::ring(10);
    CHECK_THROWS_AS(synthesize_correlated(regular, {0.5, 1, std::nullopt}), std::domain_error);

    const auto g = test::star4();
    CHECK_THROWS_AS(synthesize_correlated(g, {1.5, 1, std::nullopt}), std::invalid_argument);
    CHECK_THROWS_AS(synthesize_correlated(g, {std::nan(""), 1, std::nullopt}),
                    std::invalid_argument);

    const auto tiny = build_graph({}, {0}).graph;
    CHECK_THROWS_AS(synthesize_correlated(tiny, {0.5, 1, std::nullopt}), std::invalid_argument);
}

TEST_CASE("an explicit base vector replaces the degrees") {
    const auto g = test::star4();
    const std::vector<double> base{10.0, 20.0, 30.0, 40.0};
    const auto x = synthesize_correlated(g, {1.0, 2, base});
    for (std::size_t i = 0; i < 4; ++i) CHECK(x.value(i) == base[i]);
    CHECK(x.name() == "X_rho_1_seed_2");
}

TEST_CASE("synthesized names carry rho and seed") {
    const auto g = barabasi_albert({100, 2}, 7);
    CHECK(synthesize_correlated(g, {0.5, 1, std::nullopt}).name() == "X_rho_0.5_seed_1");
    CHECK(synthesize_correlated(g, {-0.25, 42, std::nullopt}).name() == "X_rho_-0.25_seed_42");
}

TEST_CASE("erdos_renyi: degenerate probabilities and determinism") {
    const auto empty = erdos_renyi({100, 0.0}, 1);
    CHECK(empty.node_count() == 100);
    CHECK(empty.edge_count() == 0);

    const auto complete = erdos_renyi({20, 1.0}, 1);
    CHECK(complete.edge_count() == 190);

    const auto a = erdos_renyi({500, 0.02}, 33);
    const auto b = erdos_renyi({500, 0.02}, 33);
    CHECK(test::same_graph(a, b));
    const auto c = erdos_renyi({500, 0.02}, 34);
    CHECK(!test::same_graph(a, c));

    // edge count near n(n-1)p/2 = 2495
    CHECK(a.edge_count() > 2000);
    CHECK(a.edge_count() < 3000);

    CHECK_THROWS_AS(erdos_renyi({0, 0.5}, 1), std::invalid_argument);
    CHECK_THROWS_AS(erdos_renyi({10, 1.5}, 1), std::invalid_argument);
}

TEST_CASE("barabasi_albert: edge count law and heavy tail") {
    const auto g = barabasi_albert({10000, 3}, 55);
    CHECK(g.edge_count() == 3 + 3 * (10000 - 3));

    const auto report = gfp_report(g, degree_attribute(g));
    CHECK(report.std_k / report.mean_k > 1.0);  // heterogeneous degrees

    const auto small = barabasi_albert({50, 1}, 2);
    CHECK(small.edge_count() == 3 + (50 - 3));

    // m > 3 starts from an m-clique
    const auto wide = barabasi_albert({100, 5}, 3);
    CHECK(wide.edge_count() == 10 + 5 * (100 - 5));

    CHECK_THROWS_AS(barabasi_albert({3, 3}, 1), std::invalid_argument);
    CHECK_THROWS_AS(barabasi_albert({100, 0}, 1), std::invalid_argument);
}

TEST_CASE("configuration model reproduces a degree multiset") {
    const auto source = barabasi_albert({200, 2}, 8);
    auto want = source.degree_sequence();
    ConfigurationReport report;
    const auto g = configuration_model({want}, 99, &report);
    auto got = g.degree_sequence();
    std::sort(want.begin(), want.end());
    std::sort(got.begin(), got.end());
    CHECK(report.dropped == 0);
    CHECK(want == got);

    const auto again = configuration_model({source.degree_sequence()}, 99);
    CHECK(test::same_graph(g, again));
}

TEST_CASE("configuration model guards") {
    CHECK_THROWS_WITH_AS(configuration_model({{1, 1, 1}}, 1), doctest::Contains("odd"),
                         std::invalid_argument);
    CHECK_THROWS_AS(configuration_model({{5, 1, 1, 1}}, 1), std::invalid_argument);
    CHECK_THROWS_AS(configuration_model({{}}, 1), std::invalid_argument);
}

TEST_CASE("generate_graph dispatches on the model") {
    const auto er = generate_graph(ErdosRenyiParams{50, 0.1}, 3);
    CHECK(er.node_count() == 50);
    const auto ba = generate_graph(BarabasiAlbertParams{50, 2}, 3);
    CHECK(ba.edge_count() == 3 + 2 * 47);
    const auto cm = generate_graph(ConfigurationParams{{1, 1}}, 3);
    CHECK(cm.edge_count() == 1);
}
