#include <doctest.h>

#include <hypermatch/constructions.hpp>
#include <hypermatch/random_graphs.hpp>
#include <hypermatch/rootfind.hpp>
#include <hypermatch/tensor.hpp>

#include <cmath>

using namespace hypermatch;

TEST_CASE("tensor apply on fixed instances") {
    Hypergraph e = Hypergraph::make(3, 3, {{0, 1, 2}});
    auto y = tensor_apply(e, {1.0, 1.0, 1.0});
    CHECK(y == std::vector<double>{1.0, 1.0, 1.0});

    Hypergraph star = k_star(3, 4);
    std::vector<double> ones(star.n, 1.0);
    auto ys = tensor_apply(star, ones);
    CHECK(ys[0] == 4.0);
    for (int v = 1; v < star.n; ++v) CHECK(ys[v] == 1.0);

    CHECK_THROWS_AS(tensor_apply(star, {1.0}), DimensionMismatch);
}

TEST_CASE("k=2 tensor apply is the adjacency product") {
    Rng rng(2424);
    for (int it = 0; it < 20; ++it) {
        std::uniform_int_distribution<int> pick_m(1, 8);
        Hypergraph g = random_kgraph(2, 6, pick_m(rng), rng);
        std::uniform_real_distribution<double> val(0.2, 2.0);
        std::vector<double> x(g.n);
        for (auto& xi : x) xi = val(rng);
        auto y = tensor_apply(g, x);
        // direct matrix product
        for (VertexId v = 0; v < g.n; ++v) {
            double expect = 0;
            for (const auto& e : g.edges) {
                if (e[0] == v) expect += x[e[1]];
                if (e[1] == v) expect += x[e[0]];
            }
            CHECK(y[v] == doctest::Approx(expect).epsilon(1e-12));
        }
    }
}

TEST_CASE("spectral radius on known instances") {
    PerronEstimate one = spectral_radius(Hypergraph::make(3, 3, {{0, 1, 2}}));
    CHECK(one.value == doctest::Approx(1.0).epsilon(1e-9));

    for (int k : {2, 3, 4})
        for (int m : {2, 3, 5}) {
            PerronEstimate pe = spectral_radius(k_star(k, m));
            CHECK(pe.value ==
                  doctest::Approx(std::pow(m, 1.0 / k)).epsilon(1e-9));
            CHECK(pe.bracket_lo <= pe.value);
            CHECK(pe.value <= pe.bracket_hi);
        }

    PerronEstimate tri = spectral_radius(k_cycle(2, 3));
    CHECK(tri.value == doctest::Approx(2.0).epsilon(1e-9));

    CHECK_THROWS_AS(spectral_radius(Hypergraph::make(3, 6, {{0, 1, 2}, {3, 4, 5}})),
                    NotConnected);
    CHECK_THROWS_AS(spectral_radius(Hypergraph{3, 1, {}}), NoEdges);
}

TEST_CASE("positive Perron vector and small residual") {
    Rng rng(2525);
    for (int it = 0; it < 15; ++it) {
        std::uniform_int_distribution<int> pick_k(2, 4), pick_m(1, 5);
        int k = pick_k(rng);
        Hypergraph h = random_connected_kgraph(k, pick_m(rng), rng);
        PerronEstimate pe = spectral_radius(h, 1e-11, 500000);
        for (double x : pe.vector) CHECK(x > 0.0);
        CHECK(pe.residual < 1e-8);
        CHECK(pe.bracket_hi - pe.bracket_lo < 1e-10);
    }
}

TEST_CASE("k-trees: spectral radius equals the largest matching root") {
    Rng rng(2626);
    for (int it = 0; it < 25; ++it) {
        std::uniform_int_distribution<int> pick_k(2, 4), pick_m(1, 6);
        int k = pick_k(rng);
        Hypergraph t = random_ktree(k, pick_m(rng), rng);
        double lambda = largest_matching_root(t).lambda_approx();
        PerronEstimate pe = spectral_radius(t, 1e-10, 500000);
        CHECK(std::abs(pe.value - lambda) < 1e-6);
    }
}

TEST_CASE("serial and parallel apply agree exactly") {
    Rng rng(2727);
    Hypergraph h = random_connected_kgraph(3, 6, rng);
    std::uniform_real_distribution<double> val(0.3, 1.5);
    std::vector<double> x(h.n);
    for (auto& xi : x) xi = val(rng);
    CHECK(tensor_apply(h, x) == tensor_apply_serial(h, x));
}
