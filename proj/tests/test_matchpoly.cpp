#include <doctest.h>

#include <hypermatch/constructions.hpp>
#include <hypermatch/matchpoly.hpp>
#include <hypermatch/random_graphs.hpp>
#include <hypermatch/rootfind.hpp>

using namespace hypermatch;

namespace {

Hypergraph remark_graph() {
    return Hypergraph::make(3, 5, {{0, 1, 2}, {0, 1, 3}, {0, 2, 4}});
}

// 2-cycle with one pendant edge at a degree-one cycle vertex
Hypergraph cactus_Gprime(int k) {
    Hypergraph cyc = k_cycle(k, 2);
    // vertex 2 is a degree-one vertex of the first edge
    std::vector<Edge> es = cyc.edges;
    Edge pend{2};
    int next = cyc.n;
    for (int j = 0; j < k - 1; ++j) pend.push_back(next++);
    es.push_back(pend);
    return Hypergraph::make(k, next, std::move(es));
}

std::vector<Int> ints(std::vector<long> v) {
    return std::vector<Int>(v.begin(), v.end());
}

} // namespace

TEST_CASE("oracle on fixed instances") {
    CHECK(matching_counts_oracle(Hypergraph::make(3, 3, {{0, 1, 2}})).counts ==
          ints({1, 1}));
    CHECK(matching_counts_oracle(Hypergraph::make(3, 6, {{0, 1, 2}, {3, 4, 5}}))
              .counts == ints({1, 2, 1}));
    CHECK(matching_counts_oracle(remark_graph()).counts == ints({1, 3}));
    CHECK(matching_counts_oracle(Hypergraph{3, 5, {}}).counts == ints({1}));
}

TEST_CASE("recurrence counts on the extremal pair") {
    CHECK(matching_counts(extremal_H(3, 3, 1)).counts == ints({1, 3}));
    CHECK(matching_counts(cactus_Gprime(3)).counts == ints({1, 3, 1}));
    CHECK(matching_counts(Hypergraph{3, 5, {}}).counts == ints({1}));
}

TEST_CASE("matching polynomial layout") {
    SignedPolynomial mu = matching_polynomial(remark_graph());
    CHECK(mu.coeff(5) == 1);
    CHECK(mu.coeff(2) == -3);
    CHECK(mu.degree() == 5);
    CHECK(mu.terms().size() == 2);

    SignedPolynomial s2 = matching_polynomial(k_star(3, 2));
    CHECK(s2.coeff(5) == 1);
    CHECK(s2.coeff(2) == -2);

    SignedPolynomial vx = matching_polynomial(Hypergraph{2, 1, {}});
    CHECK(vx.coeff(1) == 1);
    CHECK(vx.degree() == 1);
}

TEST_CASE("disjoint union multiplies polynomials") {
    SignedPolynomial edge3 = matching_polynomial(Hypergraph::make(3, 3, {{0, 1, 2}}));
    SignedPolynomial prod = poly_product(edge3, edge3);
    SignedPolynomial two =
        matching_polynomial(Hypergraph::make(3, 6, {{0, 1, 2}, {3, 4, 5}}));
    CHECK(prod == two);

    Rng rng(31);
    for (int it = 0; it < 30; ++it) {
        std::uniform_int_distribution<int> pick_k(2, 3), pick_m(1, 4);
        int k = pick_k(rng);
        Hypergraph a = random_kgraph(k, k + 3, pick_m(rng), rng);
        Hypergraph b = random_kgraph(k, k + 3, pick_m(rng), rng);
        Hypergraph u = disjoint_union(a, b);
        CHECK(matching_polynomial(u) ==
              poly_product(matching_polynomial(a), matching_polynomial(b)));
    }

    // appending an isolated vertex multiplies by x
    Hypergraph g = remark_graph();
    Hypergraph gi = Hypergraph::make(3, 6, g.edges);
    CHECK(matching_polynomial(gi) ==
          poly_product(matching_polynomial(g), SignedPolynomial::monomial(1, 1)));
}

TEST_CASE("recurrence equals oracle on random instances") {
    Rng rng(404);
    for (int it = 0; it < 150; ++it) {
        std::uniform_int_distribution<int> pick_k(2, 4), pick_m(1, 8);
        int k = pick_k(rng);
        std::uniform_int_distribution<int> pick_n(k, k + 7);
        int n = pick_n(rng);
        int m = pick_m(rng);
        long cap = 1;
        for (int i = 0; i < k; ++i) cap = cap * (n - i) / (i + 1);
        if (cap < m) continue;
        Hypergraph h = random_kgraph(k, n, m, rng);
        CHECK(matching_counts(h).counts == matching_counts_oracle(h).counts);
    }
}

TEST_CASE("deletion recurrence holds edge by edge") {
    Rng rng(505);
    for (int it = 0; it < 40; ++it) {
        std::uniform_int_distribution<int> pick_k(2, 3), pick_m(2, 12);
        int k = pick_k(rng);
        Hypergraph h = random_kgraph(k, k + 6, pick_m(rng), rng);
        auto full = matching_counts(h).counts;
        for (int ei = 0; ei < h.m(); ++ei) {
            auto del = matching_counts(delete_edge(h, ei)).counts;
            auto rem = matching_counts(remove_edge_closed(h, ei)).counts;
            for (size_t r = 0; r < full.size(); ++r) {
                Int expect = r < del.size() ? del[r] : Int(0);
                if (r >= 1 && r - 1 < rem.size()) expect += rem[r - 1];
                CHECK(full[r] == expect);
            }
        }
    }
}

TEST_CASE("p0 = 1 and p1 = m") {
    Rng rng(606);
    for (int it = 0; it < 50; ++it) {
        std::uniform_int_distribution<int> pick_k(2, 4), pick_m(0, 7);
        int k = pick_k(rng);
        Hypergraph h = random_kgraph(k, k + 5, pick_m(rng), rng);
        auto s = matching_counts(h);
        CHECK(s.counts[0] == 1);
        if (h.m() > 0) {
            REQUIRE(s.counts.size() >= 2);
            CHECK(s.counts[1] == h.m());
        }
    }
}

TEST_CASE("k=2 matching polynomials are real-rooted") {
    Rng rng(707);
    for (int it = 0; it < 60; ++it) {
        std::uniform_int_distribution<int> pick_m(1, 9);
        std::uniform_int_distribution<int> pick_n(3, 9);
        int n = pick_n(rng);
        int m = std::min(pick_m(rng), n * (n - 1) / 2);
        Hypergraph g = random_kgraph(2, n, m, rng);
        SignedPolynomial mu = matching_polynomial(g);
        QPoly p = QPoly::from_signed(mu);
        CHECK(real_roots_with_multiplicity(p) == p.degree());
    }
}

TEST_CASE("oracle size limit") {
    CHECK_THROWS_AS(matching_counts_oracle(complete_k_graph(7, 2)),
                    SizeLimitExceeded);
}
