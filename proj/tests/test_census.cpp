#include <doctest.h>

#include <hypermatch/canonical.hpp>
#include <hypermatch/census.hpp>
#include <hypermatch/constructions.hpp>
#include <hypermatch/verify.hpp>

#include <set>

using namespace hypermatch;

TEST_CASE("the three cacti with 3 edges and one cycle") {
    CactusCensus full = enumerate_census(3, 3, 1, false);
    CHECK(full.size() == 3);
    std::set<std::string> codes;
    for (const auto& g : full.members) codes.insert(pack_code(g));
    CHECK(codes.count(canonical_code(extremal_H(3, 3, 1))) == 1);
    CHECK(codes.count(canonical_code(extremal_L(3, 3, 1))) == 1);

    CactusCensus lin = enumerate_census(3, 3, 1, true);
    CHECK(lin.size() == 1);
    CHECK(pack_code(lin.members[0]) == canonical_code(extremal_L(3, 3, 1)));
}

TEST_CASE("the three-member family persists at k=4") {
    CactusCensus full = enumerate_census(4, 3, 1, false);
    CHECK(full.size() == 3);
    std::set<std::string> codes;
    for (const auto& g : full.members) codes.insert(pack_code(g));
    CHECK(codes.count(canonical_code(extremal_H(4, 3, 1))) == 1);
    CHECK(codes.count(canonical_code(extremal_L(4, 3, 1))) == 1);
    CHECK(enumerate_census(4, 3, 1, true).size() == 1);
    VerificationReport rep = verify_maximizer(full);
    CHECK(rep.ok());
}

TEST_CASE("every member passes its predicates") {
    for (auto [k, m, t, lin] : std::vector<std::array<int, 4>>{
             {3, 4, 1, 0}, {3, 4, 2, 0}, {3, 4, 1, 1}, {2, 5, 1, 1}}) {
        CactusCensus c = enumerate_census(k, m, t, lin);
        CHECK(c.size() > 0);
        for (const auto& g : c.members) {
            CHECK(g.m() == m);
            CHECK(is_cactus(g));
            CHECK(static_cast<int>(find_cycles(g, m).size()) == t);
            if (lin) CHECK(is_linear(g));
            auto deg = degree_sequence(g);
            for (int v = 0; v < g.n; ++v) CHECK(deg[v] > 0);
            CHECK(g == canonical_form(g, 64));
        }
        // pairwise non-isomorphic by canonical uniqueness
        std::set<std::string> codes;
        for (const auto& g : c.members) codes.insert(pack_code(g));
        CHECK(codes.size() == c.size());
    }
}

TEST_CASE("generator matches the naive oracle on small parameters") {
    for (auto [k, m, t, lin] : std::vector<std::array<int, 4>>{
             {3, 2, 1, 0}, {3, 3, 0, 0}, {3, 3, 1, 0}, {3, 3, 1, 1},
             {2, 3, 1, 1}, {2, 4, 1, 1}, {2, 4, 0, 1}}) {
        CactusCensus fast = enumerate_census(k, m, t, lin);
        CactusCensus slow = naive_census(k, m, t, lin);
        std::set<std::string> a, b;
        for (const auto& g : fast.members) a.insert(pack_code(g));
        for (const auto& g : slow.members) b.insert(pack_code(g));
        CHECK(a == b);
    }
}

TEST_CASE("linear members embed into the full census") {
    CactusCensus lin = enumerate_census(3, 4, 1, true);
    CactusCensus full = enumerate_census(3, 4, 1, false);
    std::set<std::string> full_codes;
    for (const auto& g : full.members) full_codes.insert(pack_code(g));
    for (const auto& g : lin.members) CHECK(full_codes.count(pack_code(g)) == 1);
    CHECK(lin.size() < full.size());
}

TEST_CASE("budget limits") {
    CHECK_THROWS_AS(enumerate_census(3, 6, 1, false), SizeLimitExceeded);
    CHECK_THROWS_AS(enumerate_census(2, 8, 1, true), SizeLimitExceeded);
    CHECK_THROWS_AS(enumerate_census(3, 0, 0, false), BadParams);
}

TEST_CASE("maximizer confirmation on the smallest censuses") {
    CactusCensus c31 = enumerate_census(3, 3, 1, false);
    VerificationReport rep = verify_maximizer(c31);
    CHECK(rep.ok()); // the (3,1) pair H and L

    CactusCensus lin31 = enumerate_census(3, 3, 1, true);
    CHECK(verify_maximizer(lin31).ok());

    CactusCensus c41 = enumerate_census(3, 4, 1, false);
    CHECK(verify_maximizer(c41).ok());
}

TEST_CASE("census lambdas serial and parallel agree") {
    CactusCensus a = enumerate_census(3, 4, 1, false);
    CactusCensus b = a;
    census_lambdas_serial(a);
    census_lambdas(b);
    REQUIRE(a.lambdas.size() == b.lambdas.size());
    for (size_t i = 0; i < a.lambdas.size(); ++i) {
        CHECK(a.lambdas[i].lo == b.lambdas[i].lo);
        CHECK(a.lambdas[i].hi == b.lambdas[i].hi);
        CHECK(a.lambdas[i].poly.coeffs_desc == b.lambdas[i].poly.coeffs_desc);
    }
}
