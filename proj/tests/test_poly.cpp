#include <doctest.h>

#include <hypermatch/poly.hpp>

using namespace hypermatch;

namespace {

QPoly qp(std::vector<long> asc) {
    QPoly p;
    for (long c : asc) p.c.push_back(Rat(c));
    p.trim();
    return p;
}

} // namespace

TEST_CASE("signed polynomial arithmetic") {
    SignedPolynomial a = SignedPolynomial::monomial(3, 1) -
                         SignedPolynomial::monomial(0, 1); // x^3 - 1
    SignedPolynomial sq = a * a;
    CHECK(sq.coeff(6) == 1);
    CHECK(sq.coeff(3) == -2);
    CHECK(sq.coeff(0) == 1);
    CHECK(sq.degree() == 6);
    CHECK((a - a).is_zero());
    CHECK(poly_product(a, SignedPolynomial::one()) == a);
    CHECK(a.eval(Rat(2)) == 7);
    CHECK(a.to_string() == "x^3 - 1");
}

TEST_CASE("qpoly division, gcd, squarefree") {
    QPoly p = qp({-1, 0, 0, 1}); // x^3 - 1
    QPoly d = qp({-1, 1});       // x - 1
    QPoly q = p.divexact(d);
    CHECK(q == qp({1, 1, 1}));
    CHECK(p.rem(d).is_zero());

    QPoly g = qpoly_gcd(p, d);
    CHECK(g.degree() == 1);

    // (x-1)^2 (x+2) has squarefree part (x-1)(x+2)
    QPoly f = qp({2, -3, 0, 1});
    QPoly sf = squarefree_part(f);
    CHECK(sf.degree() == 2);
    CHECK(sf.eval(Rat(1)) == 0);
    CHECK(sf.eval(Rat(-2)) == 0);
}

TEST_CASE("sturm root counting") {
    QPoly p = qp({-2, 0, 1}); // x^2 - 2
    SturmChain ch(p);
    CHECK(ch.count_roots_all() == 2);
    CHECK(ch.count_roots(Rat(0), Rat(2)) == 1);
    CHECK(ch.count_roots(Rat(-2), Rat(0)) == 1);
    CHECK(ch.count_roots_above(Rat(3, 2)) == 0);
    CHECK(ch.count_roots_above(Rat(1)) == 1);

    QPoly quad = qp({1, 0, 0, 0, 1}); // x^4 + 1, no real roots
    CHECK(SturmChain(quad).count_roots_all() == 0);
}

TEST_CASE("root isolation with rational and irrational roots") {
    // (x-1)(x-2)(x^2-3) : roots 1, 2, ±sqrt3
    QPoly p = qp({6, -3, -2, 1}); // placeholder; build by multiplication instead
    SignedPolynomial f = (SignedPolynomial::monomial(1, 1) -
                          SignedPolynomial::monomial(0, 1)) *
                         (SignedPolynomial::monomial(1, 1) -
                          SignedPolynomial::monomial(0, 2)) *
                         (SignedPolynomial::monomial(2, 1) -
                          SignedPolynomial::monomial(0, 3));
    p = QPoly::from_signed(f);
    auto roots = isolate_real_roots(p);
    REQUIRE(roots.size() == 4);
    // sorted: -sqrt3 < 1 < sqrt3 < 2; intervals isolate, pairwise disjoint
    CHECK(roots[1].lo <= 1);
    CHECK(roots[1].hi >= 1);
    CHECK(roots[3].lo <= 2);
    CHECK(roots[3].hi >= 2);
    CHECK(roots[0].hi < roots[1].lo);
    CHECK(roots[1].hi < roots[2].lo);
    CHECK(roots[2].hi < roots[3].lo);
    for (const auto& r : roots)
        if (!r.exact()) CHECK(p.sign_at(r.lo) * p.sign_at(r.hi) < 0);
}

TEST_CASE("real roots with multiplicity") {
    // (x-1)^2 (x^2+1): 2 real with multiplicity
    SignedPolynomial f = (SignedPolynomial::monomial(1, 1) -
                          SignedPolynomial::monomial(0, 1)) *
                         (SignedPolynomial::monomial(1, 1) -
                          SignedPolynomial::monomial(0, 1)) *
                         (SignedPolynomial::monomial(2, 1) +
                          SignedPolynomial::monomial(0, 1));
    CHECK(real_roots_with_multiplicity(QPoly::from_signed(f)) == 2);
    QPoly cube = qp({-1, 3, -3, 1}); // (x-1)^3
    CHECK(real_roots_with_multiplicity(cube) == 3);
}

TEST_CASE("kth root bounds") {
    Rat l, u;
    kth_root_bounds(Rat(3), 3, Rat(1, 1 << 20), l, u);
    CHECK(l * l * l <= 3);
    CHECK(u * u * u >= 3);
    CHECK(u - l <= Rat(1, 1 << 20));

    kth_root_bounds(Rat(8), 3, Rat(1, 1024), l, u);
    CHECK(l == 2); // exact
    CHECK(u == 2);

    kth_root_bounds(Rat(1, 4), 2, Rat(1, 1024), l, u);
    CHECK(l == Rat(1, 2));
    CHECK(u == Rat(1, 2));
}

TEST_CASE("rational string round trip") {
    CHECK(rat_to_string(Rat(-7, 3)) == "-7/3");
    CHECK(rat_to_string(Rat(4)) == "4");
    CHECK(rat_from_string("-7/3") == Rat(-7, 3));
}
