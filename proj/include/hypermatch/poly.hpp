#ifndef HYPERMATCH_POLY_HPP
#define HYPERMATCH_POLY_HPP

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace hypermatch {

using Int = mpz_class;
using Rat = mpq_class;

// Sparse exact integer polynomial; exponent -> nonzero coefficient.
class SignedPolynomial {
public:
    SignedPolynomial() = default;

    static SignedPolynomial zero() { return {}; }
    static SignedPolynomial one() { return monomial(0, 1); }
    static SignedPolynomial monomial(long exp, Int coef);

    void add_term(long exp, const Int& coef); // merges, drops zeros
    const std::map<long, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    long degree() const; // -1 for zero
    Int coeff(long exp) const;

    SignedPolynomial operator+(const SignedPolynomial& o) const;
    SignedPolynomial operator-(const SignedPolynomial& o) const;
    SignedPolynomial operator*(const SignedPolynomial& o) const;
    bool operator==(const SignedPolynomial& o) const = default;

    Rat eval(const Rat& x) const;
    std::string to_string(const std::string& var = "x") const;

private:
    std::map<long, Int> terms_;
};

SignedPolynomial poly_product(const SignedPolynomial& a, const SignedPolynomial& b);

// Dense rational polynomial, coefficient of x^i at index i. The workhorse
// for Sturm sequences and exact real-root queries. Degrees here stay tiny
// (at most the vertex count), so plain Euclidean remainders are fine.
struct QPoly {
    std::vector<Rat> c;

    static QPoly from_signed(const SignedPolynomial& p);
    static QPoly from_int_coeffs_desc(const std::vector<Int>& desc);

    void trim();
    int degree() const { return static_cast<int>(c.size()) - 1; } // -1 if zero
    bool is_zero() const { return c.empty(); }
    const Rat& lead() const { return c.back(); }

    Rat eval(const Rat& x) const;
    int sign_at(const Rat& x) const;

    QPoly derivative() const;
    QPoly monic() const;
    QPoly neg() const;

    // Remainder of *this divided by d (d nonzero).
    QPoly rem(const QPoly& d) const;
    // Exact quotient when d divides *this; throws otherwise.
    QPoly divexact(const QPoly& d) const;
    // Synthetic division by (x - r); requires eval(r) == 0.
    QPoly deflate(const Rat& r) const;

    bool operator==(const QPoly& o) const = default;
};

QPoly qpoly_gcd(QPoly a, QPoly b);    // monic gcd, or zero if both zero
QPoly squarefree_part(const QPoly& p); // p / gcd(p, p'), monic

// All roots lie strictly inside (-bound, bound).
Rat cauchy_bound(const QPoly& p);

// Sturm chain of a squarefree polynomial.
struct SturmChain {
    std::vector<QPoly> seq;
    explicit SturmChain(const QPoly& squarefree);
    int variations_at(const Rat& x) const;      // requires seq[0](x) != 0
    int variations_at_inf(int dir) const;       // dir = +1 or -1
    // Distinct real roots in the open interval (a, b); endpoints must not be
    // roots. Pass the +/- infinity flags to query unbounded rays.
    int count_roots(const Rat& a, const Rat& b) const;
    int count_roots_above(const Rat& a) const;  // roots in (a, +inf)
    int count_roots_all() const;
};

// Isolating intervals for every real root of a squarefree polynomial, in
// increasing order and pairwise disjoint. An interval with lo == hi is an
// exact rational root; otherwise p(lo) and p(hi) have opposite signs.
struct RootInterval {
    Rat lo, hi;
    bool exact() const { return lo == hi; }
};
std::vector<RootInterval> isolate_real_roots(const QPoly& squarefree);

// Number of real roots counted with multiplicity (repeated gcd peeling).
int real_roots_with_multiplicity(const QPoly& p);

std::string rat_to_string(const Rat& q);
Rat rat_from_string(const std::string& s);

// Outward rational bounds l <= y^(1/k) <= u with u - l <= eps; y > 0.
void kth_root_bounds(const Rat& y, int k, const Rat& eps, Rat& l, Rat& u);

} // namespace hypermatch

#endif
