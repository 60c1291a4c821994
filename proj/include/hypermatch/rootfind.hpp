#ifndef HYPERMATCH_ROOTFIND_HPP
#define HYPERMATCH_ROOTFIND_HPP

#include <hypermatch/hypergraph.hpp>
#include <hypermatch/matchpoly.hpp>
#include <hypermatch/poly.hpp>

namespace hypermatch {

// q(y) = sum_r (-1)^r p_r y^(M-r); mu(h, x) = x^shift * q(x^k). Monic since
// p_0 = 1. All root work happens on q: the exponent gaps of mu are multiples
// of k, so the substitution y = x^k divides the degree by k.
struct ReducedPoly {
    std::vector<Int> coeffs_desc; // leading coefficient first
    long shift = 0;               // n - k*M
    int k = 0;

    int degree() const { return static_cast<int>(coeffs_desc.size()) - 1; }
    QPoly to_qpoly() const { return QPoly::from_int_coeffs_desc(coeffs_desc); }
};

ReducedPoly reduce_spectrum(const MatchingSpectrum& s);

// A real algebraic number: the unique root of the squarefree polynomial p
// inside [lo, hi]. Either lo == hi (exact rational root) or p(lo)*p(hi) < 0.
struct AlgebraicReal {
    QPoly p;
    Rat lo, hi;

    bool exact() const { return lo == hi; }
    Rat width() const { return hi - lo; }
    void refine();                    // one bisection step
    void refine_to(const Rat& eps);   // until width <= eps
    void refine_at(const Rat& t);     // split at an interior point
    double approx() const;
};

// Exact sign of d at the algebraic number a (gcd certificate for zero).
int sign_at_algebraic(const QPoly& d, AlgebraicReal a);

// Number of distinct real roots of d strictly above a. Also reports a
// rational point safe_above > a with no root of d in (a, safe_above].
int count_roots_above_algebraic(const QPoly& d, AlgebraicReal a, Rat* safe_above);

// The largest matching root lambda(h) = y*^(1/k), where y* is the largest
// real root of the reduced polynomial. The stored interval isolates y*.
struct LambdaValue {
    ReducedPoly poly;
    QPoly qsf;      // squarefree part of q, monic
    Rat lo, hi;     // isolating interval for y*
    int k = 0;
    bool no_edges = false; // m = 0: lambda = 0 by convention

    AlgebraicReal y_root() const { return AlgebraicReal{qsf, lo, hi}; }
    void refine_to(const Rat& eps);
    // Outward rational bounds on lambda itself with hi - lo <= eps.
    void lambda_bounds(const Rat& eps, Rat& llo, Rat& lhi) const;
    double lambda_approx() const;
};

inline const Rat kDefaultLambdaEps = Rat(1, Int(1) << 40);

LambdaValue largest_matching_root(const Hypergraph& h,
                                  const Rat& eps = kDefaultLambdaEps);
LambdaValue largest_matching_root(const MatchingSpectrum& s,
                                  const Rat& eps = kDefaultLambdaEps);

enum class LambdaOrder { LT, GT, EQ, EQ_CERTIFIED };

// EQ_CERTIFIED: the gcd of the two reduced polynomials provably carries both
// largest roots (same-k inputs). EQ: intervals overlap at precision eps
// without certification (only reachable when the uniformities differ).
LambdaOrder compare_lambda_values(const LambdaValue& a, const LambdaValue& b,
                                  const Rat& eps = kDefaultLambdaEps);
LambdaOrder compare_lambda(const Hypergraph& a, const Hypergraph& b,
                           const Rat& eps = kDefaultLambdaEps);

enum class PreceqResult { PRECEQ_STRICT, PRECEQ, NEITHER };

// Decides whether mu(g) - mu(h) is > 0 (resp. >= 0) on [lambda(h), +inf),
// exactly: sign at lambda(h) by algebraic certification, root counting and
// sign sampling beyond. g == h gives PRECEQ (the difference is 0 there).
PreceqResult check_preceq(const Hypergraph& g, const Hypergraph& h);
PreceqResult check_preceq(const SignedPolynomial& mu_g,
                          const SignedPolynomial& mu_h,
                          const LambdaValue& lambda_h);

const char* to_string(LambdaOrder o);
const char* to_string(PreceqResult r);

} // namespace hypermatch

#endif
