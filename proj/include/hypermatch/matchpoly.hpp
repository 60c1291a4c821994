#ifndef HYPERMATCH_MATCHPOLY_HPP
#define HYPERMATCH_MATCHPOLY_HPP

#include <hypermatch/hypergraph.hpp>
#include <hypermatch/poly.hpp>

namespace hypermatch {

// Exact matching counts of a k-graph: counts[r] = number of r-matchings.
// counts[0] = 1 and trailing zeros are trimmed.
struct MatchingSpectrum {
    int k = 0;
    int n = 0;
    std::vector<Int> counts;

    int max_matching() const { return static_cast<int>(counts.size()) - 1; }
    bool operator==(const MatchingSpectrum& o) const = default;
};

// Counts every matching by direct enumeration of disjoint edge subsets.
// Deliberately naive: this is the oracle all faster paths are tested
// against. Requires m <= 20.
MatchingSpectrum matching_counts_oracle(const Hypergraph& h);

// Deletion-recurrence computation, memoized over canonical forms of
// residual sub-hypergraphs (isolated vertices stripped; they do not affect
// counts). Agrees with the oracle everywhere.
MatchingSpectrum matching_counts(const Hypergraph& h);

// mu(h, x) = sum_r (-1)^r counts[r] x^(n - k r)
SignedPolynomial matching_polynomial(const MatchingSpectrum& s);
SignedPolynomial matching_polynomial(const Hypergraph& h);

} // namespace hypermatch

#endif
