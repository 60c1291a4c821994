#ifndef HYPERMATCH_CENSUS_HPP
#define HYPERMATCH_CENSUS_HPP

#include <hypermatch/hypergraph.hpp>
#include <hypermatch/rootfind.hpp>

namespace hypermatch {

// All k-cacti (linear k-cacti when `linear`) with m edges and exactly t
// cycles, up to isomorphism. Members are canonical forms, every vertex lies
// in an edge, and cycle identity is edge-set identity.
struct CactusCensus {
    int k = 0;
    int m = 0;
    int t = 0;
    bool linear = false;
    std::vector<Hypergraph> members;
    std::vector<LambdaValue> lambdas; // filled by census_lambdas

    size_t size() const { return members.size(); }
};

// Canonical-augmentation generator: grows connected graphs edge by edge,
// pruning anything that already violates the (hereditary) cactus/linearity
// constraints or exceeds t cycles. Enforces the desk-scale budgets
// (k=3: m<=5, k=2: m<=7, else n <= 14) via SizeLimitExceeded.
CactusCensus enumerate_census(int k, int m, int t, bool linear);

// Independent oracle: enumerates every m-subset of all k-sets over every
// feasible vertex count and filters. Only viable for tiny parameters.
CactusCensus naive_census(int k, int m, int t, bool linear);

// All connected k-graphs with m edges up to isomorphism (no cactus filter);
// shares the generator with enumerate_census.
std::vector<Hypergraph> connected_kgraphs(int k, int m, int max_n);

void census_lambdas(CactusCensus& census, const Rat& eps = kDefaultLambdaEps);
void census_lambdas_serial(CactusCensus& census,
                           const Rat& eps = kDefaultLambdaEps);

} // namespace hypermatch

#endif
