#ifndef HYPERMATCH_CONSTRUCTIONS_HPP
#define HYPERMATCH_CONSTRUCTIONS_HPP

#include <hypermatch/hypergraph.hpp>

namespace hypermatch {

// m edges through the center vertex 0; n = m(k-1) + 1.
Hypergraph k_star(int k, int m);

// Canonical cycle with len edges. len >= 3: consecutive (and closing) edges
// share exactly one vertex. len = 2 (k >= 3 only): two edges sharing
// exactly two vertices.
Hypergraph k_cycle(int k, int len);

// Each graph edge padded with k_target - 2 fresh vertices.
Hypergraph power_hypergraph(const Hypergraph& graph2, int k_target);

// t cycles of length 2 plus m - 2t pendant edges, all through apex 0.
Hypergraph extremal_H(int k, int m, int t);

// t linear cycles of length 3 plus m - 3t pendant edges, all through apex 0.
Hypergraph extremal_L(int k, int m, int t);

// All C(n, k) edges.
Hypergraph complete_k_graph(int n, int k);

// Complete k-graph on n vertices with a p-edge star joined at vertex 0.
Hypergraph complete_plus_star(int n, int p, int k);

} // namespace hypermatch

#endif
