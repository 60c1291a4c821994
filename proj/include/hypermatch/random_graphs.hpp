#ifndef HYPERMATCH_RANDOM_GRAPHS_HPP
#define HYPERMATCH_RANDOM_GRAPHS_HPP

#include <cstdint>
#include <random>

#include <hypermatch/hypergraph.hpp>

namespace hypermatch {

using Rng = std::mt19937_64;

inline constexpr uint64_t kDefaultSeed = 20250612;

// Seed from HYPERMATCH_SEED when set, else the default.
uint64_t seed_from_env();

// Derives an independent stream for instance i of a sweep; makes parallel
// sweeps deterministic regardless of thread count.
Rng rng_for_instance(uint64_t seed, uint64_t instance);

// m distinct random edges on [0, n); may be disconnected.
Hypergraph random_kgraph(int k, int n, int m, Rng& rng);

// Connected instance with m edges; rejection-sampled, shrinking the vertex
// pool if needed, falling back to tree + extra edges.
Hypergraph random_connected_kgraph(int k, int m, Rng& rng, int n_hint = 0);

// Random k-tree with m edges: each new edge shares exactly one existing
// vertex.
Hypergraph random_ktree(int k, int m, Rng& rng);

} // namespace hypermatch

#endif
