#ifndef HYPERMATCH_CANONICAL_HPP
#define HYPERMATCH_CANONICAL_HPP

#include <string>

#include <hypermatch/hypergraph.hpp>

namespace hypermatch {

inline constexpr int kDefaultCanonCap = 24;

// Canonical relabeling: for a connected hypergraph, the vertex permutation
// minimizing the sorted edge list lexicographically; for a disconnected one,
// components are canonicalized independently and concatenated in a fixed
// order. Two hypergraphs are isomorphic iff their canonical forms are equal.
// Throws SizeLimitExceeded when n > max_n.
Hypergraph canonical_form(const Hypergraph& h, int max_n = kDefaultCanonCap);

// Serializes a hypergraph as-is into a compact byte key (no relabeling).
std::string pack_code(const Hypergraph& h);

// pack_code of the canonical form; usable as a hash-map key.
std::string canonical_code(const Hypergraph& h, int max_n = kDefaultCanonCap);

bool is_isomorphic(const Hypergraph& a, const Hypergraph& b,
                   int max_n = kDefaultCanonCap);

} // namespace hypermatch

#endif
