#ifndef HYPERMATCH_VERIFY_HPP
#define HYPERMATCH_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>

#include <hypermatch/census.hpp>
#include <hypermatch/hypergraph.hpp>
#include <hypermatch/random_graphs.hpp>
#include <hypermatch/rootfind.hpp>

namespace hypermatch {

enum class VerifyStatus { CONFIRMED, COUNTEREXAMPLE, UNDECIDED };

struct VerificationReport {
    std::string theorem;
    VerifyStatus status = VerifyStatus::UNDECIDED;
    long instances = 0;
    std::string detail;
    std::optional<Hypergraph> witness;

    bool ok() const { return status == VerifyStatus::CONFIRMED; }
};

const char* to_string(VerifyStatus s);

// Identifies the lambda-maximizers of a census by certified comparison and
// checks the set against the expected extremal family: extremal_H for a
// full census (both families tied at (m,t) = (3,1)), extremal_L for a
// linear census. Fills census.lambdas if absent.
VerificationReport verify_maximizer(CactusCensus& census);

// Random connected k-graphs x random (u,v): the shift never certifies a
// decrease, and is strictly increasing whenever the two-edge witness
// condition holds.
VerificationReport verify_shift_monotonicity(int samples, int k, int max_edges,
                                             uint64_t seed);
VerificationReport verify_shift_monotonicity_serial(int samples, int k,
                                                    int max_edges, uint64_t seed);

// Exhaustive check that the complete graph with p pendant edges at one
// vertex maximizes lambda among connected n-vertex k-graphs with exactly p
// pendant edges. Only k = 2 scale is enumerable.
VerificationReport verify_pendant_theorem(int k, int n, int p);

// Randomized checks of the spanning-subgraph ordering, its disconnected
// extension, the shift deletion inequality, and the shift ordering.
VerificationReport verify_ordering_lemmas(int samples, uint64_t seed);
VerificationReport verify_ordering_lemmas_serial(int samples, uint64_t seed);

// Walk-tree identity: |rho(T(h,<,u)) - lambda(h)| < tol for every root and
// a few orders; T isomorphic to h when h is a k-tree.
VerificationReport verify_walk_tree_identity(const std::vector<Hypergraph>& hs,
                                             int orders_per_root, uint64_t seed,
                                             double tol);

// Power hypergraph identity on random graphs: counts preserved and
// lambda(G^(k)) = lambda(G)^(2/k).
VerificationReport verify_power_identity(int samples, int k, int max_edges,
                                         uint64_t seed, double tol);

} // namespace hypermatch

#endif
