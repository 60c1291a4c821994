#include <doctest.h>

#include <hypermatch/random_graphs.hpp>
#include <hypermatch/tensor.hpp>
#include <hypermatch/verify.hpp>
#include <hypermatch/walktree.hpp>

using namespace hypermatch;

// The OpenMP kernels must agree with their serial references bit for bit:
// per-instance RNG streams and per-entry reductions leave no room for
// scheduling effects.

TEST_CASE("shift sweep: serial == parallel") {
    auto a = verify_shift_monotonicity_serial(60, 3, 6, kDefaultSeed);
    auto b = verify_shift_monotonicity(60, 3, 6, kDefaultSeed);
    CHECK(a.status == b.status);
    CHECK(a.instances == b.instances);
    CHECK(a.detail == b.detail);
}

TEST_CASE("ordering sweep: serial == parallel") {
    auto a = verify_ordering_lemmas_serial(24, kDefaultSeed);
    auto b = verify_ordering_lemmas(24, kDefaultSeed);
    CHECK(a.status == b.status);
    CHECK(a.detail == b.detail);
}

TEST_CASE("tensor apply: serial == parallel on a walk tree") {
    Rng rng = rng_for_instance(kDefaultSeed, 7);
    Hypergraph h = random_connected_kgraph(3, 6, rng);
    WalkTree wt = build_walk_tree(h, VertexOrder::natural(h.n), 0, 500000);
    std::vector<double> x(wt.tree.n);
    for (int i = 0; i < wt.tree.n; ++i) x[i] = 0.5 + (i % 7) * 0.1;
    CHECK(tensor_apply(wt.tree, x) == tensor_apply_serial(wt.tree, x));
}
