#ifndef HYPERMATCH_WALKTREE_HPP
#define HYPERMATCH_WALKTREE_HPP

#include <hypermatch/hypergraph.hpp>

namespace hypermatch {

// A linear order on V(h): order[i] < order[j] means vertex i precedes j.
// Stored as rank per vertex.
struct VertexOrder {
    std::vector<int> rank;

    static VertexOrder natural(int n);
    static VertexOrder from_permutation(const std::vector<VertexId>& perm);
    bool precedes(VertexId a, VertexId b) const { return rank[a] < rank[b]; }
};

// A conflict-free walk from the root. Walks are paths (distinct vertices,
// distinct edges); each step past the first must avoid every earlier
// conflict set C_j = {w in e_j off the endpoints : w precedes end_j} plus
// the previous endpoint.
struct ConflictFreeWalk {
    std::vector<VertexId> vertices; // v_0 .. v_len
    std::vector<int> edge_indices;  // e_1 .. e_len (indices into h.edges)
    int length() const { return static_cast<int>(edge_indices.size()); }
    VertexId end() const { return vertices.back(); }
};

inline constexpr int kDefaultWalkCap = 50000;

std::vector<ConflictFreeWalk> enumerate_walks(const Hypergraph& h,
                                              const VertexOrder& order,
                                              VertexId root,
                                              int cap = kDefaultWalkCap);

struct WalkTree {
    Hypergraph tree;                     // k-uniform tree on walk ids
    std::vector<ConflictFreeWalk> walks; // walk of tree vertex i
};

// The k-walk-tree rooted at `root`: tree vertices are the conflict-free
// walks from the root; extending a walk along an edge of h joins the walk
// with its k-1 one-step extensions as a tree edge.
WalkTree build_walk_tree(const Hypergraph& h, const VertexOrder& order,
                         VertexId root, int cap = kDefaultWalkCap);

// Connected and acyclic (equivalently n = 1 + m(k-1) and connected).
bool is_k_tree(const Hypergraph& h);

} // namespace hypermatch

#endif
