#include <hypermatch/walktree.hpp>

#include <algorithm>
#include <numeric>
#include <set>

namespace hypermatch {

VertexOrder VertexOrder::natural(int n) {
    VertexOrder o;
    o.rank.resize(n);
    std::iota(o.rank.begin(), o.rank.end(), 0);
    return o;
}

VertexOrder VertexOrder::from_permutation(const std::vector<VertexId>& perm) {
    VertexOrder o;
    o.rank.assign(perm.size(), -1);
    for (size_t pos = 0; pos < perm.size(); ++pos) {
        VertexId v = perm[pos];
        if (v < 0 || v >= static_cast<VertexId>(perm.size()) || o.rank[v] >= 0)
            throw BadParams("order is not a permutation");
        o.rank[v] = static_cast<int>(pos);
    }
    return o;
}

namespace {

struct WalkNode {
    ConflictFreeWalk walk;
    std::set<VertexId> blocked; // union of conflict sets C_1..C_len
};

// One-step extensions of a walk along edge ei. The conflict condition
// e ∩ (C_1 ∪ ... ∪ C_{len}) = ∅ is endpoint-independent, and since every
// earlier vertex v_0..v_{len-1} lies in some C_j, path-ness of each
// extension is automatic.
bool edge_extends(const Hypergraph& h, const WalkNode& node, int ei) {
    const Edge& e = h.edges[ei];
    if (!std::binary_search(e.begin(), e.end(), node.walk.end())) return false;
    for (VertexId w : e)
        if (node.blocked.count(w)) return false;
    if (node.walk.length() == 0) {
        // the root itself is not in any conflict set yet; still a path means
        // the edge may not revisit it as a new endpoint (handled by caller)
        return true;
    }
    return true;
}

WalkNode extend(const Hypergraph& h, const WalkNode& node, int ei, VertexId w,
                const VertexOrder& order) {
    const Edge& e = h.edges[ei];
    WalkNode child;
    child.walk = node.walk;
    child.walk.vertices.push_back(w);
    child.walk.edge_indices.push_back(ei);
    child.blocked = node.blocked;
    VertexId prev = node.walk.end();
    child.blocked.insert(prev);
    for (VertexId z : e)
        if (z != prev && z != w && order.precedes(z, w)) child.blocked.insert(z);
    return child;
}

} // namespace

std::vector<ConflictFreeWalk> enumerate_walks(const Hypergraph& h,
                                              const VertexOrder& order,
                                              VertexId root, int cap) {
    return build_walk_tree(h, order, root, cap).walks;
}

WalkTree build_walk_tree(const Hypergraph& h, const VertexOrder& order,
                         VertexId root, int cap) {
    if (root < 0 || root >= h.n) throw VertexOutOfRange("walk-tree root");
    if (static_cast<int>(order.rank.size()) != h.n)
        throw DimensionMismatch("order size != n");

    std::vector<WalkNode> nodes;
    nodes.push_back(WalkNode{ConflictFreeWalk{{root}, {}}, {}});
    std::vector<Edge> tree_edges;

    // BFS by walk length; children of node i are appended after it.
    for (size_t i = 0; i < nodes.size(); ++i) {
        // Snapshot: nodes[i] stays valid because children are pushed after
        // reading it, but push_back may reallocate, so copy what we need.
        WalkNode cur = nodes[i];
        for (int ei = 0; ei < h.m(); ++ei) {
            if (!edge_extends(h, cur, ei)) continue;
            // For length 0 the blocked set is empty, so explicitly avoid
            // re-using the root as a new endpoint (paths have distinct
            // vertices).
            Edge tree_edge{static_cast<VertexId>(i)};
            for (VertexId w : h.edges[ei]) {
                if (w == cur.walk.end()) continue;
                if (cur.walk.length() == 0 && w == root) continue;
                WalkNode child = extend(h, cur, ei, w, order);
                VertexId cid = static_cast<VertexId>(nodes.size());
                nodes.push_back(std::move(child));
                tree_edge.push_back(cid);
                if (static_cast<int>(nodes.size()) > cap)
                    throw CapExceeded("walk-tree exceeds " + std::to_string(cap) +
                                      " walks");
            }
            if (static_cast<int>(tree_edge.size()) == h.k)
                tree_edges.push_back(std::move(tree_edge));
        }
    }

    WalkTree out;
    out.walks.reserve(nodes.size());
    for (auto& nd : nodes) out.walks.push_back(std::move(nd.walk));
    out.tree = Hypergraph::make(h.k, static_cast<int>(nodes.size()),
                                std::move(tree_edges));
    return out;
}

bool is_k_tree(const Hypergraph& h) {
    if (h.n < 1) return false;
    if (!is_connected(h)) return false;
    return h.n == 1 + h.m() * (h.k - 1) && find_cycles(h, h.m()).empty();
}

} // namespace hypermatch
