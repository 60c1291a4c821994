#ifndef HYPERMATCH_HYPERGRAPH_HPP
#define HYPERMATCH_HYPERGRAPH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <hypermatch/errors.hpp>

namespace hypermatch {

using VertexId = int;

// An edge is a strictly increasing list of exactly k vertex ids.
using Edge = std::vector<VertexId>;

// k-uniform hypergraph on the dense vertex set [0, n).
// Edges are stored sorted lexicographically with no duplicates; this is the
// canonical storage order, not a canonical labeling.
struct Hypergraph {
    int k = 0;
    int n = 0;
    std::vector<Edge> edges;

    int m() const { return static_cast<int>(edges.size()); }

    // Normalizes (sorts vertices within edges, sorts the edge list) and
    // validates. Throws NonUniformEdge / DuplicateEdge / VertexOutOfRange.
    static Hypergraph make(int k, int n, std::vector<Edge> edges);

    bool operator==(const Hypergraph& o) const = default;
};

// Re-checks all representation invariants of an already-built value.
void validate(const Hypergraph& h);

int degree(const Hypergraph& h, VertexId v);
std::vector<int> incident_edges(const Hypergraph& h, VertexId v);
std::vector<int> degree_sequence(const Hypergraph& h);

// Removes one edge, keeping the vertex set.
Hypergraph delete_edge(const Hypergraph& h, int edge_index);

// Removes the vertices of the edge and every edge meeting it; remaining
// vertices are relabeled densely in increasing order.
Hypergraph remove_edge_closed(const Hypergraph& h, int edge_index);

bool is_connected(const Hypergraph& h);

// Vertex sets of connected components (isolated vertices are components).
std::vector<std::vector<VertexId>> components(const Hypergraph& h);

// A cycle is identified by its edge set; length = number of edges.
struct CycleRecord {
    std::vector<int> edge_set; // sorted edge indices
    int length = 0;
    // Union of the member edges' vertices, sorted.
    std::vector<VertexId> support(const Hypergraph& h) const;
};

// All distinct cycles of length <= max_len, deduplicated by edge set.
// A pair of edges sharing >= 2 vertices yields a length-2 cycle.
std::vector<CycleRecord> find_cycles(const Hypergraph& h, int max_len);

bool is_cactus(const Hypergraph& h);
bool is_linear(const Hypergraph& h);

// Edge indices with at least k-1 degree-one vertices.
std::vector<int> pendant_edges(const Hypergraph& h);

// Drops isolated vertices and relabels densely; returns how many were dropped.
Hypergraph strip_isolated(const Hypergraph& h, int* dropped = nullptr);

// Applies old->new vertex relabeling (a permutation of [0,n)).
Hypergraph relabel(const Hypergraph& h, const std::vector<VertexId>& perm);

// Restriction to a vertex subset (edges entirely inside it), dense relabel.
Hypergraph induced_subgraph(const Hypergraph& h, const std::vector<VertexId>& verts);

bool edges_contains(const Hypergraph& h, const Edge& e);

// Index of an edge given by value, or -1.
int index_of_edge(const Hypergraph& h, const Edge& e);

// Disjoint union; b's vertices are offset past a's.
Hypergraph disjoint_union(const Hypergraph& a, const Hypergraph& b);

} // namespace hypermatch

#endif
