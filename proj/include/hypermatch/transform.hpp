#ifndef HYPERMATCH_TRANSFORM_HPP
#define HYPERMATCH_TRANSFORM_HPP

#include <hypermatch/hypergraph.hpp>

namespace hypermatch {

struct ShiftSpec {
    VertexId u;
    VertexId v;
};

// The (u,v)-shift of one edge: (e \ {v}) ∪ {u} when v ∈ e, u ∉ e and the
// target is not already an edge; otherwise e unchanged. Membership guards
// are always evaluated against the original edge set.
Edge shift_edge(const Hypergraph& h, const Edge& e, const ShiftSpec& s);

// Image of the whole edge set under the shift; vertex set unchanged.
Hypergraph shift_hypergraph(const Hypergraph& h, const ShiftSpec& s);

struct EdgeMove {
    int edge_index;
    VertexId from;
    VertexId to;
};

// Replaces each e_i by (e_i \ {from_i}) ∪ {to}. All moves share the target
// in the intended use but the API allows distinct targets. Throws
// MultipleEdgeCreated if the result would have a repeated edge.
Hypergraph edge_move(const Hypergraph& h, const std::vector<EdgeMove>& moves);

struct StarJoinPart {
    Hypergraph part;
    VertexId root;
};

struct StarJoinSpec {
    Hypergraph host;
    std::vector<VertexId> attach; // host vertices u_1..u_s (repeats allowed)
    std::vector<StarJoinPart> parts;
};

struct StarJoinResult {
    Hypergraph joined;
    // joined id of host vertex v is v itself; part_maps[i][w] is the joined
    // id of vertex w of part i.
    std::vector<std::vector<VertexId>> part_maps;
};

// Identifies attach[i] with parts[i].root for each i; all other part
// vertices get fresh dense ids after the host's.
StarJoinResult star_join(const StarJoinSpec& spec);

} // namespace hypermatch

#endif
