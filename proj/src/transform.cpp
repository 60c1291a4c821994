#include <hypermatch/transform.hpp>

#include <algorithm>
#include <set>

namespace hypermatch {

namespace {

Edge shifted_set(const Edge& e, VertexId u, VertexId v) {
    Edge t;
    t.reserve(e.size());
    for (VertexId w : e)
        if (w != v) t.push_back(w);
    t.push_back(u);
    std::sort(t.begin(), t.end());
    return t;
}

} // namespace

Edge shift_edge(const Hypergraph& h, const Edge& e, const ShiftSpec& s) {
    if (s.u == s.v) throw BadParams("shift requires u != v");
    if (s.u < 0 || s.u >= h.n || s.v < 0 || s.v >= h.n) throw VertexOutOfRange();
    Edge key = e;
    std::sort(key.begin(), key.end());
    if (!edges_contains(h, key)) throw EdgeNotInGraph();
    bool has_v = std::binary_search(key.begin(), key.end(), s.v);
    bool has_u = std::binary_search(key.begin(), key.end(), s.u);
    if (!has_v || has_u) return key;
    Edge target = shifted_set(key, s.u, s.v);
    if (edges_contains(h, target)) return key;
    return target;
}

Hypergraph shift_hypergraph(const Hypergraph& h, const ShiftSpec& s) {
    if (s.u == s.v) throw BadParams("shift requires u != v");
    if (s.u < 0 || s.u >= h.n || s.v < 0 || s.v >= h.n) throw VertexOutOfRange();
    std::vector<Edge> out;
    out.reserve(h.edges.size());
    for (const auto& e : h.edges) out.push_back(shift_edge(h, e, s));
    return Hypergraph::make(h.k, h.n, std::move(out));
}

Hypergraph edge_move(const Hypergraph& h, const std::vector<EdgeMove>& moves) {
    std::vector<Edge> out = h.edges;
    std::vector<char> moved(h.m(), 0);
    for (const auto& mv : moves) {
        if (mv.edge_index < 0 || mv.edge_index >= h.m()) throw BadEdgeIndex();
        if (moved[mv.edge_index])
            throw PreconditionViolated("edge moved twice");
        const Edge& e = h.edges[mv.edge_index];
        if (std::binary_search(e.begin(), e.end(), mv.to))
            throw PreconditionViolated("target vertex already in edge");
        if (!std::binary_search(e.begin(), e.end(), mv.from))
            throw PreconditionViolated("source vertex not in edge");
        if (mv.to < 0 || mv.to >= h.n) throw VertexOutOfRange();
        out[mv.edge_index] = shifted_set(e, mv.to, mv.from);
        moved[mv.edge_index] = 1;
    }
    std::sort(out.begin(), out.end());
    for (size_t i = 1; i < out.size(); ++i)
        if (out[i] == out[i - 1]) throw MultipleEdgeCreated();
    return Hypergraph::make(h.k, h.n, std::move(out));
}

StarJoinResult star_join(const StarJoinSpec& spec) {
    if (spec.attach.size() != spec.parts.size())
        throw BadParams("attach/parts size mismatch");
    const Hypergraph& host = spec.host;
    for (VertexId u : spec.attach)
        if (u < 0 || u >= host.n) throw VertexOutOfRange("attach vertex");

    StarJoinResult res;
    std::vector<Edge> edges = host.edges;
    int next = host.n;
    for (size_t i = 0; i < spec.parts.size(); ++i) {
        const Hypergraph& p = spec.parts[i].part;
        VertexId root = spec.parts[i].root;
        if (p.k != host.k) throw BadParams("uniformity mismatch in join");
        if (root < 0 || root >= p.n) throw VertexOutOfRange("part root");
        std::vector<VertexId> map(p.n, -1);
        for (VertexId w = 0; w < p.n; ++w)
            map[w] = (w == root) ? spec.attach[i] : next++;
        for (Edge e : p.edges) {
            for (VertexId& w : e) w = map[w];
            std::sort(e.begin(), e.end());
            edges.push_back(std::move(e));
        }
        res.part_maps.push_back(std::move(map));
    }
    std::sort(edges.begin(), edges.end());
    for (size_t i = 1; i < edges.size(); ++i)
        if (edges[i] == edges[i - 1]) throw DuplicateEdgeAfterJoin();
    res.joined = Hypergraph::make(host.k, next, std::move(edges));
    return res;
}

} // namespace hypermatch
