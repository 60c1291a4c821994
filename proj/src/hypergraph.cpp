#include <hypermatch/hypergraph.hpp>

#include <algorithm>
#include <numeric>
#include <set>

namespace hypermatch {

Hypergraph Hypergraph::make(int k, int n, std::vector<Edge> edges) {
    Hypergraph h;
    h.k = k;
    h.n = n;
    for (auto& e : edges) std::sort(e.begin(), e.end());
    std::sort(edges.begin(), edges.end());
    h.edges = std::move(edges);
    validate(h);
    return h;
}

void validate(const Hypergraph& h) {
    if (h.k < 2) throw BadParams("uniformity k must be >= 2");
    if (h.n < 0) throw BadParams("negative vertex count");
    for (const auto& e : h.edges) {
        if (static_cast<int>(e.size()) != h.k)
            throw NonUniformEdge("edge has " + std::to_string(e.size()) +
                                 " vertices, expected " + std::to_string(h.k));
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] < 0 || e[i] >= h.n)
                throw VertexOutOfRange("vertex " + std::to_string(e[i]) +
                                       " outside [0," + std::to_string(h.n) + ")");
            if (i > 0 && e[i] == e[i - 1])
                throw NonUniformEdge("repeated vertex inside edge");
        }
        if (!std::is_sorted(e.begin(), e.end()))
            throw NonUniformEdge("edge vertices not sorted");
    }
    for (size_t i = 1; i < h.edges.size(); ++i) {
        if (h.edges[i] == h.edges[i - 1]) throw DuplicateEdge();
        if (h.edges[i] < h.edges[i - 1])
            throw DuplicateEdge("edge list not sorted");
    }
}

int degree(const Hypergraph& h, VertexId v) {
    if (v < 0 || v >= h.n) throw VertexOutOfRange();
    int d = 0;
    for (const auto& e : h.edges)
        if (std::binary_search(e.begin(), e.end(), v)) ++d;
    return d;
}

std::vector<int> incident_edges(const Hypergraph& h, VertexId v) {
    if (v < 0 || v >= h.n) throw VertexOutOfRange();
    std::vector<int> out;
    for (int i = 0; i < h.m(); ++i)
        if (std::binary_search(h.edges[i].begin(), h.edges[i].end(), v)) out.push_back(i);
    return out;
}

std::vector<int> degree_sequence(const Hypergraph& h) {
    std::vector<int> deg(h.n, 0);
    for (const auto& e : h.edges)
        for (VertexId v : e) ++deg[v];
    return deg;
}

Hypergraph delete_edge(const Hypergraph& h, int edge_index) {
    if (edge_index < 0 || edge_index >= h.m()) throw BadEdgeIndex();
    Hypergraph out = h;
    out.edges.erase(out.edges.begin() + edge_index);
    return out;
}

Hypergraph remove_edge_closed(const Hypergraph& h, int edge_index) {
    if (edge_index < 0 || edge_index >= h.m()) throw BadEdgeIndex();
    const Edge& e = h.edges[edge_index];
    std::vector<VertexId> remap(h.n, -1);
    int next = 0;
    for (VertexId v = 0; v < h.n; ++v)
        if (!std::binary_search(e.begin(), e.end(), v)) remap[v] = next++;
    std::vector<Edge> kept;
    for (int i = 0; i < h.m(); ++i) {
        if (i == edge_index) continue;
        bool meets = false;
        for (VertexId v : h.edges[i])
            if (remap[v] < 0) { meets = true; break; }
        if (meets) continue;
        Edge f = h.edges[i];
        for (VertexId& v : f) v = remap[v];
        kept.push_back(std::move(f));
    }
    return Hypergraph::make(h.k, next, std::move(kept));
}

namespace {

// Union-find over vertices.
struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

} // namespace

bool is_connected(const Hypergraph& h) {
    if (h.n < 1) throw EmptyVertexSet();
    return components(h).size() == 1;
}

std::vector<std::vector<VertexId>> components(const Hypergraph& h) {
    Dsu d(h.n);
    for (const auto& e : h.edges)
        for (size_t i = 1; i < e.size(); ++i) d.unite(e[0], e[i]);
    std::vector<std::vector<VertexId>> by_root(h.n);
    for (VertexId v = 0; v < h.n; ++v) by_root[d.find(v)].push_back(v);
    std::vector<std::vector<VertexId>> comps;
    for (auto& c : by_root)
        if (!c.empty()) comps.push_back(std::move(c));
    return comps;
}

std::vector<VertexId> CycleRecord::support(const Hypergraph& h) const {
    std::set<VertexId> s;
    for (int ei : edge_set) s.insert(h.edges[ei].begin(), h.edges[ei].end());
    return {s.begin(), s.end()};
}

namespace {

// DFS over alternating sequences (v0, e1, v1, ...) with distinct edges and
// distinct vertices; closes when an unused edge contains both the current
// end and v0.
void cycle_dfs(const Hypergraph& h, const std::vector<std::vector<int>>& inc,
               VertexId v0, VertexId cur, std::vector<char>& edge_used,
               std::vector<char>& vertex_used, int depth, int max_len,
               std::vector<int>& edge_stack,
               std::set<std::vector<int>>& found) {
    for (int ei : inc[cur]) {
        if (edge_used[ei]) continue;
        const Edge& e = h.edges[ei];
        if (depth + 1 >= 2 && depth + 1 <= max_len &&
            std::binary_search(e.begin(), e.end(), v0)) {
            edge_stack.push_back(ei);
            std::vector<int> key = edge_stack;
            std::sort(key.begin(), key.end());
            found.insert(std::move(key));
            edge_stack.pop_back();
        }
        if (depth + 1 >= max_len) continue;
        edge_used[ei] = 1;
        edge_stack.push_back(ei);
        for (VertexId w : e) {
            if (w == cur || vertex_used[w]) continue;
            vertex_used[w] = 1;
            cycle_dfs(h, inc, v0, w, edge_used, vertex_used, depth + 1, max_len,
                      edge_stack, found);
            vertex_used[w] = 0;
        }
        edge_stack.pop_back();
        edge_used[ei] = 0;
    }
}

} // namespace

std::vector<CycleRecord> find_cycles(const Hypergraph& h, int max_len) {
    std::set<std::vector<int>> found;
    std::vector<std::vector<int>> inc(h.n);
    for (int i = 0; i < h.m(); ++i)
        for (VertexId v : h.edges[i]) inc[v].push_back(i);
    std::vector<char> edge_used(h.m(), 0), vertex_used(h.n, 0);
    std::vector<int> edge_stack;
    for (VertexId v0 = 0; v0 < h.n; ++v0) {
        vertex_used[v0] = 1;
        cycle_dfs(h, inc, v0, v0, edge_used, vertex_used, 0, max_len, edge_stack,
                  found);
        vertex_used[v0] = 0;
    }
    std::vector<CycleRecord> out;
    out.reserve(found.size());
    for (const auto& key : found)
        out.push_back(CycleRecord{key, static_cast<int>(key.size())});
    return out;
}

bool is_cactus(const Hypergraph& h) {
    if (h.n < 1 || !is_connected(h)) return false;
    // Two edges sharing >= 3 vertices yield several distinct two-edge cycles
    // on the same support (the sequences differ in their vertex pair), which
    // a cactus cannot contain; the edge-set cycle records below collapse
    // them, so reject the configuration directly.
    for (int i = 0; i < h.m(); ++i)
        for (int j = i + 1; j < h.m(); ++j) {
            std::vector<VertexId> inter;
            std::set_intersection(h.edges[i].begin(), h.edges[i].end(),
                                  h.edges[j].begin(), h.edges[j].end(),
                                  std::back_inserter(inter));
            if (inter.size() >= 3) return false;
        }
    auto cycles = find_cycles(h, h.m());
    for (size_t i = 0; i < cycles.size(); ++i) {
        auto si = cycles[i].support(h);
        for (size_t j = i + 1; j < cycles.size(); ++j) {
            auto sj = cycles[j].support(h);
            std::vector<VertexId> inter;
            std::set_intersection(si.begin(), si.end(), sj.begin(), sj.end(),
                                  std::back_inserter(inter));
            if (inter.size() > 1) return false;
        }
    }
    return true;
}

bool is_linear(const Hypergraph& h) {
    for (int i = 0; i < h.m(); ++i)
        for (int j = i + 1; j < h.m(); ++j) {
            std::vector<VertexId> inter;
            std::set_intersection(h.edges[i].begin(), h.edges[i].end(),
                                  h.edges[j].begin(), h.edges[j].end(),
                                  std::back_inserter(inter));
            if (inter.size() > 1) return false;
        }
    return true;
}

std::vector<int> pendant_edges(const Hypergraph& h) {
    auto deg = degree_sequence(h);
    std::vector<int> out;
    for (int i = 0; i < h.m(); ++i) {
        int ones = 0;
        for (VertexId v : h.edges[i])
            if (deg[v] == 1) ++ones;
        if (ones >= h.k - 1) out.push_back(i);
    }
    return out;
}

Hypergraph strip_isolated(const Hypergraph& h, int* dropped) {
    auto deg = degree_sequence(h);
    std::vector<VertexId> remap(h.n, -1);
    int next = 0;
    for (VertexId v = 0; v < h.n; ++v)
        if (deg[v] > 0) remap[v] = next++;
    if (dropped) *dropped = h.n - next;
    std::vector<Edge> es = h.edges;
    for (auto& e : es)
        for (VertexId& v : e) v = remap[v];
    return Hypergraph::make(h.k, next, std::move(es));
}

Hypergraph relabel(const Hypergraph& h, const std::vector<VertexId>& perm) {
    if (static_cast<int>(perm.size()) != h.n)
        throw DimensionMismatch("permutation size != n");
    std::vector<Edge> es = h.edges;
    for (auto& e : es)
        for (VertexId& v : e) v = perm[v];
    return Hypergraph::make(h.k, h.n, std::move(es));
}

Hypergraph induced_subgraph(const Hypergraph& h, const std::vector<VertexId>& verts) {
    std::vector<VertexId> remap(h.n, -1);
    int next = 0;
    for (VertexId v : verts) {
        if (v < 0 || v >= h.n) throw VertexOutOfRange();
        if (remap[v] < 0) remap[v] = next++;
    }
    std::vector<Edge> kept;
    for (const auto& e : h.edges) {
        bool inside = true;
        for (VertexId v : e)
            if (remap[v] < 0) { inside = false; break; }
        if (!inside) continue;
        Edge f = e;
        for (VertexId& v : f) v = remap[v];
        kept.push_back(std::move(f));
    }
    return Hypergraph::make(h.k, next, std::move(kept));
}

bool edges_contains(const Hypergraph& h, const Edge& e) {
    Edge s = e;
    std::sort(s.begin(), s.end());
    return std::binary_search(h.edges.begin(), h.edges.end(), s);
}

int index_of_edge(const Hypergraph& h, const Edge& e) {
    Edge s = e;
    std::sort(s.begin(), s.end());
    auto it = std::lower_bound(h.edges.begin(), h.edges.end(), s);
    if (it == h.edges.end() || *it != s) return -1;
    return static_cast<int>(it - h.edges.begin());
}

Hypergraph disjoint_union(const Hypergraph& a, const Hypergraph& b) {
    if (a.k != b.k) throw BadParams("uniformity mismatch in union");
    std::vector<Edge> es = a.edges;
    for (Edge e : b.edges) {
        for (VertexId& v : e) v += a.n;
        es.push_back(std::move(e));
    }
    return Hypergraph::make(a.k, a.n + b.n, std::move(es));
}

} // namespace hypermatch
