#include <hypermatch/canonical.hpp>

#include <algorithm>
#include <numeric>
#include <set>

namespace hypermatch {

namespace {

using EdgeList = std::vector<Edge>;

struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

// Minimal-code canonical labeling of a connected hypergraph. The sorted
// edge list of the optimal labeling can always be built left to right,
// giving each edge's unseen vertices the next consecutive labels (an
// exchange argument on any labeling violating this strictly lowers the
// list). The search walks exactly these constructions, prunes any branch
// whose next vector exceeds the best list at that position, and collapses
// automorphic siblings detected through twin vertices (transpositions that
// preserve the edge set) and twin edges (positional swaps of two edges'
// private vertices that preserve the edge set).
struct CanonSearch {
    const Hypergraph& h;
    int n, m, k;
    std::vector<int> label;   // old -> new, -1 unassigned
    std::vector<char> placed; // per edge
    int used = 0;
    EdgeList prefix;
    EdgeList best;
    bool have_best = false;

    std::vector<int> vclass; // twin-vertex class per vertex

    explicit CanonSearch(const Hypergraph& g)
        : h(g), n(g.n), m(g.m()), k(g.k), label(g.n, -1), placed(g.m(), 0) {
        compute_vertex_twins();
        compute_edge_twins();
    }

    bool is_edge(const Edge& e) const {
        return std::binary_search(h.edges.begin(), h.edges.end(), e);
    }

    bool swap_is_automorphism(VertexId x, VertexId y) const {
        for (const Edge& e : h.edges) {
            bool hx = std::binary_search(e.begin(), e.end(), x);
            bool hy = std::binary_search(e.begin(), e.end(), y);
            if (hx == hy) continue;
            Edge img;
            img.reserve(k);
            for (VertexId v : e) {
                if (v == x)
                    img.push_back(y);
                else if (v == y)
                    img.push_back(x);
                else
                    img.push_back(v);
            }
            std::sort(img.begin(), img.end());
            if (!is_edge(img)) return false;
        }
        return true;
    }

    void compute_vertex_twins() {
        Dsu d(n);
        auto deg = degree_sequence(h);
        for (VertexId x = 0; x < n; ++x)
            for (VertexId y = x + 1; y < n; ++y) {
                if (deg[x] != deg[y]) continue;
                if (d.find(x) == d.find(y)) continue;
                if (swap_is_automorphism(x, y)) d.unite(x, y);
            }
        vclass.resize(n);
        for (VertexId v = 0; v < n; ++v) vclass[v] = d.find(v);
    }

    // permutation swapping sorted(e \ f) with sorted(f \ e) positionally
    bool edge_swap_is_automorphism(int ei, int fi, std::vector<int>& perm) const {
        const Edge& e = h.edges[ei];
        const Edge& f = h.edges[fi];
        std::vector<VertexId> de, df;
        std::set_difference(e.begin(), e.end(), f.begin(), f.end(),
                            std::back_inserter(de));
        std::set_difference(f.begin(), f.end(), e.begin(), e.end(),
                            std::back_inserter(df));
        perm.resize(n);
        std::iota(perm.begin(), perm.end(), 0);
        for (size_t i = 0; i < de.size(); ++i) {
            perm[de[i]] = df[i];
            perm[df[i]] = de[i];
        }
        for (const Edge& g : h.edges) {
            Edge img;
            img.reserve(k);
            for (VertexId v : g) img.push_back(perm[v]);
            std::sort(img.begin(), img.end());
            if (!is_edge(img)) return false;
        }
        return true;
    }

    // twin_of[f]: (e, positional swap permutation) for every twin e < f
    std::vector<std::vector<std::pair<int, std::vector<int>>>> twin_of;

    void compute_edge_twins() {
        twin_of.assign(m, {});
        std::vector<int> perm;
        for (int f = 0; f < m; ++f)
            for (int e = 0; e < f; ++e)
                if (edge_swap_is_automorphism(e, f, perm))
                    twin_of[f].emplace_back(e, perm);
    }

    struct Branch {
        Edge vec;
        int edge;
        std::vector<VertexId> slots; // fresh vertices in label order
        std::string key;
    };

    void descend() {
        int i = static_cast<int>(prefix.size());
        if (i == m) {
            if (!have_best || prefix < best) {
                best = prefix;
                have_best = true;
            }
            return;
        }
        // equality with the best list so far allows pruning on the next vector
        bool tied = have_best &&
                    std::equal(prefix.begin(), prefix.end(), best.begin());

        std::vector<Branch> branches;
        std::set<std::string> seen_keys;
        for (int e = 0; e < m; ++e) {
            if (placed[e]) continue;
            Edge lab;
            std::vector<VertexId> fresh;
            for (VertexId v : h.edges[e]) {
                if (label[v] >= 0)
                    lab.push_back(label[v]);
                else
                    fresh.push_back(v);
            }
            Edge vec = lab;
            for (size_t j = 0; j < fresh.size(); ++j)
                vec.push_back(used + static_cast<int>(j));
            std::sort(vec.begin(), vec.end());
            if (i > 0 && vec < prefix.back()) continue;
            if (tied && vec > best[i]) continue;

            // rep mapping: the smallest twin whose positional swap fixes
            // every labeled vertex (support entirely unlabeled)
            int rep = e;
            const std::vector<int>* map = nullptr;
            for (const auto& [cand, perm] : twin_of[e]) {
                bool clean = true;
                for (VertexId v = 0; v < n && clean; ++v)
                    if (perm[v] != v && label[v] >= 0) clean = false;
                if (clean) {
                    rep = cand;
                    map = &perm;
                    break;
                }
            }
            std::sort(fresh.begin(), fresh.end());
            do {
                std::string key;
                key += static_cast<char>(rep & 0xff);
                key += static_cast<char>((rep >> 8) & 0xff);
                for (VertexId v : vec) {
                    key += static_cast<char>(v & 0xff);
                }
                for (VertexId v : fresh) {
                    VertexId w = map ? (*map)[v] : v;
                    int c = vclass[w];
                    key += static_cast<char>(c & 0xff);
                    key += static_cast<char>((c >> 8) & 0xff);
                }
                if (seen_keys.insert(key).second)
                    branches.push_back(Branch{vec, e, fresh, std::move(key)});
            } while (std::next_permutation(fresh.begin(), fresh.end()));
        }

        std::sort(branches.begin(), branches.end(),
                  [](const Branch& a, const Branch& b) {
                      if (a.vec != b.vec) return a.vec < b.vec;
                      return a.key < b.key;
                  });

        for (const Branch& b : branches) {
            // best may have tightened since the branch list was built
            if (have_best &&
                std::equal(prefix.begin(), prefix.end(), best.begin()) &&
                b.vec > best[i])
                break;
            placed[b.edge] = 1;
            for (size_t j = 0; j < b.slots.size(); ++j)
                label[b.slots[j]] = used + static_cast<int>(j);
            used += static_cast<int>(b.slots.size());
            prefix.push_back(b.vec);

            descend();

            prefix.pop_back();
            used -= static_cast<int>(b.slots.size());
            for (VertexId v : b.slots) label[v] = -1;
            placed[b.edge] = 0;
        }
    }
};

Hypergraph canon_connected(const Hypergraph& h) {
    if (h.m() == 0) return h; // single vertex or empty
    CanonSearch s(h);
    s.descend();
    return Hypergraph::make(h.k, h.n, std::move(s.best));
}

} // namespace

Hypergraph canonical_form(const Hypergraph& h, int max_n) {
    if (h.n > max_n)
        throw SizeLimitExceeded("canonical_form: n = " + std::to_string(h.n) +
                                " exceeds cap " + std::to_string(max_n));
    auto comps = components(h);
    if (comps.size() <= 1) return canon_connected(h);

    struct Part {
        Hypergraph canon;
        std::string key;
    };
    std::vector<Part> parts;
    parts.reserve(comps.size());
    for (const auto& c : comps) {
        Hypergraph sub = induced_subgraph(h, c);
        Hypergraph cf = canon_connected(sub);
        std::string key = pack_code(cf);
        parts.push_back(Part{std::move(cf), std::move(key)});
    }
    std::stable_sort(parts.begin(), parts.end(), [](const Part& a, const Part& b) {
        if (a.canon.n != b.canon.n) return a.canon.n < b.canon.n;
        if (a.canon.m() != b.canon.m()) return a.canon.m() < b.canon.m();
        return a.key < b.key;
    });
    std::vector<Edge> edges;
    int offset = 0;
    for (const auto& p : parts) {
        for (Edge e : p.canon.edges) {
            for (VertexId& v : e) v += offset;
            edges.push_back(std::move(e));
        }
        offset += p.canon.n;
    }
    return Hypergraph::make(h.k, h.n, std::move(edges));
}

std::string pack_code(const Hypergraph& h) {
    std::string code;
    code.reserve(8 + h.edges.size() * h.k * 2);
    auto push16 = [&code](int x) {
        code += static_cast<char>(x & 0xff);
        code += static_cast<char>((x >> 8) & 0xff);
    };
    push16(h.k);
    push16(h.n);
    push16(h.m());
    for (const auto& e : h.edges)
        for (VertexId v : e) push16(v);
    return code;
}

std::string canonical_code(const Hypergraph& h, int max_n) {
    return pack_code(canonical_form(h, max_n));
}

bool is_isomorphic(const Hypergraph& a, const Hypergraph& b, int max_n) {
    if (a.k != b.k || a.n != b.n || a.m() != b.m()) return false;
    auto da = degree_sequence(a), db = degree_sequence(b);
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    return canonical_form(a, max_n) == canonical_form(b, max_n);
}

} // namespace hypermatch
