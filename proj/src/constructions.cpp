#include <hypermatch/constructions.hpp>

#include <hypermatch/transform.hpp>

#include <numeric>

namespace hypermatch {

Hypergraph k_star(int k, int m) {
    if (k < 2 || m < 0) throw BadParams("k_star requires k >= 2, m >= 0");
    std::vector<Edge> edges;
    int next = 1;
    for (int i = 0; i < m; ++i) {
        Edge e{0};
        for (int j = 0; j < k - 1; ++j) e.push_back(next++);
        edges.push_back(std::move(e));
    }
    return Hypergraph::make(k, m * (k - 1) + 1, std::move(edges));
}

Hypergraph k_cycle(int k, int len) {
    if (k < 2 || len < 2) throw BadParams("k_cycle requires k >= 2, len >= 2");
    if (len == 2) {
        if (k < 3) throw BadParams("length-2 cycles need k >= 3");
        // two edges overlapping in exactly the pair {0, 1}
        int n = 2 + 2 * (k - 2);
        Edge e1{0, 1}, e2{0, 1};
        for (int j = 0; j < k - 2; ++j) e1.push_back(2 + j);
        for (int j = 0; j < k - 2; ++j) e2.push_back(k + j);
        return Hypergraph::make(k, n, {e1, e2});
    }
    // linear cycle: corner vertices 0..len-1, each edge padded with k-2 fresh
    std::vector<Edge> edges;
    int next = len;
    for (int i = 0; i < len; ++i) {
        Edge e{i, (i + 1) % len};
        for (int j = 0; j < k - 2; ++j) e.push_back(next++);
        edges.push_back(std::move(e));
    }
    return Hypergraph::make(k, len * (k - 1), std::move(edges));
}

Hypergraph power_hypergraph(const Hypergraph& graph2, int k_target) {
    if (graph2.k != 2) throw NotAGraph("power of a non-2-graph");
    if (k_target < 3) throw BadParams("power requires k >= 3");
    std::vector<Edge> edges;
    int next = graph2.n;
    for (const auto& e : graph2.edges) {
        Edge f = e;
        for (int j = 0; j < k_target - 2; ++j) f.push_back(next++);
        edges.push_back(std::move(f));
    }
    return Hypergraph::make(k_target, next, std::move(edges));
}

Hypergraph extremal_H(int k, int m, int t) {
    if (k < 3 || t < 0 || m < 2 * t)
        throw BadParams("extremal_H requires k >= 3, t >= 0, m >= 2t");
    std::vector<Edge> edges;
    int next = 1;
    for (int c = 0; c < t; ++c) {
        int shared = next++; // the 2-cycle overlaps in {0, shared}
        Edge e1{0, shared}, e2{0, shared};
        for (int j = 0; j < k - 2; ++j) e1.push_back(next++);
        for (int j = 0; j < k - 2; ++j) e2.push_back(next++);
        edges.push_back(std::move(e1));
        edges.push_back(std::move(e2));
    }
    for (int i = 0; i < m - 2 * t; ++i) {
        Edge e{0};
        for (int j = 0; j < k - 1; ++j) e.push_back(next++);
        edges.push_back(std::move(e));
    }
    return Hypergraph::make(k, next, std::move(edges));
}

Hypergraph extremal_L(int k, int m, int t) {
    if (k < 2 || t < 0 || m < 3 * t)
        throw BadParams("extremal_L requires k >= 2, t >= 0, m >= 3t");
    std::vector<Edge> edges;
    int next = 1;
    for (int c = 0; c < t; ++c) {
        int b = next++;
        int d = next++;
        Edge e1{0, b}, e2{b, d}, e3{d, 0};
        for (int j = 0; j < k - 2; ++j) e1.push_back(next++);
        for (int j = 0; j < k - 2; ++j) e2.push_back(next++);
        for (int j = 0; j < k - 2; ++j) e3.push_back(next++);
        edges.push_back(std::move(e1));
        edges.push_back(std::move(e2));
        edges.push_back(std::move(e3));
    }
    for (int i = 0; i < m - 3 * t; ++i) {
        Edge e{0};
        for (int j = 0; j < k - 1; ++j) e.push_back(next++);
        edges.push_back(std::move(e));
    }
    return Hypergraph::make(k, next, std::move(edges));
}

Hypergraph complete_k_graph(int n, int k) {
    if (k < 2 || n < k) throw BadParams("complete graph requires n >= k >= 2");
    std::vector<Edge> edges;
    Edge cur(k);
    std::iota(cur.begin(), cur.end(), 0);
    while (true) {
        edges.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return Hypergraph::make(k, n, std::move(edges));
}

Hypergraph complete_plus_star(int n, int p, int k) {
    if (p < 0) throw BadParams("negative pendant count");
    Hypergraph kn = complete_k_graph(n, k);
    if (p == 0) return kn;
    Hypergraph star = k_star(k, p);
    StarJoinSpec spec{kn, {0}, {StarJoinPart{star, 0}}};
    return star_join(spec).joined;
}

} // namespace hypermatch
