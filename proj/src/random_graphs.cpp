#include <hypermatch/random_graphs.hpp>

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

namespace hypermatch {

uint64_t seed_from_env() {
    if (const char* s = std::getenv("HYPERMATCH_SEED")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(s, &end, 10);
        if (end && *end == '\0') return static_cast<uint64_t>(v);
    }
    return kDefaultSeed;
}

Rng rng_for_instance(uint64_t seed, uint64_t instance) {
    // splitmix step decorrelates consecutive instance streams
    uint64_t z = seed + 0x9e3779b97f4a7c15ull * (instance + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    z = z ^ (z >> 31);
    return Rng(z);
}

namespace {

Edge random_edge(int k, int n, Rng& rng) {
    std::vector<VertexId> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    for (int i = 0; i < k; ++i) {
        std::uniform_int_distribution<int> pick(i, n - 1);
        std::swap(pool[i], pool[pick(rng)]);
    }
    Edge e(pool.begin(), pool.begin() + k);
    std::sort(e.begin(), e.end());
    return e;
}

} // namespace

Hypergraph random_kgraph(int k, int n, int m, Rng& rng) {
    if (n < k) throw BadParams("random_kgraph: n < k");
    std::set<Edge> chosen;
    int guard = 0;
    while (static_cast<int>(chosen.size()) < m) {
        chosen.insert(random_edge(k, n, rng));
        if (++guard > 1000 * (m + 1))
            throw BadParams("random_kgraph: cannot place distinct edges");
    }
    return Hypergraph::make(k, n, {chosen.begin(), chosen.end()});
}

Hypergraph random_ktree(int k, int m, Rng& rng) {
    if (m < 1) throw BadParams("random_ktree: m < 1");
    std::vector<Edge> edges;
    Edge first(k);
    std::iota(first.begin(), first.end(), 0);
    edges.push_back(first);
    int n = k;
    for (int i = 1; i < m; ++i) {
        std::uniform_int_distribution<int> pick(0, n - 1);
        VertexId at = pick(rng);
        Edge e{at};
        for (int j = 0; j < k - 1; ++j) e.push_back(n++);
        edges.push_back(std::move(e));
    }
    return Hypergraph::make(k, n, std::move(edges));
}

Hypergraph random_connected_kgraph(int k, int m, Rng& rng, int n_hint) {
    if (m < 1) throw BadParams("random_connected_kgraph: m < 1");
    int n_max = k + (m - 1) * (k - 1);
    int n = n_hint > 0 ? std::min(n_hint, n_max) : n_max;
    for (int attempt = 0; attempt < 400; ++attempt) {
        // bias toward denser graphs: smaller pools connect more often
        std::uniform_int_distribution<int> pick_n(k, std::max(k, n));
        int nn = pick_n(rng);
        if (static_cast<long>(m) > 0) {
            // ensure enough distinct k-sets exist
            long cap = 1;
            for (int i = 0; i < k; ++i) cap = cap * (nn - i) / (i + 1);
            if (cap < m) continue;
        }
        Hypergraph h = random_kgraph(k, nn, m, rng);
        Hypergraph s = strip_isolated(h);
        if (s.n >= 1 && s.m() == m && is_connected(s)) return s;
    }
    // fall back: tree plus random shifts of leaves into existing vertices
    return random_ktree(k, m, rng);
}

} // namespace hypermatch
