#include <hypermatch/census.hpp>

#include <hypermatch/canonical.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hypermatch {

namespace {

void check_budget(int k, int m) {
    if (k == 2) {
        if (m > 7) throw SizeLimitExceeded("census budget: k=2 needs m <= 7");
    } else if (k == 3) {
        if (m > 5) throw SizeLimitExceeded("census budget: k=3 needs m <= 5");
    } else {
        int n_max = k + (m - 1) * (k - 1);
        if (n_max > 14)
            throw SizeLimitExceeded("census budget: k + (m-1)(k-1) <= 14");
    }
}

bool cactus_pair_condition(const Hypergraph& h,
                           const std::vector<CycleRecord>& cycles) {
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

// Partial feasibility filter: violations of these are preserved by adding
// edges, so offenders can be discarded at any level.
bool viable_prefix(const Hypergraph& h, int t, bool linear) {
    if (linear && !is_linear(h)) return false;
    for (int i = 0; i < h.m(); ++i)
        for (int j = i + 1; j < h.m(); ++j) {
            std::vector<VertexId> inter;
            std::set_intersection(h.edges[i].begin(), h.edges[i].end(),
                                  h.edges[j].begin(), h.edges[j].end(),
                                  std::back_inserter(inter));
            if (inter.size() >= 3) return false;
        }
    auto cycles = find_cycles(h, h.m());
    if (static_cast<int>(cycles.size()) > t) return false;
    return cactus_pair_condition(h, cycles);
}

// All k-subsets of extended vertex set using 0..f-1 fresh ids beyond n;
// fresh ids are used consecutively so interchangeable fresh vertices do not
// multiply candidates.
std::vector<Edge> candidate_edges(const Hypergraph& h) {
    std::vector<Edge> out;
    int n = h.n;
    for (int fresh = 0; fresh <= h.k - 1; ++fresh) {
        int take = h.k - fresh; // existing vertices used
        if (take < 1 || take > n) continue;
        // all take-subsets of [0, n)
        std::vector<int> idx(take);
        for (int i = 0; i < take; ++i) idx[i] = i;
        while (true) {
            Edge e(idx.begin(), idx.end());
            for (int j = 0; j < fresh; ++j) e.push_back(n + j);
            if (!edges_contains(h, e)) out.push_back(e);
            int i = take - 1;
            while (i >= 0 && idx[i] == n - take + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < take; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return out;
}

Hypergraph with_edge(const Hypergraph& h, const Edge& e) {
    int n = h.n;
    for (VertexId v : e) n = std::max(n, v + 1);
    std::vector<Edge> es = h.edges;
    es.push_back(e);
    return Hypergraph::make(h.k, n, std::move(es));
}

// Level-by-level growth of connected graphs with a pruning predicate.
// Returns canonical representatives with exactly m edges.
std::vector<Hypergraph> grow(int k, int m,
                             const std::function<bool(const Hypergraph&)>& keep) {
    Hypergraph seed = Hypergraph::make(k, k, {[&] {
                                           Edge e(k);
                                           for (int i = 0; i < k; ++i) e[i] = i;
                                           return e;
                                       }()});
    std::vector<Hypergraph> level{seed};
    if (!keep(seed)) level.clear();
    for (int sz = 2; sz <= m; ++sz) {
        std::set<std::string> seen;
        std::vector<Hypergraph> next;
        std::vector<std::vector<Hypergraph>> local(
#ifdef _OPENMP
            omp_get_max_threads()
#else
            1
#endif
        );
        std::vector<std::set<std::string>> local_seen(local.size());
#pragma omp parallel for schedule(dynamic)
        for (size_t gi = 0; gi < level.size(); ++gi) {
#ifdef _OPENMP
            int tid = omp_get_thread_num();
#else
            int tid = 0;
#endif
            const Hypergraph& g = level[gi];
            for (const Edge& e : candidate_edges(g)) {
                Hypergraph cand = with_edge(g, e);
                if (!keep(cand)) continue;
                Hypergraph cf = canonical_form(cand, 64);
                if (local_seen[tid].insert(pack_code(cf)).second)
                    local[tid].push_back(std::move(cf));
            }
        }
        for (size_t tid = 0; tid < local.size(); ++tid)
            for (auto& g : local[tid]) {
                if (seen.insert(pack_code(g)).second) next.push_back(std::move(g));
            }
        std::sort(next.begin(), next.end(), [](const Hypergraph& a, const Hypergraph& b) {
            if (a.n != b.n) return a.n < b.n;
            return a.edges < b.edges;
        });
        level = std::move(next);
    }
    return level;
}

} // namespace

std::vector<Hypergraph> connected_kgraphs(int k, int m, int max_n) {
    return grow(k, m, [max_n](const Hypergraph& h) { return h.n <= max_n; });
}

CactusCensus enumerate_census(int k, int m, int t, bool linear) {
    if (k < 2 || m < 1 || t < 0) throw BadParams("census parameters");
    check_budget(k, m);
    CactusCensus out;
    out.k = k;
    out.m = m;
    out.t = t;
    out.linear = linear;
    auto all = grow(k, m, [t, linear](const Hypergraph& h) {
        return viable_prefix(h, t, linear);
    });
    for (auto& g : all) {
        auto cycles = find_cycles(g, g.m());
        if (static_cast<int>(cycles.size()) != t) continue;
        if (!is_cactus(g)) continue;           // includes connectivity
        if (linear && !is_linear(g)) continue; // already pruned, re-checked
        out.members.push_back(std::move(g));
    }
    return out;
}

CactusCensus naive_census(int k, int m, int t, bool linear) {
    if (k < 2 || m < 1 || t < 0) throw BadParams("census parameters");
    CactusCensus out;
    out.k = k;
    out.m = m;
    out.t = t;
    out.linear = linear;
    int n_max = k + (m - 1) * (k - 1);
    std::set<std::string> seen;
    for (int n = k; n <= n_max; ++n) {
        // all k-subsets of [0, n)
        std::vector<Edge> universe;
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            universe.emplace_back(idx.begin(), idx.end());
            int i = k - 1;
            while (i >= 0 && idx[i] == n - k + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (static_cast<int>(universe.size()) < m) continue;
        // all m-subsets of the universe
        std::vector<int> pick(m);
        for (int i = 0; i < m; ++i) pick[i] = i;
        int u = static_cast<int>(universe.size());
        while (true) {
            std::vector<Edge> es;
            es.reserve(m);
            for (int i : pick) es.push_back(universe[i]);
            Hypergraph h = Hypergraph::make(k, n, std::move(es));
            bool covered = true;
            auto deg = degree_sequence(h);
            for (int v = 0; v < n; ++v)
                if (deg[v] == 0) { covered = false; break; }
            if (covered && is_connected(h) &&
                static_cast<int>(find_cycles(h, m).size()) == t &&
                is_cactus(h) && (!linear || is_linear(h))) {
                Hypergraph cf = canonical_form(h, 64);
                if (seen.insert(pack_code(cf)).second)
                    out.members.push_back(std::move(cf));
            }
            int i = m - 1;
            while (i >= 0 && pick[i] == u - m + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < m; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    std::sort(out.members.begin(), out.members.end(),
              [](const Hypergraph& a, const Hypergraph& b) {
                  if (a.n != b.n) return a.n < b.n;
                  return a.edges < b.edges;
              });
    return out;
}

void census_lambdas_serial(CactusCensus& census, const Rat& eps) {
    census.lambdas.assign(census.members.size(), LambdaValue{});
    for (size_t i = 0; i < census.members.size(); ++i)
        census.lambdas[i] = largest_matching_root(census.members[i], eps);
}

void census_lambdas(CactusCensus& census, const Rat& eps) {
    census.lambdas.assign(census.members.size(), LambdaValue{});
#pragma omp parallel for schedule(dynamic)
    for (size_t i = 0; i < census.members.size(); ++i)
        census.lambdas[i] = largest_matching_root(census.members[i], eps);
}

} // namespace hypermatch
