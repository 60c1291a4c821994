#include <hypermatch/matchpoly.hpp>

#include <hypermatch/canonical.hpp>

#include <algorithm>
#include <unordered_map>

namespace hypermatch {

namespace {

void trim_counts(std::vector<Int>& counts) {
    while (counts.size() > 1 && counts.back() == 0) counts.pop_back();
}

void oracle_rec(const std::vector<std::vector<uint64_t>>& masks, size_t next,
                const std::vector<uint64_t>& used, int r,
                std::vector<Int>& counts) {
    for (size_t j = next; j < masks.size(); ++j) {
        bool disjoint = true;
        for (size_t w = 0; w < used.size(); ++w)
            if (masks[j][w] & used[w]) { disjoint = false; break; }
        if (!disjoint) continue;
        if (static_cast<size_t>(r + 1) >= counts.size()) counts.resize(r + 2, 0);
        counts[r + 1] += 1;
        std::vector<uint64_t> u2 = used;
        for (size_t w = 0; w < u2.size(); ++w) u2[w] |= masks[j][w];
        oracle_rec(masks, j + 1, u2, r + 1, counts);
    }
}

} // namespace

MatchingSpectrum matching_counts_oracle(const Hypergraph& h) {
    if (h.m() > 20) throw SizeLimitExceeded("oracle limited to m <= 20");
    size_t words = (h.n + 63) / 64;
    if (words == 0) words = 1;
    std::vector<std::vector<uint64_t>> masks(h.m(), std::vector<uint64_t>(words, 0));
    for (int i = 0; i < h.m(); ++i)
        for (VertexId v : h.edges[i]) masks[i][v / 64] |= uint64_t(1) << (v % 64);
    std::vector<Int> counts{1};
    std::vector<uint64_t> used(words, 0);
    oracle_rec(masks, 0, used, 0, counts);
    trim_counts(counts);
    return MatchingSpectrum{h.k, h.n, std::move(counts)};
}

namespace {

struct CountsMemo {
    std::unordered_map<std::string, std::vector<Int>> table;
};

std::vector<Int> counts_rec(const Hypergraph& stripped, CountsMemo& memo) {
    if (stripped.m() == 0) return {1};
    if (stripped.m() == 1) return {1, 1};
    std::string key = canonical_code(stripped, /*max_n=*/1 << 20);
    auto it = memo.table.find(key);
    if (it != memo.table.end()) return it->second;

    // Recurrence edge: lexicographically first edge through a max-degree
    // vertex, so the closed removal shrinks the graph fastest.
    auto deg = degree_sequence(stripped);
    VertexId v = static_cast<VertexId>(
        std::max_element(deg.begin(), deg.end()) - deg.begin());
    int ei = incident_edges(stripped, v).front();

    Hypergraph del = strip_isolated(delete_edge(stripped, ei));
    Hypergraph rem = strip_isolated(remove_edge_closed(stripped, ei));
    std::vector<Int> a = counts_rec(del, memo);
    std::vector<Int> b = counts_rec(rem, memo);

    std::vector<Int> counts(std::max(a.size(), b.size() + 1), 0);
    for (size_t r = 0; r < a.size(); ++r) counts[r] += a[r];
    for (size_t r = 0; r < b.size(); ++r) counts[r + 1] += b[r];
    trim_counts(counts);
    memo.table.emplace(std::move(key), counts);
    return counts;
}

} // namespace

MatchingSpectrum matching_counts(const Hypergraph& h) {
    CountsMemo memo;
    std::vector<Int> counts = counts_rec(strip_isolated(h), memo);
    return MatchingSpectrum{h.k, h.n, std::move(counts)};
}

SignedPolynomial matching_polynomial(const MatchingSpectrum& s) {
    SignedPolynomial mu;
    for (size_t r = 0; r < s.counts.size(); ++r) {
        Int c = s.counts[r];
        if (r % 2 == 1) c = -c;
        mu.add_term(s.n - s.k * static_cast<long>(r), c);
    }
    return mu;
}

SignedPolynomial matching_polynomial(const Hypergraph& h) {
    return matching_polynomial(matching_counts(h));
}

} // namespace hypermatch
