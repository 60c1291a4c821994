#include <hypermatch/verify.hpp>

#include <hypermatch/canonical.hpp>
#include <hypermatch/constructions.hpp>
#include <hypermatch/matchpoly.hpp>
#include <hypermatch/tensor.hpp>
#include <hypermatch/transform.hpp>
#include <hypermatch/walktree.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

namespace hypermatch {

const char* to_string(VerifyStatus s) {
    switch (s) {
        case VerifyStatus::CONFIRMED: return "CONFIRMED";
        case VerifyStatus::COUNTEREXAMPLE: return "COUNTEREXAMPLE";
        case VerifyStatus::UNDECIDED: return "UNDECIDED";
    }
    return "?";
}

namespace {

// Two-edge witness for strictness of the shift: e at u, f at v, disjoint,
// and the shifted set of f is not an edge; plus non-isomorphism.
bool strictness_witness(const Hypergraph& h, VertexId u, VertexId v,
                        const Hypergraph& shifted) {
    if (is_isomorphic(h, shifted, 64)) return false;
    auto eu = incident_edges(h, u);
    auto ev = incident_edges(h, v);
    for (int ei : eu) {
        const Edge& e = h.edges[ei];
        for (int fi : ev) {
            const Edge& f = h.edges[fi];
            std::vector<VertexId> inter;
            std::set_intersection(e.begin(), e.end(), f.begin(), f.end(),
                                  std::back_inserter(inter));
            if (!inter.empty()) continue;
            Edge target;
            for (VertexId w : f)
                if (w != v) target.push_back(w);
            target.push_back(u);
            std::sort(target.begin(), target.end());
            if (!edges_contains(h, target)) return true;
        }
    }
    return false;
}

std::string describe(const Hypergraph& h) {
    std::ostringstream os;
    os << "k=" << h.k << " n=" << h.n << " edges={";
    for (size_t i = 0; i < h.edges.size(); ++i) {
        os << (i ? "," : "") << "{";
        for (size_t j = 0; j < h.edges[i].size(); ++j)
            os << (j ? " " : "") << h.edges[i][j];
        os << "}";
    }
    os << "}";
    return os.str();
}

} // namespace

VerificationReport verify_maximizer(CactusCensus& census) {
    VerificationReport rep;
    rep.theorem = census.linear ? "maximizer-linear-cactus" : "maximizer-cactus";
    if (census.members.empty()) throw BadParams("empty census");
    if (!census.linear && census.k < 3)
        throw BadParams("full cactus census maximizers need k >= 3");
    if (census.lambdas.size() != census.members.size()) census_lambdas(census);

    // certified maximizer set
    std::vector<size_t> best{0};
    for (size_t i = 1; i < census.members.size(); ++i) {
        LambdaOrder o = compare_lambda_values(census.lambdas[i],
                                              census.lambdas[best[0]]);
        if (o == LambdaOrder::EQ) {
            rep.status = VerifyStatus::UNDECIDED;
            rep.detail = "uncertified tie while selecting maximizers";
            rep.witness = census.members[i];
            return rep;
        }
        if (o == LambdaOrder::GT) {
            best.assign(1, i);
        } else if (o == LambdaOrder::EQ_CERTIFIED) {
            best.push_back(i);
        }
    }

    std::set<std::string> got;
    for (size_t i : best) got.insert(pack_code(census.members[i]));

    std::set<std::string> expect;
    if (census.linear) {
        expect.insert(canonical_code(extremal_L(census.k, census.m, census.t)));
    } else {
        expect.insert(canonical_code(extremal_H(census.k, census.m, census.t)));
        if (census.m == 3 && census.t == 1)
            expect.insert(canonical_code(extremal_L(census.k, census.m, census.t)));
    }

    rep.instances = static_cast<long>(census.members.size());
    if (got == expect) {
        rep.status = VerifyStatus::CONFIRMED;
        std::ostringstream os;
        os << "maximizer set of size " << got.size() << " matches expected family";
        rep.detail = os.str();
    } else {
        rep.status = VerifyStatus::COUNTEREXAMPLE;
        rep.detail = "maximizer set differs from the expected family";
        rep.witness = census.members[best[0]];
    }
    return rep;
}

namespace {

struct ShiftCheck {
    bool violated = false;       // a certified decrease: lambda(H) > lambda(S)
    bool strict_required = false;
    bool strict_failed = false;  // witness held but no strict increase
    bool mu_equal = false;       // ... with literally equal polynomials
    Hypergraph witness;
};

ShiftCheck shift_check_one(int k, int max_edges, uint64_t seed, uint64_t i) {
    Rng rng = rng_for_instance(seed, i);
    std::uniform_int_distribution<int> pick_m(1, max_edges);
    Hypergraph h = random_connected_kgraph(k, pick_m(rng), rng);
    ShiftCheck out;
    if (h.n < 2) return out;
    std::uniform_int_distribution<int> pick_v(0, h.n - 1);
    VertexId u = pick_v(rng), v = pick_v(rng);
    while (v == u) v = pick_v(rng);
    Hypergraph s = shift_hypergraph(h, ShiftSpec{u, v});
    LambdaOrder o = compare_lambda(h, s);
    if (o == LambdaOrder::GT) {
        out.violated = true;
        out.witness = h;
        return out;
    }
    if (strictness_witness(h, u, v, s)) {
        out.strict_required = true;
        if (o != LambdaOrder::LT) {
            out.strict_failed = true;
            out.mu_equal = matching_polynomial(h) == matching_polynomial(s);
            out.witness = h;
        }
    }
    return out;
}

template <typename Fn>
VerificationReport sweep_report(const std::string& name, int samples, Fn&& one,
                                bool parallel) {
    std::vector<ShiftCheck> results(samples);
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < samples; ++i) results[i] = one(i);
    } else {
        for (int i = 0; i < samples; ++i) results[i] = one(i);
    }
    VerificationReport rep;
    rep.theorem = name;
    rep.instances = samples;
    long strict_cases = 0, decreases = 0, strict_failures = 0, mu_equal = 0;
    for (const auto& r : results) {
        if (r.strict_required) ++strict_cases;
        if (r.violated) ++decreases;
        if (r.strict_failed) {
            ++strict_failures;
            if (r.mu_equal) ++mu_equal;
            if (!rep.witness) rep.witness = r.witness;
        }
        if (r.violated && !rep.witness) rep.witness = r.witness;
    }
    std::ostringstream os;
    os << samples << " instances, " << decreases << " certified decreases, "
       << strict_cases << " with the strictness witness, " << strict_failures
       << " of those without a strict increase";
    if (strict_failures > 0)
        os << " (" << mu_equal << " with identical matching polynomials)";
    rep.detail = os.str();
    rep.status = (decreases == 0 && strict_failures == 0)
                     ? VerifyStatus::CONFIRMED
                     : VerifyStatus::COUNTEREXAMPLE;
    return rep;
}

} // namespace

VerificationReport verify_shift_monotonicity(int samples, int k, int max_edges,
                                             uint64_t seed) {
    return sweep_report(
        "shift-monotonicity", samples,
        [&](int i) { return shift_check_one(k, max_edges, seed, i); }, true);
}

VerificationReport verify_shift_monotonicity_serial(int samples, int k,
                                                    int max_edges, uint64_t seed) {
    return sweep_report(
        "shift-monotonicity", samples,
        [&](int i) { return shift_check_one(k, max_edges, seed, i); }, false);
}

VerificationReport verify_pendant_theorem(int k, int n, int p) {
    VerificationReport rep;
    rep.theorem = "pendant-complete";
    if (p < 1) throw BadParams("pendant theorem needs p >= 1");
    int base = n - p * (k - 1);
    if (base < k) throw BadParams("n too small for the base complete graph");

    // edge universe
    Hypergraph all = complete_k_graph(n, k);
    int u = all.m();
    if (u > 22) throw SizeLimitExceeded("pendant enumeration needs C(n,k) <= 22");

    Hypergraph expected = canonical_form(complete_plus_star(base, p, k), 64);

    std::set<std::string> seen;
    std::vector<Hypergraph> classes;
    for (uint64_t mask = 1; mask < (uint64_t(1) << u); ++mask) {
        std::vector<Edge> es;
        for (int i = 0; i < u; ++i)
            if (mask & (uint64_t(1) << i)) es.push_back(all.edges[i]);
        Hypergraph h = Hypergraph::make(k, n, std::move(es));
        if (!is_connected(h)) continue;
        if (static_cast<int>(pendant_edges(h).size()) != p) continue;
        Hypergraph cf = canonical_form(h, 64);
        if (seen.insert(pack_code(cf)).second) classes.push_back(std::move(cf));
    }
    rep.instances = static_cast<long>(classes.size());
    if (classes.empty()) {
        rep.status = VerifyStatus::UNDECIDED;
        rep.detail = "no graphs in the family";
        return rep;
    }

    std::vector<LambdaValue> lam(classes.size());
#pragma omp parallel for schedule(dynamic)
    for (size_t i = 0; i < classes.size(); ++i)
        lam[i] = largest_matching_root(classes[i]);
    std::vector<size_t> best{0};
    for (size_t i = 1; i < classes.size(); ++i) {
        LambdaOrder o = compare_lambda_values(lam[i], lam[best[0]]);
        if (o == LambdaOrder::GT)
            best.assign(1, i);
        else if (o == LambdaOrder::EQ_CERTIFIED)
            best.push_back(i);
        else if (o == LambdaOrder::EQ) {
            rep.status = VerifyStatus::UNDECIDED;
            rep.detail = "uncertified tie";
            return rep;
        }
    }

    bool unique_and_expected =
        best.size() == 1 && classes[best[0]] == expected;
    if (n < p * (k - 1) + k + 1) {
        rep.status = VerifyStatus::UNDECIDED;
        std::ostringstream os;
        os << "below the theorem's vertex bound; maximizer "
           << (unique_and_expected ? "matches" : "differs from")
           << " the complete-plus-star graph";
        rep.detail = os.str();
        rep.witness = classes[best[0]];
        return rep;
    }
    rep.status = unique_and_expected ? VerifyStatus::CONFIRMED
                                     : VerifyStatus::COUNTEREXAMPLE;
    if (!unique_and_expected) rep.witness = classes[best[0]];
    std::ostringstream os;
    os << classes.size() << " isomorphism classes, " << best.size()
       << " maximizer(s)";
    rep.detail = os.str();
    return rep;
}

namespace {

struct OrderingCheck {
    bool failed = false;
    std::string what;
    Hypergraph witness;
};

OrderingCheck ordering_check_one(uint64_t seed, uint64_t i) {
    Rng rng = rng_for_instance(seed, i ^ 0x5eedf00dull);
    OrderingCheck out;
    int k = (i % 2 == 0) ? 3 : 2;
    std::uniform_int_distribution<int> pick_m(2, 6);
    Hypergraph h = random_connected_kgraph(k, pick_m(rng), rng);

    auto fail = [&](const std::string& what, const Hypergraph& w) {
        out.failed = true;
        out.what = what;
        out.witness = w;
    };

    // spanning proper subgraph of a connected graph precedes strictly
    {
        std::uniform_int_distribution<int> pick_t(1, h.m() - 1);
        int t = pick_t(rng);
        Hypergraph g = h;
        for (int j = 0; j < t; ++j) {
            std::uniform_int_distribution<int> pick_e(0, g.m() - 1);
            g = delete_edge(g, pick_e(rng));
        }
        if (check_preceq(g, h) != PreceqResult::PRECEQ_STRICT)
            return fail("spanning proper subgraph not strictly below", h), out;
    }

    // identity is non-strict
    if (check_preceq(h, h) != PreceqResult::PRECEQ)
        return fail("identity not PRECEQ", h), out;

    // disconnected spanning comparison: strict beyond lambda at rational
    // sample points, and preceq overall
    {
        Rng rng2 = rng_for_instance(seed, i ^ 0xd15c0ull);
        Hypergraph other = random_connected_kgraph(k, pick_m(rng2), rng2);
        Hypergraph big = disjoint_union(h, other);
        std::uniform_int_distribution<int> pick_e(0, big.m() - 1);
        Hypergraph g = delete_edge(big, pick_e(rng2));
        PreceqResult pr = check_preceq(g, big);
        if (pr == PreceqResult::NEITHER)
            return fail("disconnected spanning subgraph not below", big), out;
        LambdaValue lv = largest_matching_root(big);
        Rat llo, lhi;
        lv.lambda_bounds(Rat(1, 1 << 20), llo, lhi);
        SignedPolynomial mg = matching_polynomial(g);
        SignedPolynomial mh = matching_polynomial(big);
        for (const Rat& off : {Rat(1, 16), Rat(1), Rat(5)}) {
            Rat x = lhi + off;
            if (!(mg.eval(x) > mh.eval(x)))
                return fail("no strict gap beyond lambda", big), out;
        }
    }

    // shift deletion inequality: lambda(S) > max(lambda(S\e), lambda(H-e))
    // for e at u but not v, connected h
    {
        std::vector<std::pair<VertexId, VertexId>> pairs;
        for (VertexId u = 0; u < h.n; ++u)
            for (VertexId v = 0; v < h.n; ++v)
                if (u != v) pairs.emplace_back(u, v);
        std::shuffle(pairs.begin(), pairs.end(), rng);
        for (auto [u, v] : pairs) {
            std::vector<int> cand;
            for (int ei : incident_edges(h, u)) {
                const Edge& e = h.edges[ei];
                if (!std::binary_search(e.begin(), e.end(), v)) cand.push_back(ei);
            }
            if (cand.empty()) continue;
            int ei = cand[std::uniform_int_distribution<size_t>(0, cand.size() - 1)(rng)];
            Hypergraph s = shift_hypergraph(h, ShiftSpec{u, v});
            int si = index_of_edge(s, h.edges[ei]);
            LambdaValue ls = largest_matching_root(s);
            LambdaValue l1 = largest_matching_root(delete_edge(s, si));
            LambdaValue l2 = largest_matching_root(remove_edge_closed(h, ei));
            if (compare_lambda_values(ls, l1) != LambdaOrder::GT ||
                compare_lambda_values(ls, l2) != LambdaOrder::GT)
                return fail("shift deletion inequality not strict", h), out;
            break;
        }
    }

    // the shift ordering itself
    {
        std::uniform_int_distribution<int> pick_v(0, h.n - 1);
        VertexId u = pick_v(rng), v = pick_v(rng);
        while (v == u) v = pick_v(rng);
        Hypergraph s = shift_hypergraph(h, ShiftSpec{u, v});
        if (check_preceq(h, s) == PreceqResult::NEITHER)
            return fail("graph does not precede its shift", h), out;
    }
    return out;
}

template <typename Fn>
VerificationReport ordering_sweep(int samples, Fn&& one, bool parallel) {
    std::vector<OrderingCheck> results(samples);
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < samples; ++i) results[i] = one(i);
    } else {
        for (int i = 0; i < samples; ++i) results[i] = one(i);
    }
    VerificationReport rep;
    rep.theorem = "ordering-lemmas";
    rep.instances = samples;
    for (const auto& r : results) {
        if (r.failed) {
            rep.status = VerifyStatus::COUNTEREXAMPLE;
            rep.detail = r.what + " [" + describe(r.witness) + "]";
            rep.witness = r.witness;
            return rep;
        }
    }
    rep.status = VerifyStatus::CONFIRMED;
    rep.detail = std::to_string(samples) + " instances, zero violations";
    return rep;
}

} // namespace

VerificationReport verify_ordering_lemmas(int samples, uint64_t seed) {
    return ordering_sweep(
        samples, [&](int i) { return ordering_check_one(seed, i); }, true);
}

VerificationReport verify_ordering_lemmas_serial(int samples, uint64_t seed) {
    return ordering_sweep(
        samples, [&](int i) { return ordering_check_one(seed, i); }, false);
}

VerificationReport verify_walk_tree_identity(const std::vector<Hypergraph>& hs,
                                             int orders_per_root, uint64_t seed,
                                             double tol) {
    VerificationReport rep;
    rep.theorem = "walk-tree-identity";
    long checks = 0;
    for (size_t idx = 0; idx < hs.size(); ++idx) {
        const Hypergraph& h = hs[idx];
        if (h.m() < 1 || !is_connected(h)) continue;
        double lambda = largest_matching_root(h).lambda_approx();
        bool tree_input = is_k_tree(h);
        for (VertexId root = 0; root < h.n; ++root) {
            for (int oi = 0; oi < orders_per_root; ++oi) {
                VertexOrder order;
                if (oi == 0) {
                    order = VertexOrder::natural(h.n);
                } else {
                    std::vector<VertexId> perm(h.n);
                    std::iota(perm.begin(), perm.end(), 0);
                    Rng rng = rng_for_instance(
                        seed, (idx * 1315423911ull) ^ (root * 2654435761ull) ^ oi);
                    std::shuffle(perm.begin(), perm.end(), rng);
                    order = VertexOrder::from_permutation(perm);
                }
                WalkTree wt = build_walk_tree(h, order, root, 500000);
                if (!is_k_tree(wt.tree)) {
                    rep.status = VerifyStatus::COUNTEREXAMPLE;
                    rep.detail = "walk tree is not a k-tree";
                    rep.witness = h;
                    return rep;
                }
                if (tree_input && !is_isomorphic(wt.tree, h, 64)) {
                    rep.status = VerifyStatus::COUNTEREXAMPLE;
                    rep.detail = "walk tree of a k-tree not isomorphic to it";
                    rep.witness = h;
                    return rep;
                }
                PerronEstimate pe = spectral_radius(wt.tree, 1e-9, 500000);
                ++checks;
                if (std::abs(pe.value - lambda) >= tol) {
                    rep.status = VerifyStatus::COUNTEREXAMPLE;
                    std::ostringstream os;
                    os << "rho(T) = " << pe.value << " vs lambda = " << lambda;
                    rep.detail = os.str();
                    rep.witness = h;
                    return rep;
                }
            }
        }
    }
    rep.instances = checks;
    rep.status = VerifyStatus::CONFIRMED;
    rep.detail = std::to_string(checks) + " (graph, root, order) checks";
    return rep;
}

VerificationReport verify_power_identity(int samples, int k, int max_edges,
                                         uint64_t seed, double tol) {
    VerificationReport rep;
    rep.theorem = "power-hypergraph-identity";
    for (int i = 0; i < samples; ++i) {
        Rng rng = rng_for_instance(seed, 0xb00ull + i);
        std::uniform_int_distribution<int> pick_m(1, max_edges);
        int m = pick_m(rng);
        int n_lo = 2;
        while (n_lo * (n_lo - 1) / 2 < m) ++n_lo;
        std::uniform_int_distribution<int> pick_n(n_lo, n_lo + 4);
        Hypergraph g = random_kgraph(2, pick_n(rng), m, rng);
        Hypergraph gk = power_hypergraph(g, k);
        MatchingSpectrum sg = matching_counts(g);
        MatchingSpectrum sk = matching_counts(gk);
        if (sg.counts != sk.counts ||
            gk.n != g.n + (k - 2) * g.m()) {
            rep.status = VerifyStatus::COUNTEREXAMPLE;
            rep.detail = "matching counts changed under the power construction";
            rep.witness = g;
            return rep;
        }
        // identical reduced polynomials: lambda(G^(k)) = lambda(G)^(2/k) exactly
        ReducedPoly rg = reduce_spectrum(sg);
        ReducedPoly rk = reduce_spectrum(sk);
        if (rg.coeffs_desc != rk.coeffs_desc) {
            rep.status = VerifyStatus::COUNTEREXAMPLE;
            rep.detail = "reduced polynomials differ";
            rep.witness = g;
            return rep;
        }
        double lg = largest_matching_root(g).lambda_approx();
        double lk = largest_matching_root(gk).lambda_approx();
        if (std::abs(lk - std::pow(lg, 2.0 / k)) >= tol) {
            rep.status = VerifyStatus::COUNTEREXAMPLE;
            rep.detail = "lambda power identity off tolerance";
            rep.witness = g;
            return rep;
        }
    }
    rep.instances = samples;
    rep.status = VerifyStatus::CONFIRMED;
    rep.detail = std::to_string(samples) + " random graphs";
    return rep;
}

} // namespace hypermatch
