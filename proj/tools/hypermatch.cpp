#include <CLI11.hpp>
#include <json.hpp>

#include <hypermatch/canonical.hpp>
#include <hypermatch/census.hpp>
#include <hypermatch/constructions.hpp>
#include <hypermatch/io.hpp>
#include <hypermatch/matchpoly.hpp>
#include <hypermatch/random_graphs.hpp>
#include <hypermatch/rootfind.hpp>
#include <hypermatch/tensor.hpp>
#include <hypermatch/transform.hpp>
#include <hypermatch/verify.hpp>
#include <hypermatch/walktree.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace hypermatch;
using nlohmann::json;

namespace {

Hypergraph load(const std::string& path) {
    if (path == "-") return parse_hypergraph(std::cin);
    return read_hypergraph_file(path);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
    } else {
        std::ofstream f(out_path);
        f << text;
    }
}

json lambda_json(const LambdaValue& lv, const Rat& eps) {
    Rat llo, lhi;
    lv.lambda_bounds(eps, llo, lhi);
    json jpoly = json::array();
    for (const Int& c : lv.poly.coeffs_desc) jpoly.push_back(c.get_str());
    return json{{"k", lv.k},
                {"no_edges", lv.no_edges},
                {"y_lo", rat_to_string(lv.lo)},
                {"y_hi", rat_to_string(lv.hi)},
                {"lambda_lo", rat_to_string(llo)},
                {"lambda_hi", rat_to_string(lhi)},
                {"lambda", lv.lambda_approx()},
                {"reduced_poly", jpoly},
                {"shift", lv.poly.shift}};
}

json report_json(const VerificationReport& rep) {
    json j{{"theorem", rep.theorem},
           {"status", to_string(rep.status)},
           {"instances", rep.instances},
           {"detail", rep.detail}};
    if (rep.witness)
        j["witness"] = format_hypergraph(*rep.witness);
    else
        j["witness"] = nullptr;
    return j;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact matching polynomials and largest matching roots of "
                 "k-uniform hypergraphs"};
    app.require_subcommand(1);
    int jobs = 0;
    app.add_option("--jobs", jobs, "worker threads for harness verbs");

    std::string in_path, out_path;
    std::string eps_str = "1/1099511627776"; // 2^-40

    // poly
    auto* cmd_poly = app.add_subcommand("poly", "matching counts and polynomial");
    cmd_poly->add_option("input", in_path)->required();

    // lambda
    auto* cmd_lambda = app.add_subcommand("lambda", "largest matching root");
    cmd_lambda->add_option("input", in_path)->required();
    double lambda_eps_f = 0.0;
    cmd_lambda->add_option("--eps", lambda_eps_f,
                           "interval width target (decimal, e.g. 1e-12)");

    // compare
    auto* cmd_cmp = app.add_subcommand("compare", "compare largest roots");
    std::string in_a, in_b;
    cmd_cmp->add_option("a", in_a)->required();
    cmd_cmp->add_option("b", in_b)->required();

    // shift
    auto* cmd_shift = app.add_subcommand("shift", "(u,v)-shift");
    int su = 0, sv = 0;
    cmd_shift->add_option("input", in_path)->required();
    cmd_shift->add_option("-u", su)->required();
    cmd_shift->add_option("-v", sv)->required();
    cmd_shift->add_option("-o,--out", out_path);

    // move
    auto* cmd_move = app.add_subcommand("move", "edge-moving operation");
    std::vector<std::string> move_specs;
    cmd_move->add_option("input", in_path)->required();
    cmd_move
        ->add_option("--move", move_specs,
                     "edge:from:to triple, repeatable (e.g. --move 2:5:0)")
        ->required();
    cmd_move->add_option("-o,--out", out_path);

    // join
    auto* cmd_join = app.add_subcommand("join", "star-join host with parts");
    std::string host_path;
    std::vector<std::string> join_parts; // file:attach:root
    cmd_join->add_option("host", host_path)->required();
    cmd_join
        ->add_option("--part", join_parts,
                     "file:attach:root triple, repeatable")
        ->required();
    cmd_join->add_option("-o,--out", out_path);

    // make
    auto* cmd_make = app.add_subcommand("make", "construct a named family");
    std::string family;
    int mk_k = 3, mk_m = 0, mk_t = 0, mk_n = 0, mk_p = 0, mk_len = 0;
    cmd_make
        ->add_option("family", family,
                     "star | cycle | power | extremal-h | extremal-l | "
                     "complete | complete-star")
        ->required();
    cmd_make->add_option("--k", mk_k);
    cmd_make->add_option("--m", mk_m);
    cmd_make->add_option("--t", mk_t);
    cmd_make->add_option("--n", mk_n);
    cmd_make->add_option("--p", mk_p);
    cmd_make->add_option("--len", mk_len);
    std::string mk_input;
    cmd_make->add_option("--input", mk_input, "base graph for power");
    cmd_make->add_option("-o,--out", out_path);

    // walktree
    auto* cmd_wt = app.add_subcommand("walktree", "k-walk-tree of a hypergraph");
    int wt_root = 0, wt_cap = kDefaultWalkCap;
    std::string wt_order = "natural";
    cmd_wt->add_option("input", in_path)->required();
    cmd_wt->add_option("--root", wt_root);
    cmd_wt->add_option("--cap", wt_cap);
    cmd_wt->add_option("--order", wt_order,
                       "natural | random:<seed> | comma-separated permutation");
    cmd_wt->add_option("-o,--out", out_path);

    // rho
    auto* cmd_rho = app.add_subcommand("rho", "tensor spectral radius");
    double rho_tol = 1e-10;
    int rho_iters = 200000;
    cmd_rho->add_option("input", in_path)->required();
    cmd_rho->add_option("--tol", rho_tol);
    cmd_rho->add_option("--max-iter", rho_iters);

    // census
    auto* cmd_census = app.add_subcommand("census", "enumerate k-cacti");
    int cs_k = 3, cs_m = 3, cs_t = 1;
    bool cs_linear = false, cs_naive = false, cs_lambdas = false;
    cmd_census->add_option("--k", cs_k)->required();
    cmd_census->add_option("--m", cs_m)->required();
    cmd_census->add_option("--t", cs_t)->required();
    cmd_census->add_flag("--linear", cs_linear);
    cmd_census->add_flag("--naive", cs_naive, "use the generate-and-filter oracle");
    cmd_census->add_flag("--lambda", cs_lambdas, "include lambda intervals");

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "run a theorem check");
    std::string theorem;
    int vk = 3, vm = 3, vt = 1, vn = 5, vp = 1, vsamples = 200, vmax_edges = 7;
    bool vlinear = false;
    uint64_t vseed = seed_from_env();
    cmd_verify
        ->add_option("--theorem", theorem,
                     "main-cactus | shift-monotonic | ordering | pendant | "
                     "walk-tree | power")
        ->required();
    cmd_verify->add_option("--k", vk);
    cmd_verify->add_option("--m", vm);
    cmd_verify->add_option("--t", vt);
    cmd_verify->add_option("--n", vn);
    cmd_verify->add_option("--p", vp);
    cmd_verify->add_option("--samples", vsamples);
    cmd_verify->add_option("--max-edges", vmax_edges);
    cmd_verify->add_option("--seed", vseed);
    cmd_verify->add_flag("--linear", vlinear);

    CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
    if (jobs > 0) omp_set_num_threads(jobs);
#endif

    try {
        if (cmd_poly->parsed()) {
            Hypergraph h = load(in_path);
            MatchingSpectrum s = matching_counts(h);
            SignedPolynomial mu = matching_polynomial(s);
            json counts = json::array();
            for (const Int& c : s.counts) counts.push_back(c.get_str());
            json poly = json::array();
            for (auto it = mu.terms().rbegin(); it != mu.terms().rend(); ++it)
                poly.push_back(json::array({it->first, it->second.get_str()}));
            std::cout << json{{"n", s.n},
                              {"k", s.k},
                              {"counts", counts},
                              {"poly", poly}}
                             .dump()
                      << "\n";
        } else if (cmd_lambda->parsed()) {
            Hypergraph h = load(in_path);
            Rat eps = lambda_eps_f > 0 ? Rat(lambda_eps_f) : kDefaultLambdaEps;
            LambdaValue lv = largest_matching_root(h, eps);
            std::cout << lambda_json(lv, eps).dump() << "\n";
        } else if (cmd_cmp->parsed()) {
            Hypergraph a = load(in_a), b = load(in_b);
            LambdaOrder o = compare_lambda(a, b);
            std::cout << json{{"order", to_string(o)}}.dump() << "\n";
        } else if (cmd_shift->parsed()) {
            Hypergraph h = load(in_path);
            emit(format_hypergraph(shift_hypergraph(h, ShiftSpec{su, sv})),
                 out_path);
        } else if (cmd_move->parsed()) {
            Hypergraph h = load(in_path);
            std::vector<EdgeMove> moves;
            for (const auto& spec : move_specs) {
                EdgeMove mv{};
                if (sscanf(spec.c_str(), "%d:%d:%d", &mv.edge_index, &mv.from,
                           &mv.to) != 3)
                    throw BadParams("bad --move spec: " + spec);
                moves.push_back(mv);
            }
            emit(format_hypergraph(edge_move(h, moves)), out_path);
        } else if (cmd_join->parsed()) {
            StarJoinSpec spec;
            spec.host = load(host_path);
            for (const auto& ps : join_parts) {
                auto c1 = ps.find(':');
                auto c2 = ps.rfind(':');
                if (c1 == std::string::npos || c2 == c1)
                    throw BadParams("bad --part spec: " + ps);
                std::string file = ps.substr(0, c1);
                int attach = std::stoi(ps.substr(c1 + 1, c2 - c1 - 1));
                int root = std::stoi(ps.substr(c2 + 1));
                spec.attach.push_back(attach);
                spec.parts.push_back(StarJoinPart{load(file), root});
            }
            emit(format_hypergraph(star_join(spec).joined), out_path);
        } else if (cmd_make->parsed()) {
            Hypergraph h;
            if (family == "star") {
                h = k_star(mk_k, mk_m);
            } else if (family == "cycle") {
                h = k_cycle(mk_k, mk_len);
            } else if (family == "power") {
                if (mk_input.empty()) throw BadParams("power needs --input");
                h = power_hypergraph(load(mk_input), mk_k);
            } else if (family == "extremal-h") {
                h = extremal_H(mk_k, mk_m, mk_t);
            } else if (family == "extremal-l") {
                h = extremal_L(mk_k, mk_m, mk_t);
            } else if (family == "complete") {
                h = complete_k_graph(mk_n, mk_k);
            } else if (family == "complete-star") {
                h = complete_plus_star(mk_n, mk_p, mk_k);
            } else {
                throw BadParams("unknown family: " + family);
            }
            emit(format_hypergraph(h), out_path);
        } else if (cmd_wt->parsed()) {
            Hypergraph h = load(in_path);
            VertexOrder order;
            if (wt_order == "natural") {
                order = VertexOrder::natural(h.n);
            } else if (wt_order.rfind("random:", 0) == 0) {
                Rng rng(std::stoull(wt_order.substr(7)));
                std::vector<VertexId> perm(h.n);
                std::iota(perm.begin(), perm.end(), 0);
                std::shuffle(perm.begin(), perm.end(), rng);
                order = VertexOrder::from_permutation(perm);
            } else {
                std::vector<VertexId> perm;
                std::stringstream ss(wt_order);
                std::string tok;
                while (std::getline(ss, tok, ',')) perm.push_back(std::stoi(tok));
                order = VertexOrder::from_permutation(perm);
            }
            WalkTree wt = build_walk_tree(h, order, wt_root, wt_cap);
            std::ostringstream os;
            os << "# k-walk-tree rooted at " << wt_root << "\n";
            for (size_t i = 0; i < wt.walks.size(); ++i) {
                os << "# walk " << i << ":";
                const auto& w = wt.walks[i];
                os << " " << w.vertices[0];
                for (size_t j = 0; j < w.edge_indices.size(); ++j)
                    os << " e" << w.edge_indices[j] << " " << w.vertices[j + 1];
                os << "\n";
            }
            os << format_hypergraph(wt.tree);
            emit(os.str(), out_path);
        } else if (cmd_rho->parsed()) {
            Hypergraph h = load(in_path);
            PerronEstimate pe = spectral_radius(h, rho_tol, rho_iters);
            json vec = json::array();
            for (double x : pe.vector) vec.push_back(x);
            std::cout << json{{"rho", pe.value},
                              {"residual", pe.residual},
                              {"iterations", pe.iterations},
                              {"bracket", json::array({pe.bracket_lo, pe.bracket_hi})},
                              {"vector", vec}}
                             .dump()
                      << "\n";
        } else if (cmd_census->parsed()) {
            CactusCensus c = cs_naive ? naive_census(cs_k, cs_m, cs_t, cs_linear)
                                      : enumerate_census(cs_k, cs_m, cs_t, cs_linear);
            if (cs_lambdas) census_lambdas(c);
            std::cout << json{{"k", c.k},
                              {"m", c.m},
                              {"t", c.t},
                              {"linear", c.linear},
                              {"count", c.members.size()}}
                             .dump()
                      << "\n";
            for (size_t i = 0; i < c.members.size(); ++i) {
                json j{{"index", i}, {"hg", format_hypergraph(c.members[i])}};
                if (cs_lambdas) j["lambda"] = lambda_json(c.lambdas[i], Rat(1, 1 << 30));
                std::cout << j.dump() << "\n";
            }
        } else if (cmd_verify->parsed()) {
            VerificationReport rep;
            if (theorem == "main-cactus") {
                CactusCensus c = enumerate_census(vk, vm, vt, vlinear);
                rep = verify_maximizer(c);
            } else if (theorem == "shift-monotonic") {
                rep = verify_shift_monotonicity(vsamples, vk, vmax_edges, vseed);
            } else if (theorem == "ordering") {
                rep = verify_ordering_lemmas(vsamples, vseed);
            } else if (theorem == "pendant") {
                rep = verify_pendant_theorem(vk, vn, vp);
            } else if (theorem == "walk-tree") {
                std::vector<Hypergraph> hs;
                for (int i = 0; i < vsamples; ++i) {
                    Rng rng = rng_for_instance(vseed, 0x7a1cull + i);
                    std::uniform_int_distribution<int> pick_m(1, vmax_edges);
                    hs.push_back(random_connected_kgraph(vk, pick_m(rng), rng));
                }
                rep = verify_walk_tree_identity(hs, 3, vseed, 1e-6);
            } else if (theorem == "power") {
                rep = verify_power_identity(vsamples, vk, vmax_edges, vseed, 1e-9);
            } else {
                throw BadParams("unknown theorem id: " + theorem);
            }
            std::cout << report_json(rep).dump() << "\n";
            return rep.status == VerifyStatus::COUNTEREXAMPLE ? 1 : 0;
        }
    } catch (const error& e) {
        std::cout << json{{"error", {{"code", e.code()}, {"message", e.what()}}}}
                         .dump()
                  << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cout << json{{"error",
                           {{"code", "InternalError"}, {"message", e.what()}}}}
                         .dump()
                  << "\n";
        return 1;
    }
    return 0;
}
