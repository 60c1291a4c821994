#include <hypermatch/tensor.hpp>

#include <algorithm>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hypermatch {

namespace {

std::vector<std::vector<int>> incidence(const Hypergraph& h) {
    std::vector<std::vector<int>> inc(h.n);
    for (int i = 0; i < h.m(); ++i)
        for (VertexId v : h.edges[i]) inc[v].push_back(i);
    return inc;
}

double apply_at(const Hypergraph& h, const std::vector<int>& inc_v, VertexId v,
                const std::vector<double>& x) {
    double sum = 0.0;
    for (int ei : inc_v) {
        double prod = 1.0;
        for (VertexId w : h.edges[ei])
            if (w != v) prod *= x[w];
        sum += prod;
    }
    return sum;
}

} // namespace

std::vector<double> tensor_apply_serial(const Hypergraph& h,
                                        const std::vector<double>& x) {
    if (static_cast<int>(x.size()) != h.n)
        throw DimensionMismatch("vector length != n");
    auto inc = incidence(h);
    std::vector<double> y(h.n, 0.0);
    for (VertexId v = 0; v < h.n; ++v) y[v] = apply_at(h, inc[v], v, x);
    return y;
}

std::vector<double> tensor_apply(const Hypergraph& h, const std::vector<double>& x) {
    if (static_cast<int>(x.size()) != h.n)
        throw DimensionMismatch("vector length != n");
    auto inc = incidence(h);
    std::vector<double> y(h.n, 0.0);
    // Gather per vertex: each entry is an independent deterministic sum.
#pragma omp parallel for schedule(static)
    for (VertexId v = 0; v < h.n; ++v) y[v] = apply_at(h, inc[v], v, x);
    return y;
}

PerronEstimate spectral_radius(const Hypergraph& h, double tol, int max_iter) {
    if (h.n < 1) throw EmptyVertexSet();
    if (h.m() < 1) throw NoEdges("spectral radius needs at least one edge");
    if (!is_connected(h)) throw NotConnected();

    auto inc = incidence(h);
    const int k = h.k;
    std::vector<double> x(h.n, 1.0);
    PerronEstimate est;
    est.vector.resize(h.n);

    for (int it = 1; it <= max_iter; ++it) {
        std::vector<double> y(h.n);
#pragma omp parallel for schedule(static)
        for (VertexId v = 0; v < h.n; ++v) y[v] = apply_at(h, inc[v], v, x);

        double lo = std::numeric_limits<double>::infinity();
        double hi = 0.0;
        for (VertexId v = 0; v < h.n; ++v) {
            double xp = std::pow(x[v], k - 1);
            double ratio = y[v] / xp;
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
        }
        est.iterations = it;
        est.bracket_lo = lo;
        est.bracket_hi = hi;
        if (hi - lo < tol) {
            est.value = (lo + hi) / 2;
            est.vector = x;
            double res = 0.0;
            for (VertexId v = 0; v < h.n; ++v) {
                double xp = std::pow(x[v], k - 1);
                res = std::max(res, std::abs(y[v] - est.value * xp) / xp);
            }
            est.residual = res;
            return est;
        }
        // diagonal shift keeps the iteration aperiodic
        double mx = 0.0;
        for (VertexId v = 0; v < h.n; ++v) {
            double xp = std::pow(x[v], k - 1);
            x[v] = std::pow(y[v] + xp, 1.0 / (k - 1));
            mx = std::max(mx, x[v]);
        }
        for (VertexId v = 0; v < h.n; ++v) x[v] /= mx;
    }
    throw NoConvergence("no convergence after " + std::to_string(max_iter) +
                        " iterations");
}

} // namespace hypermatch
