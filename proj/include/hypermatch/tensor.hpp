#ifndef HYPERMATCH_TENSOR_HPP
#define HYPERMATCH_TENSOR_HPP

#include <hypermatch/hypergraph.hpp>

namespace hypermatch {

// (A x^{k-1})_i = sum over edges e containing i of prod_{j in e, j != i} x_j.
// The (k-1)! symmetric copies cancel the 1/(k-1)! tensor entry.
std::vector<double> tensor_apply(const Hypergraph& h, const std::vector<double>& x);
std::vector<double> tensor_apply_serial(const Hypergraph& h,
                                        const std::vector<double>& x);

struct PerronEstimate {
    double value = 0.0;
    std::vector<double> vector;
    double residual = 0.0;
    int iterations = 0;
    double bracket_lo = 0.0; // final Collatz-Wielandt bracket
    double bracket_hi = 0.0;
};

// Shifted power-type iteration for the spectral radius of the adjacency
// tensor of a connected k-graph. The Collatz-Wielandt ratios
// (A x^{k-1})_i / x_i^{k-1} bracket rho; iteration stops when the bracket
// width drops below tol.
PerronEstimate spectral_radius(const Hypergraph& h, double tol = 1e-10,
                               int max_iter = 200000);

} // namespace hypermatch

#endif
