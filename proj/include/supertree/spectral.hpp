#pragma once

#include <span>
#include <vector>

#include "supertree/constructors.hpp"
#include "supertree/hypergraph.hpp"

namespace supertree {

inline constexpr double kDefaultTolerance = 1e-10;
inline constexpr int kDefaultMaxIterations = 100000;
/// Radii closer than this are treated as ties when ranking.
inline constexpr double kTieTolerance = 1e-7;

/// Spectral radius estimate with its positive eigenvector (sum of x_i^k = 1).
struct PrincipalPair {
    double rho = 0.0;
    std::vector<double> x;
    double residual = 0.0;
    int iterations = 0;
    /// Final bracket min_i (Ax)_i / x_i^{k-1} .. max_i of the same.
    double lower = 0.0;
    double upper = 0.0;
};

/// (Ax)_i = sum over edges e containing i of the product of x_j, j in e \ {i}.
std::vector<double> tensor_apply(const Hypergraph& h, std::span<const double> x);

/// max_i |(Ax)_i - rho * x_i^{k-1}|
double eigen_residual(const Hypergraph& h, double rho, std::span<const double> x);

/**
 * Shifted power iteration for the adjacency tensor of a connected hypergraph.
 *
 * Iterates x <- ((Ax) + x^{[k-1]})^{[1/(k-1)]}, normalised to unit k-norm,
 * from the uniform vector. Stops once the bracket
 * [min_i (Ax)_i/x_i^{k-1}, max_i (Ax)_i/x_i^{k-1}] has relative width at most
 * `tol`; rho is its midpoint. Throws DisconnectedInput or NonConvergence.
 */
PrincipalPair power_iteration(const Hypergraph& h, double tol = kDefaultTolerance,
                              int max_iter = kDefaultMaxIterations);

double graph_spectral_radius(const OrdinaryTree& tree, double tol = kDefaultTolerance);

/// rho(T)^{2/k}, the radius of the k-th power of T.
double power_formula_radius(const OrdinaryTree& tree, int k, double tol = kDefaultTolerance);

/// Radius of the k-th power of S(2, m-3) from the largest root of
/// r^4 - m r^2 + 2(m-3) = 0. Requires m >= 4.
double double_star_power_radius(int m, int k);

/// Radius of the k-th power of F_{m+1} from the largest root of
/// r^4 - (m-1) r^2 + (m-4) = 0. Requires m >= 4.
double f_tree_power_radius(int m, int k);

}  // namespace supertree
