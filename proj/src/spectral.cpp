#include "supertree/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "supertree/error.hpp"

namespace supertree {

namespace {

// Repeated multiplication keeps x^{k-1} bit-identical to the products in
// tensor_apply, so symmetric inputs give exactly equal ratios.
double ipow(double base, int exponent) {
    double r = 1.0;
    for (int i = 0; i < exponent; ++i) r *= base;
    return r;
}

void check_size(const Hypergraph& h, std::span<const double> x) {
    if (static_cast<int>(x.size()) != h.n()) {
        throw DimensionMismatch("vector length " + std::to_string(x.size()) + " does not match n = " +
                                std::to_string(h.n()));
    }
}

}  // namespace

std::vector<double> tensor_apply(const Hypergraph& h, std::span<const double> x) {
    check_size(h, x);
    std::vector<double> y(x.size(), 0.0);
    for (const auto& e : h.edges()) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            double prod = 1.0;
            for (std::size_t j = 0; j < e.size(); ++j) {
                if (j != i) prod *= x[static_cast<std::size_t>(e[j])];
            }
            y[static_cast<std::size_t>(e[i])] += prod;
        }
    }
    return y;
}

double eigen_residual(const Hypergraph& h, double rho, std::span<const double> x) {
    auto y = tensor_apply(h, x);
    double worst = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        worst = std::max(worst, std::abs(y[i] - rho * ipow(x[i], h.k() - 1)));
    }
    return worst;
}

PrincipalPair power_iteration(const Hypergraph& h, double tol, int max_iter) {
    if (!(tol > 0.0)) throw InvalidArgument("tolerance must be positive");
    if (max_iter < 1) throw InvalidArgument("max_iter must be at least 1");
    if (!is_connected(h)) throw DisconnectedInput("power iteration requires a connected hypergraph");

    const int k = h.k();
    const auto n = static_cast<std::size_t>(h.n());
    std::vector<double> x(n, std::pow(static_cast<double>(n), -1.0 / k));
    std::vector<double> xk1(n);
    double lower = 0.0;
    double upper = 0.0;

    for (int iter = 1; iter <= max_iter; ++iter) {
        auto y = tensor_apply(h, x);
        lower = std::numeric_limits<double>::infinity();
        upper = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            xk1[i] = ipow(x[i], k - 1);
            double ratio = y[i] / xk1[i];
            lower = std::min(lower, ratio);
            upper = std::max(upper, ratio);
        }
        if (upper - lower <= tol * upper) {
            PrincipalPair out;
            out.rho = 0.5 * (lower + upper);
            out.lower = lower;
            out.upper = upper;
            out.iterations = iter;
            out.residual = eigen_residual(h, out.rho, x);
            out.x = std::move(x);
            return out;
        }
        double norm = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = std::pow(y[i] + xk1[i], 1.0 / (k - 1));
            norm += ipow(x[i], k);
        }
        norm = std::pow(norm, 1.0 / k);
        for (auto& xi : x) xi /= norm;
    }
    throw NonConvergence("power iteration did not converge in " + std::to_string(max_iter) +
                             " iterations; bracket width " + std::to_string(upper - lower),
                         upper - lower);
}

double graph_spectral_radius(const OrdinaryTree& tree, double tol) {
    return power_iteration(tree.as_hypergraph(), tol).rho;
}

double power_formula_radius(const OrdinaryTree& tree, int k, double tol) {
    if (k < 2) throw InvalidArgument("k must be at least 2");
    return std::pow(graph_spectral_radius(tree, tol), 2.0 / k);
}

double double_star_power_radius(int m, int k) {
    if (m < 4) throw InvalidArgument("double_star_power_radius needs m >= 4");
    if (k < 2) throw InvalidArgument("k must be at least 2");
    const double md = m;
    const double rho_sq = (md + std::sqrt(md * md - 8.0 * (md - 3.0))) / 2.0;
    return std::pow(rho_sq, 1.0 / k);
}

double f_tree_power_radius(int m, int k) {
    if (m < 4) throw InvalidArgument("f_tree_power_radius needs m >= 4");
    if (k < 2) throw InvalidArgument("k must be at least 2");
    const double b = m - 1.0;
    const double rho_sq = (b + std::sqrt(b * b - 4.0 * (m - 4.0))) / 2.0;
    return std::pow(rho_sq, 1.0 / k);
}

}  // namespace supertree
