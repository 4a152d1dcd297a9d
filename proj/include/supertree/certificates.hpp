#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "supertree/hypergraph.hpp"

namespace supertree {

/**
 * Weighted incidence matrix B of a hypergraph: a positive weight on every
 * incident (vertex, edge) pair and nothing elsewhere.
 *
 * Holds its own copy of the host. Weights are stored per edge, aligned with
 * the edge's sorted member list, so the support always matches the incidence.
 */
class WeightedIncidence {
public:
    struct Entry {
        Vertex v;
        int e;
        double w;
    };

    /// All weights set to `fill`.
    WeightedIncidence(const Hypergraph& host, double fill);

    /// Throws IncidenceMismatch unless `entries` covers every incident pair
    /// exactly once with a positive weight and nothing else.
    static WeightedIncidence from_entries(const Hypergraph& host, const std::vector<Entry>& entries);

    const Hypergraph& host() const noexcept { return host_; }

    double at(Vertex v, int edge) const;
    void set(Vertex v, int edge, double w);

    /// Row-major listing ordered by edge, then member.
    std::vector<Entry> entries() const;

private:
    std::size_t slot(Vertex v, int edge) const;

    Hypergraph host_;
    std::vector<std::vector<double>> weights_;
};

enum class CertificateClass { normal, strictly_subnormal, strictly_supernormal, neither };

std::string_view to_string(CertificateClass c);

struct CertificateVerdict {
    double alpha = 0.0;
    CertificateClass cls = CertificateClass::neither;
    /// 1 - sum_e B(v,e) per vertex
    std::vector<double> vertex_slacks;
    /// prod_v B(v,e) - alpha per edge
    std::vector<double> edge_slacks;
    bool consistent = true;
};

inline constexpr double kCertificateTolerance = 1e-9;

/**
 * Evaluates vertex sums and edge products of B against 1 and alpha and
 * reports the strongest class that holds within `tol`. Consistency is the
 * cycle-product condition, checked through a spanning tree of the
 * vertex-edge incidence graph.
 */
CertificateVerdict classify(const WeightedIncidence& b, double alpha, double tol = kCertificateTolerance);

/// Explicit certificate on broom(1, 1, m-3, k): pendent entries 1,
/// B(u1,e1) = B(u2,e2) = alpha, B(u1,e0) = B(u2,e0) = 1 - alpha,
/// B(u3,e_i) = alpha for its pendent edges and B(u3,e0) = 1 - (m-3) alpha.
/// Throws PositivityError unless 0 < alpha < 1/(m-3).
WeightedIncidence t11m3_certificate(int m, int k, double alpha);

/// Result of forcing B from the leaves towards a root vertex.
struct Propagation {
    bool feasible = false;
    /// sum_{e containing root} B(root, e) - 1; meaningful when feasible.
    double root_excess = 0.0;
    Vertex root = 0;
    std::vector<std::vector<double>> weights;  // aligned like WeightedIncidence
};

/**
 * Forces every non-root vertex sum to 1 and every edge product to alpha,
 * processing edges from the deepest level up. Infeasible when some forced
 * weight is not positive.
 */
Propagation propagate(const Hypergraph& supertree, double alpha);

/// The propagated certificate as a WeightedIncidence. Throws PositivityError
/// when propagation is infeasible at alpha.
WeightedIncidence propagated_certificate(const Hypergraph& supertree, double alpha);

struct AlphaRadius {
    double rho = 0.0;
    double alpha = 0.0;
    int iterations = 0;
};

inline constexpr double kAlphaTolerance = 1e-14;

/**
 * Spectral radius of a supertree as alpha^{-1/k}, where alpha is the root of
 * the propagated root excess, located by bisection on alpha in
 * [1/(max_degree * m), 1]. Throws NotASupertree or BracketFailure.
 */
AlphaRadius alpha_normal_solve(const Hypergraph& h, double tol = kAlphaTolerance);

double alpha_normal_radius(const Hypergraph& h, double tol = kAlphaTolerance);

}  // namespace supertree
