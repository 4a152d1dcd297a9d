#include "supertree/certificates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include "supertree/constructors.hpp"
#include "supertree/error.hpp"

namespace supertree {

WeightedIncidence::WeightedIncidence(const Hypergraph& host, double fill) : host_(host) {
    weights_.assign(static_cast<std::size_t>(host_.m()), std::vector<double>(static_cast<std::size_t>(host_.k()), fill));
}

WeightedIncidence WeightedIncidence::from_entries(const Hypergraph& host, const std::vector<Entry>& entries) {
    WeightedIncidence b(host, 0.0);
    std::vector<std::vector<char>> seen(static_cast<std::size_t>(host.m()),
                                        std::vector<char>(static_cast<std::size_t>(host.k()), 0));
    for (const auto& entry : entries) {
        if (entry.e < 0 || entry.e >= host.m() || entry.v < 0 || entry.v >= host.n() ||
            !host.contains(entry.v, entry.e)) {
            throw IncidenceMismatch("weight given for non-incident pair (v=" + std::to_string(entry.v) +
                                    ", e=" + std::to_string(entry.e) + ")");
        }
        if (!(entry.w > 0.0)) {
            throw IncidenceMismatch("weight of incident pair (v=" + std::to_string(entry.v) +
                                    ", e=" + std::to_string(entry.e) + ") must be positive");
        }
        auto s = b.slot(entry.v, entry.e);
        auto& flag = seen[static_cast<std::size_t>(entry.e)][s];
        if (flag) throw IncidenceMismatch("duplicate weight for an incident pair");
        flag = 1;
        b.weights_[static_cast<std::size_t>(entry.e)][s] = entry.w;
    }
    for (const auto& row : seen) {
        if (std::find(row.begin(), row.end(), 0) != row.end()) {
            throw IncidenceMismatch("certificate is missing weights for some incident pairs");
        }
    }
    return b;
}

std::size_t WeightedIncidence::slot(Vertex v, int edge) const {
    const auto& e = host_.edge(edge);
    auto it = std::lower_bound(e.begin(), e.end(), v);
    if (it == e.end() || *it != v) throw IncidenceMismatch("vertex is not a member of the edge");
    return static_cast<std::size_t>(it - e.begin());
}

double WeightedIncidence::at(Vertex v, int edge) const {
    return weights_.at(static_cast<std::size_t>(edge))[slot(v, edge)];
}

void WeightedIncidence::set(Vertex v, int edge, double w) {
    weights_.at(static_cast<std::size_t>(edge))[slot(v, edge)] = w;
}

std::vector<WeightedIncidence::Entry> WeightedIncidence::entries() const {
    std::vector<Entry> out;
    for (int e = 0; e < host_.m(); ++e) {
        const auto& members = host_.edge(e);
        for (std::size_t j = 0; j < members.size(); ++j) {
            out.push_back({members[j], e, weights_[static_cast<std::size_t>(e)][j]});
        }
    }
    return out;
}

std::string_view to_string(CertificateClass c) {
    switch (c) {
        case CertificateClass::normal: return "normal";
        case CertificateClass::strictly_subnormal: return "strictly-subnormal";
        case CertificateClass::strictly_supernormal: return "strictly-supernormal";
        case CertificateClass::neither: return "neither";
    }
    return "neither";
}

namespace {

// Consistency holds iff log B(v,e) = psi(v) - psi(e) for some potential psi on
// the incidence graph; psi is fixed along a BFS forest and checked on every pair.
bool check_consistency(const WeightedIncidence& b, double tol) {
    const Hypergraph& h = b.host();
    const auto n = static_cast<std::size_t>(h.n());
    std::vector<double> psi_vertex(n, 0.0);
    std::vector<double> psi_edge(static_cast<std::size_t>(h.m()), 0.0);
    std::vector<char> seen_vertex(n, 0);
    std::vector<char> seen_edge(static_cast<std::size_t>(h.m()), 0);
    for (Vertex start = 0; start < h.n(); ++start) {
        if (seen_vertex[static_cast<std::size_t>(start)]) continue;
        seen_vertex[static_cast<std::size_t>(start)] = 1;
        std::queue<Vertex> q;
        q.push(start);
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            for (int e : h.incident(v)) {
                if (seen_edge[static_cast<std::size_t>(e)]) continue;
                seen_edge[static_cast<std::size_t>(e)] = 1;
                psi_edge[static_cast<std::size_t>(e)] = psi_vertex[static_cast<std::size_t>(v)] - std::log(b.at(v, e));
                for (Vertex w : h.edge(e)) {
                    if (seen_vertex[static_cast<std::size_t>(w)]) continue;
                    seen_vertex[static_cast<std::size_t>(w)] = 1;
                    psi_vertex[static_cast<std::size_t>(w)] = std::log(b.at(w, e)) + psi_edge[static_cast<std::size_t>(e)];
                    q.push(w);
                }
            }
        }
    }
    for (const auto& entry : b.entries()) {
        double expected = psi_vertex[static_cast<std::size_t>(entry.v)] - psi_edge[static_cast<std::size_t>(entry.e)];
        if (std::abs(std::log(entry.w) - expected) > tol) return false;
    }
    return true;
}

}  // namespace

CertificateVerdict classify(const WeightedIncidence& b, double alpha, double tol) {
    if (!(alpha > 0.0)) throw InvalidArgument("alpha must be positive");
    const Hypergraph& h = b.host();
    CertificateVerdict verdict;
    verdict.alpha = alpha;
    verdict.vertex_slacks.assign(static_cast<std::size_t>(h.n()), 1.0);
    verdict.edge_slacks.assign(static_cast<std::size_t>(h.m()), 0.0);
    for (int e = 0; e < h.m(); ++e) {
        double prod = 1.0;
        for (Vertex v : h.edge(e)) {
            double w = b.at(v, e);
            prod *= w;
            verdict.vertex_slacks[static_cast<std::size_t>(v)] -= w;
        }
        verdict.edge_slacks[static_cast<std::size_t>(e)] = prod - alpha;
    }

    auto all = [](const std::vector<double>& xs, auto pred) { return std::all_of(xs.begin(), xs.end(), pred); };
    auto near_zero = [tol](double s) { return std::abs(s) <= tol; };
    auto non_negative = [tol](double s) { return s >= -tol; };
    auto non_positive = [tol](double s) { return s <= tol; };

    if (all(verdict.vertex_slacks, near_zero) && all(verdict.edge_slacks, near_zero)) {
        verdict.cls = CertificateClass::normal;
    } else if (all(verdict.vertex_slacks, non_negative) && all(verdict.edge_slacks, non_negative)) {
        verdict.cls = CertificateClass::strictly_subnormal;
    } else if (all(verdict.vertex_slacks, non_positive) && all(verdict.edge_slacks, non_positive)) {
        verdict.cls = CertificateClass::strictly_supernormal;
    } else {
        verdict.cls = CertificateClass::neither;
    }
    verdict.consistent = check_consistency(b, tol);
    return verdict;
}

WeightedIncidence t11m3_certificate(int m, int k, double alpha) {
    if (m < 4) throw InvalidArgument("t11m3_certificate needs m >= 4");
    if (!(alpha > 0.0 && alpha < 1.0 / (m - 3))) {
        throw PositivityError("alpha must lie in (0, 1/(m-3)) for the T(1,1,m-3) certificate");
    }
    Hypergraph host = broom(1, 1, m - 3, k);
    WeightedIncidence b(host, 1.0);
    // edge 0 is the central edge; then one pendent edge at u1=0, one at u2=1,
    // and m-3 at u3=2, in sorted order
    for (int e = 1; e < host.m(); ++e) {
        for (Vertex u = 0; u < 3; ++u) {
            if (host.contains(u, e)) b.set(u, e, alpha);
        }
    }
    b.set(0, 0, 1.0 - alpha);
    b.set(1, 0, 1.0 - alpha);
    b.set(2, 0, 1.0 - (m - 3) * alpha);
    return b;
}

Propagation propagate(const Hypergraph& h, double alpha) {
    if (!is_supertree(h)) throw NotASupertree("propagation requires a supertree");
    Propagation out;
    out.root = 0;
    for (Vertex v = 0; v < h.n(); ++v) {
        if (h.degree(v) > 1) {
            out.root = v;
            break;
        }
    }

    const auto n = static_cast<std::size_t>(h.n());
    std::vector<int> edge_parent(static_cast<std::size_t>(h.m()), -1);
    std::vector<int> edge_order;
    std::vector<char> seen(n, 0);
    std::queue<Vertex> q;
    q.push(out.root);
    seen[static_cast<std::size_t>(out.root)] = 1;
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        for (int e : h.incident(v)) {
            if (edge_parent[static_cast<std::size_t>(e)] >= 0) continue;
            edge_parent[static_cast<std::size_t>(e)] = v;
            edge_order.push_back(e);
            for (Vertex w : h.edge(e)) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    q.push(w);
                }
            }
        }
    }

    out.weights.assign(static_cast<std::size_t>(h.m()), std::vector<double>(static_cast<std::size_t>(h.k()), 0.0));
    std::vector<double> child_sum(n, 0.0);
    for (auto it = edge_order.rbegin(); it != edge_order.rend(); ++it) {
        const int e = *it;
        const Vertex parent = edge_parent[static_cast<std::size_t>(e)];
        const auto& members = h.edge(e);
        auto& row = out.weights[static_cast<std::size_t>(e)];
        double prod = 1.0;
        std::size_t parent_slot = 0;
        for (std::size_t j = 0; j < members.size(); ++j) {
            if (members[j] == parent) {
                parent_slot = j;
                continue;
            }
            double w = 1.0 - child_sum[static_cast<std::size_t>(members[j])];
            if (!(w > 0.0)) return out;
            row[j] = w;
            prod *= w;
        }
        row[parent_slot] = alpha / prod;
        child_sum[static_cast<std::size_t>(parent)] += row[parent_slot];
    }
    out.feasible = true;
    out.root_excess = child_sum[static_cast<std::size_t>(out.root)] - 1.0;
    return out;
}

WeightedIncidence propagated_certificate(const Hypergraph& h, double alpha) {
    Propagation p = propagate(h, alpha);
    if (!p.feasible) throw PositivityError("propagation forces a non-positive weight at this alpha");
    WeightedIncidence b(h, 1.0);
    for (int e = 0; e < h.m(); ++e) {
        const auto& members = h.edge(e);
        for (std::size_t j = 0; j < members.size(); ++j) b.set(members[j], e, p.weights[static_cast<std::size_t>(e)][j]);
    }
    return b;
}

AlphaRadius alpha_normal_solve(const Hypergraph& h, double tol) {
    if (!is_supertree(h)) throw NotASupertree("alpha_normal_radius requires a supertree");
    if (!(tol > 0.0)) throw InvalidArgument("tolerance must be positive");

    int max_degree = 0;
    for (Vertex v = 0; v < h.n(); ++v) max_degree = std::max(max_degree, h.degree(v));

    // infeasible means alpha is too large, i.e. a positive excess
    auto excess = [&](double alpha) {
        Propagation p = propagate(h, alpha);
        return p.feasible ? p.root_excess : std::numeric_limits<double>::infinity();
    };
    auto finish = [&](double alpha, int iterations) {
        return AlphaRadius{std::pow(alpha, -1.0 / h.k()), alpha, iterations};
    };

    double hi = 1.0;
    double lo = 1.0 / (static_cast<double>(max_degree) * h.m());
    double f_hi = excess(hi);
    if (f_hi == 0.0) return finish(hi, 0);
    if (f_hi < 0.0) throw BracketFailure("root excess is negative at the upper bracket end", hi);
    double f_lo = excess(lo);
    if (f_lo == 0.0) return finish(lo, 0);
    if (f_lo > 0.0) throw BracketFailure("root excess is not negative at the lower bracket end", lo);

    constexpr int kMaxBisections = 200;
    int iter = 0;
    while (hi - lo > tol && iter < kMaxBisections) {
        ++iter;
        double mid = 0.5 * (lo + hi);
        double f = excess(mid);
        if (f == 0.0) return finish(mid, iter);
        (f < 0.0 ? lo : hi) = mid;
    }
    return finish(0.5 * (lo + hi), iter);
}

double alpha_normal_radius(const Hypergraph& h, double tol) { return alpha_normal_solve(h, tol).rho; }

}  // namespace supertree
