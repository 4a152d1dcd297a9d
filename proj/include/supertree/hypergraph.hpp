#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace supertree {

using Vertex = int;
using Edge = std::vector<Vertex>;

/**
 * Immutable k-uniform hypergraph on vertices 0..n-1.
 *
 * Members of each edge are kept sorted and the edge list is kept in
 * lexicographic order, so two hypergraphs with the same edge set compare
 * equal and serialize identically. Edge indices used elsewhere in the
 * library refer to this sorted order.
 */
class Hypergraph {
public:
    /// Throws InvalidHypergraph on k < 2, n < 1, no edges, an edge of the
    /// wrong size, repeated members, out-of-range ids or duplicate edges.
    Hypergraph(int k, int n, std::vector<Edge> edges);

    int k() const noexcept { return k_; }
    int n() const noexcept { return n_; }
    int m() const noexcept { return static_cast<int>(edges_.size()); }

    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const Edge& edge(int index) const { return edges_.at(static_cast<std::size_t>(index)); }

    /// Indices of the edges containing v, ascending.
    const std::vector<int>& incident(Vertex v) const {
        return incidence_.at(static_cast<std::size_t>(v));
    }
    int degree(Vertex v) const { return static_cast<int>(incident(v).size()); }

    bool contains(Vertex v, int edge_index) const;

    /// Index of the edge equal to `e` (given in any order), or -1.
    int find_edge(Edge e) const;

    friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

private:
    int k_;
    int n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> incidence_;
};

struct VertexStats {
    std::vector<int> degrees;
    std::vector<Vertex> pendent_vertices;
    std::vector<int> pendent_edges;
    int non_pendent_count = 0;
};

VertexStats vertex_stats(const Hypergraph& h);

/// Number of non-pendent vertices.
int non_pendent_count(const Hypergraph& h);

bool is_connected(const Hypergraph& h);

/// Connected and m(k-1) = n-1.
bool is_supertree(const Hypergraph& h);

/**
 * Isomorphism-invariant key of a supertree.
 *
 * The supertree is reduced to the tree whose nodes are its edges and its
 * non-pendent vertices (pendent vertices are implied by k). Each rooting of
 * that tree gets an AHU encoding with node type in the label and the
 * lexicographically smallest encoding is kept. Throws NotASupertree.
 */
std::string canonical_key(const Hypergraph& h);

inline constexpr int kDefaultIsomorphismLimit = 24;

/// Exhaustive backtracking isomorphism test. Throws SizeGuardError when
/// n exceeds `max_vertices`.
bool are_isomorphic(const Hypergraph& a, const Hypergraph& b,
                    int max_vertices = kDefaultIsomorphismLimit);

}  // namespace supertree
