#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "supertree/hypergraph.hpp"

namespace supertree {

/// Ordinary (2-uniform) tree on vertices 0..n-1.
class OrdinaryTree {
public:
    using Pair = std::pair<Vertex, Vertex>;

    /// Throws InvalidArgument unless the pairs form a tree on n >= 2 vertices.
    OrdinaryTree(int n, std::vector<Pair> edges);

    int n() const noexcept { return n_; }
    const std::vector<Pair>& edges() const noexcept { return edges_; }
    std::vector<int> degrees() const;

    /// The tree as a 2-uniform hypergraph.
    Hypergraph as_hypergraph() const;

private:
    int n_;
    std::vector<Pair> edges_;
};

OrdinaryTree star(int n);
OrdinaryTree path(int n);

/// S(a,b): a pendent edges at one end of a central edge, b at the other.
OrdinaryTree double_star(int a, int b);

/// F_n: centre of the star S_{n-4} coalesced with the centre of P_5.
OrdinaryTree f_tree(int n);

/// Each edge of `tree` is padded with k-2 fresh vertices, numbered after the
/// original ones edge by edge in input order.
Hypergraph tree_power(const OrdinaryTree& tree, int k);

/// m edges sharing vertex 0.
Hypergraph hyperstar(int m, int k);

/// T(t1,t2,t3): central edge holding u1=0, u2=1, u3=2; u_i carries t_i
/// pendent edges. Requires 1 <= t1 <= t2 <= t3 and k >= 3.
Hypergraph broom(int t1, int t2, int t3, int k);

/// True when every edge has at most two non-pendent vertices, i.e. the
/// supertree is the power of an ordinary tree.
bool is_tree_power(const Hypergraph& h);

/// Ordinary tree T with tree_power(T, k) isomorphic to h, when h is a tree
/// power supertree.
std::optional<OrdinaryTree> underlying_tree(const Hypergraph& h);

struct EdgeMove {
    int edge;       // index into the source hypergraph's edge list
    Vertex from;    // vertex replaced by the target
};

struct MoveResult {
    Hypergraph graph;
    /// Vertices left without any edge after the move.
    std::vector<Vertex> dangling;
};

/**
 * Moves each listed edge off its `from` vertex onto `target`.
 *
 * Requires target outside every moved edge, `from` inside it, and distinct
 * edge indices (InvalidArgument otherwise). Throws MultipleEdgeError if two
 * edges of the result coincide.
 */
MoveResult move_edges(const Hypergraph& g, Vertex target, const std::vector<EdgeMove>& moves);

}  // namespace supertree
