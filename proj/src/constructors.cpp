#include "supertree/constructors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "supertree/error.hpp"

namespace supertree {

OrdinaryTree::OrdinaryTree(int n, std::vector<Pair> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 2) throw InvalidArgument("an ordinary tree needs at least 2 vertices");
    if (static_cast<int>(edges_.size()) != n_ - 1) throw InvalidArgument("a tree on n vertices has n-1 edges");
    // union-find over the pairs; a cycle or bad id rejects
    std::vector<int> parent(static_cast<std::size_t>(n_));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (auto [a, b] : edges_) {
        if (a < 0 || b < 0 || a >= n_ || b >= n_ || a == b) throw InvalidArgument("invalid tree edge");
        int ra = find(a);
        int rb = find(b);
        if (ra == rb) throw InvalidArgument("tree edges contain a cycle");
        parent[static_cast<std::size_t>(ra)] = rb;
    }
}

std::vector<int> OrdinaryTree::degrees() const {
    std::vector<int> d(static_cast<std::size_t>(n_), 0);
    for (auto [a, b] : edges_) {
        ++d[static_cast<std::size_t>(a)];
        ++d[static_cast<std::size_t>(b)];
    }
    return d;
}

Hypergraph OrdinaryTree::as_hypergraph() const { return tree_power(*this, 2); }

OrdinaryTree star(int n) {
    if (n < 2) throw InvalidArgument("star needs n >= 2");
    std::vector<OrdinaryTree::Pair> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
    return OrdinaryTree(n, std::move(edges));
}

OrdinaryTree path(int n) {
    if (n < 2) throw InvalidArgument("path needs n >= 2");
    std::vector<OrdinaryTree::Pair> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return OrdinaryTree(n, std::move(edges));
}

OrdinaryTree double_star(int a, int b) {
    if (a < 1 || b < 1) throw InvalidArgument("double star needs a, b >= 1");
    std::vector<OrdinaryTree::Pair> edges{{0, 1}};
    int next = 2;
    for (int i = 0; i < a; ++i) edges.emplace_back(0, next++);
    for (int i = 0; i < b; ++i) edges.emplace_back(1, next++);
    return OrdinaryTree(next, std::move(edges));
}

OrdinaryTree f_tree(int n) {
    if (n < 5) throw InvalidArgument("F_n needs n >= 5");
    std::vector<OrdinaryTree::Pair> edges{{0, 1}, {1, 2}, {2, 3}, {3, 4}};
    for (int v = 5; v < n; ++v) edges.emplace_back(2, v);
    return OrdinaryTree(n, std::move(edges));
}

Hypergraph tree_power(const OrdinaryTree& tree, int k) {
    if (k < 2) throw InvalidArgument("k must be at least 2");
    std::vector<Edge> edges;
    int next = tree.n();
    for (auto [a, b] : tree.edges()) {
        Edge e{a, b};
        for (int i = 0; i < k - 2; ++i) e.push_back(next++);
        edges.push_back(std::move(e));
    }
    return Hypergraph(k, next, std::move(edges));
}

Hypergraph hyperstar(int m, int k) {
    if (m < 1) throw InvalidArgument("hyperstar needs m >= 1");
    if (k < 2) throw InvalidArgument("k must be at least 2");
    std::vector<Edge> edges;
    int next = 1;
    for (int i = 0; i < m; ++i) {
        Edge e{0};
        for (int j = 0; j < k - 1; ++j) e.push_back(next++);
        edges.push_back(std::move(e));
    }
    return Hypergraph(k, next, std::move(edges));
}

Hypergraph broom(int t1, int t2, int t3, int k) {
    if (k < 3) throw InvalidArgument("T(t1,t2,t3) needs k >= 3: three vertices cannot share a 2-edge");
    if (!(1 <= t1 && t1 <= t2 && t2 <= t3)) throw InvalidArgument("T(t1,t2,t3) needs 1 <= t1 <= t2 <= t3");
    std::vector<Edge> edges;
    Edge central(static_cast<std::size_t>(k));
    std::iota(central.begin(), central.end(), 0);
    edges.push_back(central);
    int next = k;
    const int counts[3] = {t1, t2, t3};
    for (Vertex u = 0; u < 3; ++u) {
        for (int i = 0; i < counts[u]; ++i) {
            Edge e{u};
            for (int j = 0; j < k - 1; ++j) e.push_back(next++);
            edges.push_back(std::move(e));
        }
    }
    return Hypergraph(k, next, std::move(edges));
}

bool is_tree_power(const Hypergraph& h) {
    if (!is_supertree(h)) return false;
    for (const auto& e : h.edges()) {
        auto inner = std::count_if(e.begin(), e.end(), [&](Vertex v) { return h.degree(v) > 1; });
        if (inner > 2) return false;
    }
    return true;
}

std::optional<OrdinaryTree> underlying_tree(const Hypergraph& h) {
    if (!is_tree_power(h)) return std::nullopt;
    std::map<Vertex, int> relabel;
    auto id = [&](Vertex v) {
        auto [it, inserted] = relabel.emplace(v, static_cast<int>(relabel.size()));
        return it->second;
    };
    std::vector<OrdinaryTree::Pair> pairs;
    for (const auto& e : h.edges()) {
        std::vector<Vertex> inner;
        std::vector<Vertex> outer;
        for (Vertex v : e) (h.degree(v) > 1 ? inner : outer).push_back(v);
        // keep the non-pendent members, pad with pendent ones up to two ends
        while (inner.size() < 2) {
            inner.push_back(outer.back());
            outer.pop_back();
        }
        pairs.emplace_back(id(inner[0]), id(inner[1]));
    }
    return OrdinaryTree(static_cast<int>(relabel.size()), std::move(pairs));
}

MoveResult move_edges(const Hypergraph& g, Vertex target, const std::vector<EdgeMove>& moves) {
    if (target < 0 || target >= g.n()) throw InvalidArgument("move target out of range");
    std::vector<Edge> edges = g.edges();
    std::set<int> seen;
    for (const auto& mv : moves) {
        if (mv.edge < 0 || mv.edge >= g.m()) throw InvalidArgument("moved edge index out of range");
        if (!seen.insert(mv.edge).second) throw InvalidArgument("edge indices of a move must be distinct");
        if (g.contains(target, mv.edge)) throw InvalidArgument("target already lies in a moved edge");
        if (!g.contains(mv.from, mv.edge)) throw InvalidArgument("moved-from vertex is not in its edge");
        Edge& e = edges[static_cast<std::size_t>(mv.edge)];
        *std::find(e.begin(), e.end(), mv.from) = target;
        std::sort(e.begin(), e.end());
    }
    std::set<Edge> distinct(edges.begin(), edges.end());
    if (distinct.size() != edges.size()) {
        throw MultipleEdgeError("moving edges produced a multiple edge");
    }
    Hypergraph out(g.k(), g.n(), std::move(edges));
    MoveResult result{std::move(out), {}};
    for (const auto& mv : moves) {
        if (result.graph.degree(mv.from) == 0 &&
            std::find(result.dangling.begin(), result.dangling.end(), mv.from) == result.dangling.end()) {
            result.dangling.push_back(mv.from);
        }
    }
    std::sort(result.dangling.begin(), result.dangling.end());
    return result;
}

}  // namespace supertree
