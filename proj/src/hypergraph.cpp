#include "supertree/hypergraph.hpp"

#include <algorithm>
#include <queue>

#include "supertree/error.hpp"

namespace supertree {

Hypergraph::Hypergraph(int k, int n, std::vector<Edge> edges) : k_(k), n_(n), edges_(std::move(edges)) {
    if (k_ < 2) throw InvalidHypergraph("edge size k must be at least 2");
    if (n_ < 1) throw InvalidHypergraph("vertex count n must be at least 1");
    if (edges_.empty()) throw InvalidHypergraph("hypergraph must have at least one edge");
    for (auto& e : edges_) {
        if (static_cast<int>(e.size()) != k_) {
            throw InvalidHypergraph("edge has " + std::to_string(e.size()) + " members, expected " +
                                    std::to_string(k_));
        }
        std::sort(e.begin(), e.end());
        if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
            throw InvalidHypergraph("edge has a repeated vertex");
        }
        if (e.front() < 0 || e.back() >= n_) throw InvalidHypergraph("vertex id out of range");
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
        throw InvalidHypergraph("multiple edges are not supported");
    }
    incidence_.assign(static_cast<std::size_t>(n_), {});
    for (int i = 0; i < m(); ++i) {
        for (Vertex v : edges_[static_cast<std::size_t>(i)]) incidence_[static_cast<std::size_t>(v)].push_back(i);
    }
}

bool Hypergraph::contains(Vertex v, int edge_index) const {
    const Edge& e = edge(edge_index);
    return std::binary_search(e.begin(), e.end(), v);
}

int Hypergraph::find_edge(Edge e) const {
    std::sort(e.begin(), e.end());
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return -1;
    return static_cast<int>(it - edges_.begin());
}

VertexStats vertex_stats(const Hypergraph& h) {
    VertexStats s;
    s.degrees.resize(static_cast<std::size_t>(h.n()));
    for (Vertex v = 0; v < h.n(); ++v) {
        s.degrees[static_cast<std::size_t>(v)] = h.degree(v);
        if (h.degree(v) == 1) s.pendent_vertices.push_back(v);
    }
    for (int i = 0; i < h.m(); ++i) {
        const auto& e = h.edge(i);
        auto pendent = std::count_if(e.begin(), e.end(), [&](Vertex v) { return h.degree(v) == 1; });
        if (pendent >= h.k() - 1) s.pendent_edges.push_back(i);
    }
    s.non_pendent_count = h.n() - static_cast<int>(s.pendent_vertices.size());
    return s;
}

int non_pendent_count(const Hypergraph& h) {
    int count = 0;
    for (Vertex v = 0; v < h.n(); ++v) count += h.degree(v) != 1 ? 1 : 0;
    return count;
}

bool is_connected(const Hypergraph& h) {
    std::vector<char> seen(static_cast<std::size_t>(h.n()), 0);
    std::vector<char> edge_seen(static_cast<std::size_t>(h.m()), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (int e : h.incident(v)) {
            if (edge_seen[static_cast<std::size_t>(e)]) continue;
            edge_seen[static_cast<std::size_t>(e)] = 1;
            for (Vertex w : h.edge(e)) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    ++reached;
                    stack.push_back(w);
                }
            }
        }
    }
    return reached == h.n();
}

bool is_supertree(const Hypergraph& h) {
    return h.m() * (h.k() - 1) == h.n() - 1 && is_connected(h);
}

namespace {

// Reduced incidence tree: nodes [0, m) are edges, the rest are non-pendent vertices.
struct ReducedTree {
    std::vector<char> is_edge;
    std::vector<std::vector<int>> adj;
};

ReducedTree reduce(const Hypergraph& h) {
    ReducedTree t;
    t.is_edge.assign(static_cast<std::size_t>(h.m()), 1);
    t.adj.assign(static_cast<std::size_t>(h.m()), {});
    for (Vertex v = 0; v < h.n(); ++v) {
        if (h.degree(v) < 2) continue;
        int node = static_cast<int>(t.adj.size());
        t.is_edge.push_back(0);
        t.adj.emplace_back();
        for (int e : h.incident(v)) {
            t.adj[static_cast<std::size_t>(node)].push_back(e);
            t.adj[static_cast<std::size_t>(e)].push_back(node);
        }
    }
    return t;
}

std::string encode(const ReducedTree& t, int node, int parent) {
    std::vector<std::string> children;
    for (int c : t.adj[static_cast<std::size_t>(node)]) {
        if (c != parent) children.push_back(encode(t, c, node));
    }
    std::sort(children.begin(), children.end());
    std::string out = t.is_edge[static_cast<std::size_t>(node)] ? "(e" : "(v";
    for (const auto& c : children) out += c;
    out += ')';
    return out;
}

}  // namespace

std::string canonical_key(const Hypergraph& h) {
    if (!is_supertree(h)) throw NotASupertree("canonical_key requires a supertree");
    ReducedTree t = reduce(h);
    std::string best;
    for (int root = 0; root < static_cast<int>(t.adj.size()); ++root) {
        std::string enc = encode(t, root, -1);
        if (best.empty() || enc < best) best = std::move(enc);
    }
    return "k" + std::to_string(h.k()) + ":" + best;
}

namespace {

class IsomorphismSearch {
public:
    IsomorphismSearch(const Hypergraph& a, const Hypergraph& b) : a_(a), b_(b) {
        map_.assign(static_cast<std::size_t>(a.n()), -1);
        used_.assign(static_cast<std::size_t>(b.n()), 0);
        order_ = bfs_order(a);
    }

    bool run() { return extend(0); }

private:
    static std::vector<Vertex> bfs_order(const Hypergraph& h) {
        std::vector<Vertex> order;
        std::vector<char> seen(static_cast<std::size_t>(h.n()), 0);
        std::vector<Vertex> starts(static_cast<std::size_t>(h.n()));
        for (Vertex v = 0; v < h.n(); ++v) starts[static_cast<std::size_t>(v)] = v;
        std::stable_sort(starts.begin(), starts.end(),
                         [&](Vertex x, Vertex y) { return h.degree(x) > h.degree(y); });
        for (Vertex s : starts) {
            if (seen[static_cast<std::size_t>(s)]) continue;
            std::queue<Vertex> q;
            q.push(s);
            seen[static_cast<std::size_t>(s)] = 1;
            while (!q.empty()) {
                Vertex v = q.front();
                q.pop();
                order.push_back(v);
                for (int e : h.incident(v)) {
                    for (Vertex w : h.edge(e)) {
                        if (!seen[static_cast<std::size_t>(w)]) {
                            seen[static_cast<std::size_t>(w)] = 1;
                            q.push(w);
                        }
                    }
                }
            }
        }
        return order;
    }

    // Images of the mapped members of every edge through v must lie in a
    // common edge of b; fully mapped edges must map onto an edge of b.
    bool consistent(Vertex v) const {
        for (int e : a_.incident(v)) {
            std::vector<Vertex> image;
            for (Vertex u : a_.edge(e)) {
                if (map_[static_cast<std::size_t>(u)] >= 0) image.push_back(map_[static_cast<std::size_t>(u)]);
            }
            bool found = false;
            for (int f : b_.incident(image.front())) {
                const auto& fe = b_.edge(f);
                if (std::all_of(image.begin(), image.end(),
                                [&](Vertex w) { return std::binary_search(fe.begin(), fe.end(), w); })) {
                    found = true;
                    break;
                }
            }
            if (!found) return false;
        }
        return true;
    }

    bool extend(std::size_t depth) {
        if (depth == order_.size()) return true;
        Vertex v = order_[depth];
        for (Vertex w = 0; w < b_.n(); ++w) {
            if (used_[static_cast<std::size_t>(w)] || b_.degree(w) != a_.degree(v)) continue;
            map_[static_cast<std::size_t>(v)] = w;
            used_[static_cast<std::size_t>(w)] = 1;
            if ((a_.degree(v) == 0 || consistent(v)) && extend(depth + 1)) return true;
            used_[static_cast<std::size_t>(w)] = 0;
            map_[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    }

    const Hypergraph& a_;
    const Hypergraph& b_;
    std::vector<Vertex> map_;
    std::vector<char> used_;
    std::vector<Vertex> order_;
};

std::vector<int> sorted_degrees(const Hypergraph& h) {
    std::vector<int> d(static_cast<std::size_t>(h.n()));
    for (Vertex v = 0; v < h.n(); ++v) d[static_cast<std::size_t>(v)] = h.degree(v);
    std::sort(d.begin(), d.end());
    return d;
}

}  // namespace

bool are_isomorphic(const Hypergraph& a, const Hypergraph& b, int max_vertices) {
    if (a.n() > max_vertices || b.n() > max_vertices) {
        throw SizeGuardError("isomorphism backtracking limited to " + std::to_string(max_vertices) +
                             " vertices");
    }
    if (a.k() != b.k() || a.n() != b.n() || a.m() != b.m()) return false;
    if (sorted_degrees(a) != sorted_degrees(b)) return false;
    return IsomorphismSearch(a, b).run();
}

}  // namespace supertree
