#include "supertree/ordering.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <optional>
#include <sstream>

#include "supertree/certificates.hpp"
#include "supertree/constructors.hpp"
#include "supertree/error.hpp"

namespace supertree {

int enumeration_limit() {
    if (const char* env = std::getenv("SUPERTREE_ENUM_LIMIT")) {
        char* end = nullptr;
        long value = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && value > 0) return static_cast<int>(value);
    }
    return kDefaultEnumerationLimit;
}

namespace {

Hypergraph attach_edge(const Hypergraph& h, Vertex at) {
    std::vector<Edge> edges = h.edges();
    Edge e{at};
    for (int i = 0; i < h.k() - 1; ++i) e.push_back(h.n() + i);
    edges.push_back(std::move(e));
    return Hypergraph(h.k(), h.n() + h.k() - 1, std::move(edges));
}

std::string format_rho(double rho) {
    std::ostringstream os;
    os.precision(12);
    os << rho;
    return os.str();
}

}  // namespace

std::vector<Hypergraph> enumerate_supertrees(int m, int k, int limit) {
    if (m < 1) throw InvalidArgument("enumeration needs m >= 1");
    if (k < 2) throw InvalidArgument("k must be at least 2");
    if (m > limit) {
        throw LimitExceeded("m = " + std::to_string(m) + " exceeds the enumeration limit " + std::to_string(limit));
    }
    std::map<std::string, Hypergraph> level;
    Edge first(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) first[static_cast<std::size_t>(i)] = i;
    Hypergraph seed(k, k, {first});
    level.emplace(canonical_key(seed), seed);
    for (int size = 2; size <= m; ++size) {
        std::map<std::string, Hypergraph> next;
        for (const auto& [key, h] : level) {
            for (Vertex v = 0; v < h.n(); ++v) {
                Hypergraph grown = attach_edge(h, v);
                next.try_emplace(canonical_key(grown), std::move(grown));
            }
        }
        level = std::move(next);
    }
    std::vector<Hypergraph> out;
    out.reserve(level.size());
    for (auto& [key, h] : level) out.push_back(std::move(h));
    return out;
}

std::string_view to_string(RadiusMethod method) {
    switch (method) {
        case RadiusMethod::power: return "power";
        case RadiusMethod::alpha: return "alpha";
        case RadiusMethod::formula: return "formula";
    }
    return "power";
}

RadiusMethod parse_method(std::string_view name) {
    if (name == "power") return RadiusMethod::power;
    if (name == "alpha") return RadiusMethod::alpha;
    if (name == "formula") return RadiusMethod::formula;
    throw InvalidArgument("unknown method '" + std::string(name) + "'");
}

RadiusResult compute_radius(const Hypergraph& h, RadiusMethod method, const SolverConfig& config) {
    switch (method) {
        case RadiusMethod::alpha:
            return {alpha_normal_radius(h), RadiusMethod::alpha};
        case RadiusMethod::formula:
            if (auto tree = underlying_tree(h)) {
                return {power_formula_radius(*tree, h.k(), config.tol), RadiusMethod::formula};
            }
            [[fallthrough]];
        case RadiusMethod::power:
            break;
    }
    return {power_iteration(h, config.tol, config.max_iter).rho, RadiusMethod::power};
}

SpectraReport rank_spectra(int m, int k, RadiusMethod method, const SolverConfig& config, int limit) {
    SpectraReport report;
    report.k = k;
    report.m = m;
    report.generated_at = std::chrono::system_clock::now();
    for (auto& h : enumerate_supertrees(m, k, limit)) {
        RadiusResult r = compute_radius(h, method, config);
        std::string key = canonical_key(h);
        report.entries.push_back({0, std::move(key), std::move(h), r.rho, r.method, false});
    }
    std::sort(report.entries.begin(), report.entries.end(), [](const ReportEntry& a, const ReportEntry& b) {
        if (a.rho != b.rho) return a.rho > b.rho;
        return a.key < b.key;
    });
    for (std::size_t i = 0; i < report.entries.size(); ++i) {
        report.entries[i].rank = static_cast<int>(i) + 1;
        if (i + 1 < report.entries.size()) {
            report.entries[i].tied_with_next = report.entries[i].rho - report.entries[i + 1].rho <= kTieTolerance;
        }
    }
    return report;
}

VerificationRecord verify_top_four(int m, int k, int depth, const SolverConfig& config, int limit) {
    if (m < 5) throw InvalidArgument("top-four verification needs m >= 5; at m = 4 the expected second and third graphs coincide");
    if (depth < 1 || depth > 4) throw InvalidArgument("depth must be between 1 and 4");

    VerificationRecord rec;
    rec.name = "top-" + std::to_string(depth) + " ordering, k=" + std::to_string(k) + ", m=" + std::to_string(m);
    rec.report = rank_spectra(m, k, RadiusMethod::power, config, limit);

    struct Expected {
        std::string label;
        Hypergraph graph;
    };
    std::vector<Expected> expected{
        {"hyperstar", hyperstar(m, k)},
        {"S(1," + std::to_string(m - 2) + ") power", tree_power(double_star(1, m - 2), k)},
        {"S(2," + std::to_string(m - 3) + ") power", tree_power(double_star(2, m - 3), k)},
    };
    if (k >= 3) {
        expected.push_back({"T(1,1," + std::to_string(m - 3) + ")", broom(1, 1, m - 3, k)});
    } else {
        expected.push_back({"F_" + std::to_string(m + 1), tree_power(f_tree(m + 1), k)});
    }

    const auto& entries = rec.report.entries;
    for (int i = 0; i < depth; ++i) {
        const auto& want = expected[static_cast<std::size_t>(i)];
        const auto& got = entries.at(static_cast<std::size_t>(i));
        if (got.key != canonical_key(want.graph)) {
            throw CounterexampleFound("rank " + std::to_string(i + 1) + " is " + got.key + " (rho " +
                                      format_rho(got.rho) + "), expected " + want.label);
        }
        rec.values.push_back({want.label, got.rho});
        if (static_cast<std::size_t>(i) + 1 < entries.size()) {
            const auto& below = entries[static_cast<std::size_t>(i) + 1];
            if (got.rho - below.rho <= kTieTolerance) {
                throw CounterexampleFound("rank " + std::to_string(i + 1) + " (" + want.label + ", rho " +
                                          format_rho(got.rho) + ") is not separated from " + below.key +
                                          " (rho " + format_rho(below.rho) + ")");
            }
        }
    }
    return rec;
}

VerificationRecord verify_partition_lemma(int m, int k, const SolverConfig& config) {
    if (m < 4 || k < 3) throw InvalidArgument("partition check needs m >= 4 and k >= 3");
    VerificationRecord rec;
    rec.name = "T(t1,t2,t3) partitions, k=" + std::to_string(k) + ", m=" + std::to_string(m);
    const double best = power_iteration(broom(1, 1, m - 3, k), config.tol, config.max_iter).rho;
    for (int t1 = 1; 3 * t1 <= m - 1; ++t1) {
        for (int t2 = t1; t1 + 2 * t2 <= m - 1; ++t2) {
            const int t3 = m - 1 - t1 - t2;
            const std::string label =
                "T(" + std::to_string(t1) + "," + std::to_string(t2) + "," + std::to_string(t3) + ")";
            const double rho = power_iteration(broom(t1, t2, t3, k), config.tol, config.max_iter).rho;
            rec.values.push_back({label, rho});
            const double gap = best - rho;
            const bool ok = (t2 == 1) ? std::abs(gap) <= kTieTolerance : gap > kTieTolerance;
            if (!ok) {
                throw CounterexampleFound(label + " has rho " + format_rho(rho) + " against T(1,1," +
                                          std::to_string(m - 3) + ") rho " + format_rho(best));
            }
        }
    }
    return rec;
}

VerificationRecord verify_sandwich(int m, int k, const SolverConfig& config) {
    if (m < 4 || k < 3) throw InvalidArgument("sandwich check needs m >= 4 and k >= 3");
    VerificationRecord rec;
    rec.name = "T(1,1,m-3) sandwich, k=" + std::to_string(k) + ", m=" + std::to_string(m);
    const double lower = f_tree_power_radius(m, k);
    const double upper = double_star_power_radius(m, k);
    const double rho = power_iteration(broom(1, 1, m - 3, k), config.tol, config.max_iter).rho;
    rec.values = {{"F_" + std::to_string(m + 1) + " power", lower},
                  {"T(1,1," + std::to_string(m - 3) + ")", rho},
                  {"S(2," + std::to_string(m - 3) + ") power", upper}};
    if (!(rho - lower > kTieTolerance && upper - rho > kTieTolerance)) {
        throw CounterexampleFound("rho(T(1,1," + std::to_string(m - 3) + ")) = " + format_rho(rho) +
                                  " is not strictly inside (" + format_rho(lower) + ", " + format_rho(upper) + ")");
    }
    return rec;
}

namespace {

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

}  // namespace

Hypergraph random_supertree(int m, int k, std::mt19937_64& rng) {
    if (m < 1 || k < 2) throw InvalidArgument("random supertree needs m >= 1 and k >= 2");
    Edge first(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) first[static_cast<std::size_t>(i)] = i;
    Hypergraph h(k, k, {first});
    for (int i = 1; i < m; ++i) {
        auto at = static_cast<Vertex>(draw(rng, static_cast<std::uint64_t>(h.n())));
        h = attach_edge(h, at);
    }
    return h;
}

VerificationRecord verify_moving_edges(int trials, std::uint64_t seed, const MovingEdgesOptions& options,
                                       const SolverConfig& config) {
    if (trials < 0) throw InvalidArgument("trials must be non-negative");
    if (options.min_edges < 2 || options.max_edges < options.min_edges) {
        throw InvalidArgument("moving-edge trials need 2 <= min_edges <= max_edges");
    }
    VerificationRecord rec;
    rec.name = "moving edges, " + std::to_string(trials) + " trials, seed " + std::to_string(seed);
    std::mt19937_64 rng(seed);
    const int max_graphs = std::max(1, trials) * 50;
    int graphs = 0;
    while (static_cast<int>(rec.values.size()) < trials) {
        if (++graphs > max_graphs) throw SearchExhausted("could not find enough valid moving-edge trials");
        const int span = options.max_edges - options.min_edges + 1;
        const int m = options.min_edges + static_cast<int>(draw(rng, static_cast<std::uint64_t>(span)));
        Hypergraph g = random_supertree(m, options.k, rng);
        const PrincipalPair pair = power_iteration(g, config.tol, config.max_iter);
        const auto& x = pair.x;

        for (int attempt = 0; attempt < options.attempts_per_trial; ++attempt) {
            const auto u = static_cast<Vertex>(draw(rng, static_cast<std::uint64_t>(g.n())));
            std::vector<std::pair<int, std::vector<Vertex>>> eligible;
            for (int e = 0; e < g.m(); ++e) {
                if (g.contains(u, e)) continue;
                std::vector<Vertex> from;
                for (Vertex v : g.edge(e)) {
                    if (x[static_cast<std::size_t>(v)] <= x[static_cast<std::size_t>(u)]) from.push_back(v);
                }
                if (!from.empty()) eligible.emplace_back(e, std::move(from));
            }
            if (eligible.empty()) continue;
            for (std::size_t i = eligible.size(); i > 1; --i) {
                std::swap(eligible[i - 1], eligible[draw(rng, i)]);
            }
            const auto r = 1 + draw(rng, eligible.size());
            std::vector<EdgeMove> moves;
            for (std::size_t i = 0; i < r; ++i) {
                const auto& [e, from] = eligible[i];
                moves.push_back({e, from[draw(rng, from.size())]});
            }
            std::optional<MoveResult> moved;
            try {
                moved = move_edges(g, u, moves);
            } catch (const MultipleEdgeError&) {
                continue;
            }
            if (!moved->dangling.empty() || !is_supertree(moved->graph)) continue;

            const double rho_after = power_iteration(moved->graph, config.tol, config.max_iter).rho;
            if (rho_after < pair.rho - config.tol * pair.rho) {
                std::ostringstream os;
                os << "moving " << moves.size() << " edge(s) to vertex " << u << " lowered rho from "
                   << format_rho(pair.rho) << " to " << format_rho(rho_after);
                throw CounterexampleFound(os.str());
            }
            rec.values.push_back({"m=" + std::to_string(m) + " r=" + std::to_string(moves.size()), rho_after - pair.rho});
            break;
        }
    }
    return rec;
}

Hypergraph reduce_non_pendent(const Hypergraph& t, const SolverConfig& config) {
    if (!is_supertree(t)) throw NotASupertree("reduce_non_pendent requires a supertree");
    const int n2 = non_pendent_count(t);
    if (n2 < 2) throw InvalidArgument("reduce_non_pendent requires at least two non-pendent vertices");

    const PrincipalPair pair = power_iteration(t, config.tol, config.max_iter);
    const auto& x = pair.x;
    std::vector<Vertex> inner;
    for (Vertex v = 0; v < t.n(); ++v) {
        if (t.degree(v) > 1) inner.push_back(v);
    }
    std::stable_sort(inner.begin(), inner.end(),
                     [&](Vertex a, Vertex b) { return x[static_cast<std::size_t>(a)] < x[static_cast<std::size_t>(b)]; });

    for (Vertex v : inner) {
        for (int keep : t.incident(v)) {
            for (Vertex u : t.edge(keep)) {
                if (u == v || t.degree(u) < 2) continue;
                if (x[static_cast<std::size_t>(u)] < x[static_cast<std::size_t>(v)]) continue;
                std::vector<EdgeMove> moves;
                for (int e : t.incident(v)) {
                    if (e != keep) moves.push_back({e, v});
                }
                MoveResult moved = move_edges(t, u, moves);
                if (!is_supertree(moved.graph) || non_pendent_count(moved.graph) != n2 - 1) continue;
                const double rho_after = power_iteration(moved.graph, config.tol, config.max_iter).rho;
                if (rho_after > pair.rho) return std::move(moved.graph);
            }
        }
    }
    throw SearchExhausted("no moving-edge candidate reduced the non-pendent count with a larger radius");
}

}  // namespace supertree
