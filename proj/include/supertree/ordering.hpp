#pragma once

#include <chrono>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "supertree/hypergraph.hpp"
#include "supertree/spectral.hpp"

namespace supertree {

inline constexpr int kDefaultEnumerationLimit = 7;

/// Enumeration cap: SUPERTREE_ENUM_LIMIT when set to a positive integer,
/// otherwise kDefaultEnumerationLimit.
int enumeration_limit();

/**
 * One representative per isomorphism class of k-uniform supertrees with m
 * edges. Grows level by level: each new edge meets the existing supertree
 * in exactly one vertex and brings k-1 fresh ones. Throws LimitExceeded
 * when m > limit.
 */
std::vector<Hypergraph> enumerate_supertrees(int m, int k, int limit = enumeration_limit());

enum class RadiusMethod { power, alpha, formula };

std::string_view to_string(RadiusMethod method);
RadiusMethod parse_method(std::string_view name);

struct SolverConfig {
    double tol = kDefaultTolerance;
    int max_iter = kDefaultMaxIterations;
};

struct RadiusResult {
    double rho = 0.0;
    /// Method actually used; `formula` falls back to `power` on
    /// supertrees that are not tree powers.
    RadiusMethod method = RadiusMethod::power;
};

RadiusResult compute_radius(const Hypergraph& h, RadiusMethod method, const SolverConfig& config = {});

struct ReportEntry {
    int rank = 0;
    std::string key;
    Hypergraph graph;
    double rho = 0.0;
    RadiusMethod method = RadiusMethod::power;
    /// Radius within kTieTolerance of the next entry.
    bool tied_with_next = false;
};

struct SpectraReport {
    int k = 0;
    int m = 0;
    std::vector<ReportEntry> entries;
    std::chrono::system_clock::time_point generated_at;
};

/// Ranked by rho descending; ties broken by key so the order is stable.
SpectraReport rank_spectra(int m, int k, RadiusMethod method, const SolverConfig& config = {},
                           int limit = enumeration_limit());

struct Comparison {
    std::string label;
    double rho = 0.0;
};

/// Radii examined by a successful verifier. Failures throw
/// CounterexampleFound instead.
struct VerificationRecord {
    std::string name;
    std::vector<Comparison> values;
    SpectraReport report;
};

/**
 * Checks that the top `depth` (3 or 4) ranks are, in order, the hyperstar,
 * S^k(1,m-2), S^k(2,m-3) and T(1,1,m-3) (F_{m+1} when k = 2), each separated
 * from the next rank by more than kTieTolerance. Requires m >= 5.
 */
VerificationRecord verify_top_four(int m, int k, int depth = 4, const SolverConfig& config = {},
                                   int limit = enumeration_limit());

/// rho(T(1,1,m-3)) >= rho(T(t1,t2,t3)) over all partitions, with equality
/// exactly when t2 = 1.
VerificationRecord verify_partition_lemma(int m, int k, const SolverConfig& config = {});

/// f_tree_power_radius(m,k) < rho(T(1,1,m-3)) < double_star_power_radius(m,k).
VerificationRecord verify_sandwich(int m, int k, const SolverConfig& config = {});

struct MovingEdgesOptions {
    int k = 3;
    int min_edges = 2;
    int max_edges = 6;
    int attempts_per_trial = 200;
};

/**
 * Random supertrees grown by uniform edge attachment; random moves that
 * satisfy x_u >= max x_{v_i}, create no multiple edge and keep a supertree.
 * Each accepted move must raise rho. The record's `values` holds the
 * increase observed per trial.
 */
VerificationRecord verify_moving_edges(int trials, std::uint64_t seed, const MovingEdgesOptions& options = {},
                                       const SolverConfig& config = {});

/// Supertree with m edges grown by attaching each new edge at a uniformly
/// chosen existing vertex.
Hypergraph random_supertree(int m, int k, std::mt19937_64& rng);

/**
 * A supertree on the same vertices with one fewer non-pendent vertex and a
 * larger radius. Candidate moves take every edge but one off a non-pendent
 * vertex v onto a non-pendent neighbour u with x_u >= x_v, trying v in
 * increasing eigenvector weight. Throws InvalidArgument when N2 < 2 and
 * SearchExhausted if no candidate works.
 */
Hypergraph reduce_non_pendent(const Hypergraph& t, const SolverConfig& config = {});

}  // namespace supertree
