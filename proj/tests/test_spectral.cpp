#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "supertree/constructors.hpp"
#include "supertree/error.hpp"
#include "supertree/ordering.hpp"
#include "supertree/spectral.hpp"

using namespace supertree;

TEST_SUITE_BEGIN("spectral");

TEST_CASE("tensor_apply") {
    Hypergraph edge3(3, 3, {{0, 1, 2}});
    CHECK(tensor_apply(edge3, std::vector<double>{1, 1, 1}) == std::vector<double>{1, 1, 1});
    CHECK(tensor_apply(edge3, std::vector<double>{1, 2, 3}) == std::vector<double>{6, 3, 2});

    const double c = 0.7;
    auto y = tensor_apply(hyperstar(2, 3), std::vector<double>(5, c));
    CHECK(y[0] == doctest::Approx(2 * c * c));
    for (int i = 1; i < 5; ++i) CHECK(y[static_cast<std::size_t>(i)] == doctest::Approx(c * c));

    CHECK_THROWS_AS(tensor_apply(edge3, std::vector<double>{1, 2}), DimensionMismatch);
}

TEST_CASE("tensor_apply is homogeneous of degree k-1") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> unit(0.1, 2.0);
    for (int k : {2, 3, 4}) {
        auto h = broom(1, 2, 2, std::max(k, 3));
        std::vector<double> x(static_cast<std::size_t>(h.n()));
        for (auto& xi : x) xi = unit(rng);
        const double scale = unit(rng);
        std::vector<double> scaled(x);
        for (auto& xi : scaled) xi *= scale;
        auto a = tensor_apply(h, x);
        auto b = tensor_apply(h, scaled);
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(b[i] == doctest::Approx(std::pow(scale, h.k() - 1) * a[i]).epsilon(1e-12));
        }
    }
}

TEST_CASE("power_iteration anchors") {
    SUBCASE("single edge collapses immediately") {
        for (int k = 2; k <= 5; ++k) {
            std::vector<Vertex> e(static_cast<std::size_t>(k));
            std::iota(e.begin(), e.end(), 0);
            auto p = power_iteration(Hypergraph(k, k, {e}));
            CHECK(p.rho == 1.0);
            CHECK(p.iterations == 1);
        }
    }
    SUBCASE("hyperstar m=4, k=3") {
        const double star_radius = oracle::dense_tree_radius(star(5));
        CHECK(star_radius == doctest::Approx(2.0).epsilon(1e-12));
        auto p = power_iteration(hyperstar(4, 3));
        CHECK(std::abs(p.rho - std::pow(star_radius, 2.0 / 3.0)) < 1e-9);
        CHECK(std::abs(p.rho - 1.5874010519681994) < 1e-9);
    }
    SUBCASE("power of S(2,2)") {
        auto p = power_iteration(tree_power(double_star(2, 2), 3));
        CHECK(std::abs(p.rho - std::cbrt(4.0)) < 1e-9);
    }
}

TEST_CASE("principal pair invariants") {
    const std::vector<Hypergraph> cases{hyperstar(5, 3), broom(1, 2, 3, 3), broom(2, 2, 2, 4),
                                        tree_power(path(6), 3), tree_power(f_tree(7), 2)};
    for (const auto& h : cases) {
        auto p = power_iteration(h);
        double norm = 0.0;
        for (double xi : p.x) {
            CHECK(xi > 0.0);
            norm += std::pow(xi, h.k());
        }
        CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(p.lower <= p.rho);
        CHECK(p.rho <= p.upper);
        CHECK(p.residual <= kDefaultTolerance * p.rho);
        CHECK(eigen_residual(h, p.rho, p.x) == doctest::Approx(p.residual));
        CHECK(p.rho >= 1.0);
    }
}

TEST_CASE("bracket always contains the spectral radius") {
    // true radius from the dense oracle; loose tolerances stop the iteration early
    for (const auto& tree : {path(7), double_star(2, 3), f_tree(8)}) {
        const double exact = std::pow(oracle::dense_tree_radius(tree), 2.0 / 3.0);
        for (double tol : {1.0, 0.5, 0.1, 1e-2, 1e-4, 1e-8}) {
            auto p = power_iteration(tree_power(tree, 3), tol);
            CHECK(p.lower <= exact + 1e-12);
            CHECK(exact <= p.upper + 1e-12);
        }
    }
}

TEST_CASE("eigen_residual") {
    Hypergraph edge3(3, 3, {{0, 1, 2}});
    const double c = std::pow(3.0, -1.0 / 3.0);
    CHECK(eigen_residual(edge3, 1.0, std::vector<double>(3, c)) < 1e-15);

    auto h = broom(1, 1, 2, 3);
    auto p = power_iteration(h);
    auto bumped = p.x;
    bumped[0] += 0.1;
    CHECK(eigen_residual(h, p.rho, bumped) > kDefaultTolerance);
}

TEST_CASE("power_iteration errors") {
    CHECK_THROWS_AS(power_iteration(Hypergraph(3, 6, {{0, 1, 2}, {3, 4, 5}})), DisconnectedInput);
    CHECK_THROWS_AS(power_iteration(hyperstar(3, 3), 0.0), InvalidArgument);
    try {
        power_iteration(tree_power(path(9), 3), 1e-14, 3);
        FAIL("expected NonConvergence");
    } catch (const NonConvergence& ex) {
        CHECK(ex.bracket_width() > 0.0);
    }
}

TEST_CASE("graph_spectral_radius") {
    CHECK(graph_spectral_radius(path(2)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(graph_spectral_radius(star(5)) - 2.0) < 1e-9);
    // path eigenvalue 2 cos(pi/(n+1))
    CHECK(std::abs(graph_spectral_radius(path(5)) - 2.0 * std::cos(std::numbers::pi / 6.0)) < 1e-9);
    CHECK(std::abs(graph_spectral_radius(path(5)) - std::sqrt(3.0)) < 1e-9);
    for (const auto& tree : {path(9), star(8), double_star(3, 4), f_tree(9)}) {
        CHECK(std::abs(graph_spectral_radius(tree) - oracle::dense_tree_radius(tree)) < 1e-9);
    }
}

TEST_CASE("power_formula_radius") {
    auto t = double_star(2, 3);
    CHECK(power_formula_radius(t, 2) == doctest::Approx(graph_spectral_radius(t)).epsilon(1e-14));
    CHECK(std::abs(power_formula_radius(star(5), 3) - 1.5874010519681994) < 1e-9);

    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 9);
        auto tree = oracle::random_tree(n, rng);
        for (int k : {3, 4}) {
            const double direct = power_iteration(tree_power(tree, k)).rho;
            CHECK(std::abs(direct - power_formula_radius(tree, k)) <= 1e-6);
            CHECK(std::abs(direct - std::pow(oracle::dense_tree_radius(tree), 2.0 / k)) <= 1e-8);
        }
    }
}

TEST_CASE("quartic radii") {
    CHECK(std::abs(double_star_power_radius(5, 2) - 2.0) < 1e-12);
    CHECK(std::abs(double_star_power_radius(4, 2) - std::sqrt(2.0 + std::sqrt(2.0))) < 1e-12);
    CHECK(std::abs(double_star_power_radius(5, 3) - std::cbrt(4.0)) < 1e-12);
    CHECK(std::abs(f_tree_power_radius(4, 2) - std::sqrt(3.0)) < 1e-12);
    CHECK(std::abs(f_tree_power_radius(5, 2) - std::sqrt(2.0 + std::sqrt(3.0))) < 1e-12);
    CHECK_THROWS_AS(double_star_power_radius(3, 2), InvalidArgument);
    CHECK_THROWS_AS(f_tree_power_radius(3, 2), InvalidArgument);

    for (int m = 4; m <= 12; ++m) {
        const double r1 = double_star_power_radius(m, 2);
        CHECK(std::abs(std::pow(r1, 4) - m * r1 * r1 + 2.0 * (m - 3)) <= 1e-10);
        CHECK(r1 > std::sqrt(m - 2.0));
        const double r2 = f_tree_power_radius(m, 2);
        CHECK(std::abs(std::pow(r2, 4) - (m - 1) * r2 * r2 + (m - 4)) <= 1e-10);

        // closed forms against the dense oracle on the actual trees
        CHECK(std::abs(r1 - oracle::dense_tree_radius(double_star(2, m - 3))) < 1e-10);
        CHECK(std::abs(r2 - oracle::dense_tree_radius(f_tree(m + 1))) < 1e-10);
        CHECK(std::abs(f_tree_power_radius(m, 3) - power_formula_radius(f_tree(m + 1), 3)) < 1e-9);
    }
}

TEST_CASE("hyperstar radius is m^(1/k)") {
    for (int k : {2, 3, 4}) {
        for (int m = 1; m <= 8; ++m) {
            CHECK(std::abs(power_iteration(hyperstar(m, k)).rho - std::pow(m, 1.0 / k)) <= 1e-8);
        }
    }
}

TEST_SUITE_END();
