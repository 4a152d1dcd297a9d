#include "doctest.h"

#include <cmath>
#include <cstdlib>
#include <random>
#include <set>

#include "oracles.hpp"
#include "supertree/certificates.hpp"
#include "supertree/constructors.hpp"
#include "supertree/error.hpp"
#include "supertree/ordering.hpp"

using namespace supertree;

TEST_SUITE_BEGIN("ordering");

TEST_CASE("enumeration counts match brute force") {
    // unlabeled trees on m+1 vertices
    const std::vector<std::size_t> trees{1, 1, 2, 3, 6, 11, 23};
    for (int m = 1; m <= 7; ++m) CHECK(enumerate_supertrees(m, 2).size() == trees[static_cast<std::size_t>(m - 1)]);

    CHECK(enumerate_supertrees(4, 2).size() == 3);
    CHECK(enumerate_supertrees(4, 3).size() == 4);

    for (int m = 1; m <= 5; ++m) CHECK(enumerate_supertrees(m, 2).size() == oracle::brute_force_classes(m, 2).size());
    for (int m = 1; m <= 4; ++m) CHECK(enumerate_supertrees(m, 3).size() == oracle::brute_force_classes(m, 3).size());
    CHECK(enumerate_supertrees(3, 4).size() == oracle::brute_force_classes(3, 4).size());
}

TEST_CASE("enumeration output is well formed") {
    for (int k : {2, 3, 4}) {
        for (int m = 1; m <= 6; ++m) {
            std::set<std::string> keys;
            for (const auto& h : enumerate_supertrees(m, k)) {
                CHECK(is_supertree(h));
                CHECK(h.m() == m);
                CHECK(keys.insert(canonical_key(h)).second);
            }
        }
    }
}

TEST_CASE("enumeration is closed under random growth") {
    std::mt19937_64 rng(17);
    for (int k : {2, 3}) {
        for (int m = 2; m <= 6; ++m) {
            std::set<std::string> keys;
            for (const auto& h : enumerate_supertrees(m, k)) keys.insert(canonical_key(h));
            for (int i = 0; i < 15; ++i) {
                auto h = random_supertree(m, k, rng);
                CHECK(is_supertree(h));
                CHECK(keys.count(canonical_key(oracle::random_relabel(h, rng))) == 1);
            }
        }
    }
}

TEST_CASE("enumeration limit") {
    CHECK_THROWS_AS(enumerate_supertrees(8, 3, 7), LimitExceeded);
    CHECK_THROWS_AS(enumerate_supertrees(0, 3), InvalidArgument);

    ::setenv("SUPERTREE_ENUM_LIMIT", "3", 1);
    CHECK(enumeration_limit() == 3);
    CHECK_THROWS_AS(enumerate_supertrees(4, 3), LimitExceeded);
    ::setenv("SUPERTREE_ENUM_LIMIT", "junk", 1);
    CHECK(enumeration_limit() == kDefaultEnumerationLimit);
    ::unsetenv("SUPERTREE_ENUM_LIMIT");
    CHECK(enumeration_limit() == kDefaultEnumerationLimit);
}

TEST_CASE("non-pendent count separates the smallest classes") {
    for (int k : {3, 4}) {
        for (int m = 2; m <= 6; ++m) {
            for (const auto& h : enumerate_supertrees(m, k)) {
                const int n2 = non_pendent_count(h);
                if (n2 == 1) CHECK(canonical_key(h) == canonical_key(hyperstar(m, k)));
                if (n2 == 2) CHECK(is_tree_power(h));
                CHECK(n2 <= m - 1);
            }
        }
    }
}

TEST_CASE("methods") {
    CHECK(parse_method("alpha") == RadiusMethod::alpha);
    CHECK(to_string(RadiusMethod::formula) == "formula");
    CHECK_THROWS_AS(parse_method("auto"), InvalidArgument);

    auto r = compute_radius(broom(1, 1, 2, 3), RadiusMethod::formula);
    CHECK(r.method == RadiusMethod::power);
    CHECK(compute_radius(hyperstar(3, 3), RadiusMethod::formula).method == RadiusMethod::formula);

    for (int k : {2, 3}) {
        for (int m = 1; m <= 5; ++m) {
            for (const auto& h : enumerate_supertrees(m, k)) {
                const double p = compute_radius(h, RadiusMethod::power).rho;
                CHECK(std::abs(compute_radius(h, RadiusMethod::alpha).rho - p) < 1e-8);
                CHECK(std::abs(compute_radius(h, RadiusMethod::formula).rho - p) < 1e-8);
            }
        }
    }
}

TEST_CASE("rank_spectra") {
    auto report = rank_spectra(4, 3, RadiusMethod::power);
    REQUIRE(report.entries.size() == 4);
    CHECK(report.entries[0].key == canonical_key(hyperstar(4, 3)));
    CHECK(report.entries[0].rho == doctest::Approx(std::cbrt(4.0)).epsilon(1e-9));
    CHECK(report.entries[1].key == canonical_key(tree_power(double_star(1, 2), 3)));
    CHECK(report.entries[2].key == canonical_key(broom(1, 1, 1, 3)));
    CHECK(report.entries[1].rho - report.entries[2].rho > 1e-2);
    CHECK(report.entries[3].key == canonical_key(tree_power(path(5), 3)));
    for (std::size_t i = 0; i < report.entries.size(); ++i) {
        CHECK(report.entries[i].rank == static_cast<int>(i) + 1);
        if (i + 1 < report.entries.size()) CHECK(report.entries[i].rho >= report.entries[i + 1].rho);
    }
    for (const auto& e : report.entries) CHECK_FALSE(e.tied_with_next);

    auto again = rank_spectra(4, 3, RadiusMethod::power);
    for (std::size_t i = 0; i < report.entries.size(); ++i) CHECK(again.entries[i].key == report.entries[i].key);
}

TEST_CASE("top four") {
    for (int m : {5, 6}) {
        auto rec = verify_top_four(m, 3);
        REQUIRE(rec.values.size() == 4);
        CHECK(rec.values[0].rho == doctest::Approx(std::cbrt(static_cast<double>(m))));
        CHECK(rec.values[2].rho == doctest::Approx(double_star_power_radius(m, 3)).epsilon(1e-9));
        for (std::size_t i = 0; i + 1 < rec.values.size(); ++i) CHECK(rec.values[i].rho - rec.values[i + 1].rho > 1e-4);
    }
    CHECK(verify_top_four(5, 3, 3).values.size() == 3);
    for (int m = 5; m <= 7; ++m) {
        auto rec = verify_top_four(m, 2);
        CHECK(rec.values[3].rho == doctest::Approx(f_tree_power_radius(m, 2)).epsilon(1e-9));
    }
    CHECK_THROWS_AS(verify_top_four(4, 3), InvalidArgument);
    CHECK_THROWS_AS(verify_top_four(5, 3, 5), InvalidArgument);
}

TEST_CASE("partitions and sandwich") {
    for (int m = 5; m <= 8; ++m) {
        auto rec = verify_partition_lemma(m, 3);
        CHECK(rec.values.front().label == "T(1,1," + std::to_string(m - 3) + ")");
        auto s = verify_sandwich(m, 3);
        CHECK(s.values[0].rho < s.values[1].rho);
        CHECK(s.values[1].rho < s.values[2].rho);
    }
    CHECK(verify_partition_lemma(7, 3).values.size() == 3);
    CHECK_THROWS_AS(verify_partition_lemma(5, 2), InvalidArgument);
    CHECK_THROWS_AS(verify_sandwich(3, 3), InvalidArgument);
}

TEST_CASE("moving edges") {
    auto rec = verify_moving_edges(10, 1);
    CHECK(rec.values.size() == 10);
    for (const auto& c : rec.values) CHECK(c.rho > 0.0);

    auto same = verify_moving_edges(10, 1);
    for (std::size_t i = 0; i < rec.values.size(); ++i) CHECK(same.values[i].rho == rec.values[i].rho);

    CHECK_THROWS_AS(verify_moving_edges(1, 1, {3, 1, 4, 10}), InvalidArgument);
}

TEST_CASE("reduce_non_pendent") {
    CHECK_THROWS_AS(reduce_non_pendent(hyperstar(4, 3)), InvalidArgument);

    auto t = broom(1, 1, 1, 3);
    auto r = reduce_non_pendent(t);
    CHECK(is_supertree(r));
    CHECK(non_pendent_count(r) == 2);
    CHECK(alpha_normal_radius(r) > alpha_normal_radius(t));

    // repeated reduction ends at the hyperstar with radii strictly increasing
    for (int k : {3, 4}) {
        for (const auto& start : enumerate_supertrees(5, k)) {
            Hypergraph h = start;
            double rho = alpha_normal_radius(h);
            while (non_pendent_count(h) >= 2) {
                Hypergraph next = reduce_non_pendent(h);
                CHECK(non_pendent_count(next) == non_pendent_count(h) - 1);
                const double rho_next = alpha_normal_radius(next);
                CHECK(rho_next > rho);
                h = next;
                rho = rho_next;
            }
            CHECK(canonical_key(h) == canonical_key(hyperstar(5, k)));
        }
    }
}

TEST_SUITE_END();
