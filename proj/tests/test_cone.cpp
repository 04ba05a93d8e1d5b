#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "metpoly/cone.hpp"
#include "metpoly/enumerate.hpp"
#include "metpoly/fixture.hpp"
#include "metpoly/io.hpp"
#include "metpoly/symmetry.hpp"

using namespace metpoly;

#ifndef METPOLY_DATA_DIR
#define METPOLY_DATA_DIR "data"
#endif

TEST_CASE("tangent cone at a simple vertex of m_3") {
    const FacetSystem sys(3);
    // m_3 is a simplex on the 4 cuts; every vertex has 3 edges
    for (const auto& s : all_cut_sets(3)) {
        const MetricVector v = cut_vector(s);
        const TangentCone cone = tangent_cone(sys, v);
        CHECK(cone.rays.size() == 3);

        const auto nbrs = neighbors(sys, v);
        std::set<MetricVector> expected;
        for (const auto& t : all_cut_sets(3)) {
            const MetricVector w = cut_vector(t);
            if (!(w == v)) expected.insert(w);
        }
        CHECK(nbrs == std::vector<MetricVector>(expected.begin(), expected.end()));
    }
}

TEST_CASE("tangent cone rays satisfy the cone inequalities and are extreme") {
    const FacetSystem sys(4);
    const MetricVector v = cut_vector(CutSet(4, {}));  // degenerate: 12 tight facets
    const TangentCone cone = tangent_cone(sys, v);
    CHECK(cone.rays.size() == 7);  // m_4 = cu_4 has 8 pairwise-adjacent vertices

    for (const auto& r : cone.rays) {
        RowBasis tight_at_ray(sys.dimension());
        for (int id : cone.tight) {
            const Rational d = sys.normal_dot(id, r);
            CHECK(d <= 0);
            if (d == 0) tight_at_ray.insert(sys.dense_normal(id));
        }
        CHECK(tight_at_ray.rank() == sys.dimension() - 1);
        // integer coordinates, gcd 1
        CHECK(primitive_integer_vector(r.coords) == r.coords);
    }

    // no two rays proportional: distinct primitive vectors suffice
    std::set<MetricVector> dedup(cone.rays.begin(), cone.rays.end());
    CHECK(dedup.size() == cone.rays.size());

    MetricVector half = MetricVector::zero(4);
    for (auto& c : half.coords) c = Rational(1, 2);
    CHECK_THROWS_AS(tangent_cone(sys, half), std::invalid_argument);
}

TEST_CASE("counterexample cone has 37 extreme rays") {
    const FacetSystem sys(9);
    const TangentCone cone = tangent_cone(sys, counterexample_fixture().vertex);
    CHECK(cone.tight.size() == 37);  // quasi-simple: dimension + 1
    CHECK(cone.rays.size() == 37);
}

TEST_CASE("ray shooting between cuts of m_3") {
    const FacetSystem sys(3);
    const MetricVector origin = MetricVector::zero(3);
    const MetricVector target = cut_vector(CutSet(3, {2}));  // (1,0,1)
    MetricVector dir(3, {Rational(1), Rational(0), Rational(1)});
    CHECK(ray_shoot(sys, origin, dir) == target);
}

TEST_CASE("ray shooting lands on adjacent vertices") {
    const FacetSystem sys(5);
    std::mt19937 rng(31337);
    const auto cuts = all_cut_sets(5);
    std::uniform_int_distribution<std::size_t> pick(0, cuts.size() - 1);
    for (int t = 0; t < 3; ++t) {
        const MetricVector v = cut_vector(cuts[pick(rng)]);
        const TangentCone cone = tangent_cone(sys, v);
        for (const auto& r : cone.rays) {
            const MetricVector w = ray_shoot(sys, v, r);
            CHECK(sys.is_vertex(w));
            CHECK(sys.are_adjacent(v, w));
        }
    }
}

TEST_CASE("counterexample neighbors equal the golden list") {
    const FacetSystem sys(9);
    const MetricVector& v = counterexample_fixture().vertex;
    const auto nbrs = neighbors(sys, v);
    REQUIRE(nbrs.size() == 37);

    const auto golden =
        read_vector_lines(std::string(METPOLY_DATA_DIR) + "/m9_counterexample_neighbors.txt", 9);
    REQUIRE(golden.size() == 37);
    CHECK(nbrs == golden);  // both sorted lexicographically

    for (const auto& w : nbrs) {
        CHECK_FALSE(is_integral(w));
        CHECK(sys.are_adjacent(v, w));
    }
}

TEST_CASE("neighbors of a cut of m_5 include all other cuts") {
    const FacetSystem sys(5);
    const MetricVector v = cut_vector(CutSet(5, {3}));
    const auto nbrs = neighbors(sys, v);
    for (const auto& s : all_cut_sets(5)) {
        const MetricVector w = cut_vector(s);
        if (w == v) continue;
        CHECK(std::binary_search(nbrs.begin(), nbrs.end(), w));
    }
}

TEST_CASE("cut adjacency verdicts") {
    const FacetSystem sys9(9);
    CHECK_FALSE(adjacent_to_some_cut(sys9, counterexample_fixture().vertex));

    const FacetSystem sys5(5);
    for (const auto& s : all_cut_sets(5))
        CHECK(adjacent_to_some_cut(sys5, cut_vector(s)));

    MetricVector half = MetricVector::zero(5);
    for (auto& c : half.coords) c = Rational(1, 2);
    CHECK_THROWS_AS(adjacent_to_some_cut(sys5, half), std::invalid_argument);
}

TEST_CASE("neighbor relation is symmetric on m_5") {
    const FacetSystem sys(5);
    const MetricVector v = cut_vector(CutSet(5, {2, 4}));
    const auto nbrs = neighbors(sys, v);
    for (const auto& w : nbrs) {
        const auto back = neighbors(sys, w);
        CHECK(std::binary_search(back.begin(), back.end(), v));
    }
}

TEST_CASE("neighbors commute with the group action on m_5 vertices") {
    const FacetSystem sys(5);
    std::mt19937 rng(5150);
    std::vector<int> perm{3, 1, 4, 2, 5};
    const SymmetryElement g{perm, CutSet(5, {2, 5})};
    const MetricVector v = cut_vector(CutSet(5, {4}));
    const auto lhs = neighbors(sys, apply_symmetry(g, v));
    auto rhs = neighbors(sys, v);
    for (auto& w : rhs) w = apply_symmetry(g, w);
    std::sort(rhs.begin(), rhs.end());
    CHECK(lhs == rhs);
}
