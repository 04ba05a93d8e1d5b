#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "metpoly/cone.hpp"
#include "metpoly/enumerate.hpp"
#include "metpoly/fixture.hpp"
#include "metpoly/symmetry.hpp"

using namespace metpoly;

TEST_CASE("vertex counts for n = 3, 4, 5") {
    const VertexSet m3 = enumerate_vertices(3);
    CHECK(m3.size() == 4);
    CHECK(m3.integral_count() == 4);

    const VertexSet m4 = enumerate_vertices(4);
    CHECK(m4.size() == 8);
    CHECK(m4.integral_count() == 8);

    const VertexSet m5 = enumerate_vertices(5);
    CHECK(m5.size() == 32);
    CHECK(m5.integral_count() == 16);

    CHECK_THROWS_AS(enumerate_vertices(2), CapabilityError);
    CHECK_THROWS_AS(enumerate_vertices(7), CapabilityError);
    CHECK_THROWS_AS(enumerate_vertices(8, true), CapabilityError);
}

TEST_CASE("every enumerated vertex passes is_vertex and every cut appears") {
    for (int n : {3, 4, 5}) {
        const FacetSystem sys(n);
        const VertexSet vs = enumerate_vertices(n);
        for (const auto& v : vs.vertices) CHECK(sys.is_vertex(v));
        for (const auto& s : all_cut_sets(n)) {
            const MetricVector c = cut_vector(s);
            CHECK(std::binary_search(vs.vertices.begin(), vs.vertices.end(), c));
        }
        CHECK(vs.integral_count() == (1u << (n - 1)));
    }
}

TEST_CASE("enumeration equals the brute-force basic-solution oracle for n = 3, 4") {
    for (int n : {3, 4}) {
        const VertexSet dd = enumerate_vertices(n);
        const VertexSet oracle = enumerate_vertices_bruteforce(n);
        CHECK(dd.vertices == oracle.vertices);
    }
}

TEST_CASE("m_3 graph is the complete graph K4") {
    const FacetSystem sys(3);
    const VertexSet vs = enumerate_vertices(3);
    const VertexGraph g = build_graph(sys, vs);
    CHECK(g.edge_count == 6);
    for (const auto& row : g.adj) CHECK(row.size() == 3);
    CHECK(diameter(g) == 1);
}

TEST_CASE("cuts induce a clique in m_5") {
    const FacetSystem sys(5);
    const VertexSet vs = enumerate_vertices(5);
    const VertexGraph g = build_graph(sys, vs);

    std::vector<int> cut_ids;
    for (std::size_t k = 0; k < vs.size(); ++k)
        if (is_integral(vs.vertices[k])) cut_ids.push_back(static_cast<int>(k));
    REQUIRE(cut_ids.size() == 16);
    for (std::size_t a = 0; a < cut_ids.size(); ++a)
        for (std::size_t b = a + 1; b < cut_ids.size(); ++b)
            CHECK(std::binary_search(g.adj[static_cast<std::size_t>(cut_ids[a])].begin(),
                                     g.adj[static_cast<std::size_t>(cut_ids[a])].end(),
                                     cut_ids[b]));

    // regression: the m_5 skeleton is stable
    CHECK(g.edge_count == 280);

    // degrees agree with the tangent-cone neighbor counts
    for (std::size_t k = 0; k < vs.size(); ++k)
        CHECK(g.adj[k].size() == neighbors(sys, vs.vertices[k]).size());
}

TEST_CASE("diameters of m_3..m_5") {
    for (int n : {3, 4}) {
        const FacetSystem sys(n);
        const VertexGraph g = build_graph(sys, enumerate_vertices(n));
        CHECK(diameter(g) == 1);
    }
    const FacetSystem sys5(5);
    const VertexGraph g5 = build_graph(sys5, enumerate_vertices(5));
    CHECK(diameter(g5) == 2);
}

TEST_CASE("diameter rejects disconnected graphs") {
    VertexGraph g;
    g.adj = {{1}, {0}, {3}, {2}};
    CHECK_THROWS_WITH_AS(diameter(g), doctest::Contains("disconnected"), std::runtime_error);
}

TEST_CASE("domination holds on m_5") {
    const FacetSystem sys(5);
    const VertexSet vs = enumerate_vertices(5);
    const DominationReport report = check_domination(sys, vs);
    CHECK(report.fractional_count == 16);
    CHECK(report.holds());

    // agreement with neighbor-based integral adjacency
    for (std::size_t k = 0; k < vs.size(); ++k) {
        if (is_integral(vs.vertices[k])) continue;
        const auto nbrs = neighbors(sys, vs.vertices[k]);
        const bool has_cut_neighbor =
            std::any_of(nbrs.begin(), nbrs.end(), [](const MetricVector& w) { return is_integral(w); });
        CHECK(has_cut_neighbor == adjacent_to_some_cut(sys, vs.vertices[k]));
        CHECK(has_cut_neighbor);
    }
}

TEST_CASE("a vertex set holding only the counterexample has one violator") {
    const FacetSystem sys(9);
    VertexSet vs;
    vs.n = 9;
    vs.vertices.push_back(counterexample_fixture().vertex);
    const DominationReport report = check_domination(sys, vs);
    CHECK(report.fractional_count == 1);
    CHECK(report.violators == std::vector<int>{0});
}

TEST_CASE("fractional connectivity reports") {
    // m_3: no fractional vertices at all
    const FacetSystem sys3(3);
    const VertexSet m3 = enumerate_vertices(3);
    const auto r3 = check_fractional_connectivity(m3, build_graph(sys3, m3));
    CHECK(r3.fractional_count == 0);
    CHECK(r3.component_count == 0);

    // m_5: reported, not asserted; determinism across two computations
    const FacetSystem sys5(5);
    const VertexSet m5 = enumerate_vertices(5);
    const VertexGraph g5 = build_graph(sys5, m5);
    const auto r5a = check_fractional_connectivity(m5, g5);
    const auto r5b = check_fractional_connectivity(m5, g5);
    CHECK(r5a.fractional_count == 16);
    CHECK(r5a.component_count >= 1);
    CHECK(r5a.component_count == r5b.component_count);
}

TEST_CASE("orbit summary of m_5") {
    const VertexSet vs = enumerate_vertices(5);
    const OrbitSummary summary = orbit_summary(vs);

    // regression: the 32 vertices split into the cut orbit and one fractional orbit
    CHECK(summary.orbits.size() == 2);

    std::size_t total = 0;
    for (const auto& orb : summary.orbits) {
        total += orb.size;
        CHECK(symmetry_group_order(5) % orbit(orb.representative).size() == 0);
        CHECK(canonical_form(orb.representative) == orb.representative);
    }
    CHECK(total == 32);

    // all cuts collapse into the orbit of the zero vector
    bool has_zero = false;
    for (const auto& orb : summary.orbits)
        if (orb.representative == MetricVector::zero(5)) {
            has_zero = true;
            CHECK(orb.size == 16);
        }
    CHECK(has_zero);
}

TEST_CASE("enumerated set is closed under random symmetries") {
    std::mt19937 rng(161803);
    const VertexSet vs = enumerate_vertices(5);
    std::vector<int> perm(5);
    std::iota(perm.begin(), perm.end(), 1);
    for (int t = 0; t < 100; ++t) {
        std::shuffle(perm.begin(), perm.end(), rng);
        std::uniform_int_distribution<std::uint32_t> mask(0, 15);
        std::vector<int> members;
        const std::uint32_t m = mask(rng);
        for (int v = 2; v <= 5; ++v)
            if (m & (1u << (v - 2))) members.push_back(v);
        const SymmetryElement g{perm, CutSet(5, members)};
        const std::size_t pick = static_cast<std::size_t>(t) % vs.size();
        const MetricVector image = apply_symmetry(g, vs.vertices[pick]);
        CHECK(std::binary_search(vs.vertices.begin(), vs.vertices.end(), image));
    }
}
