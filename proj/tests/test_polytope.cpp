#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <random>
#include <set>

#include "metpoly/fixture.hpp"
#include "metpoly/io.hpp"
#include "metpoly/polytope.hpp"

using namespace metpoly;

#ifndef METPOLY_DATA_DIR
#define METPOLY_DATA_DIR "data"
#endif

namespace {

// random point of cu_n (hence of m_n): convex combination of random cuts
MetricVector random_cut_combination(int n, std::mt19937& rng) {
    const auto cuts = all_cut_sets(n);
    std::uniform_int_distribution<std::size_t> pick(0, cuts.size() - 1);
    std::uniform_int_distribution<int> weight(1, 5);
    MetricVector x = MetricVector::zero(n);
    Rational total(0);
    for (int k = 0; k < 4; ++k) {
        const Rational w(weight(rng));
        const MetricVector c = cut_vector(cuts[pick(rng)]);
        for (std::size_t t = 0; t < x.coords.size(); ++t) x.coords[t] += w * c.coords[t];
        total += w;
    }
    for (auto& c : x.coords) c /= total;
    return x;
}

}  // namespace

TEST_CASE("pair indexing is lexicographic") {
    const PairIndexer p3(3);
    CHECK(p3.index(1, 2) == 0);
    CHECK(p3.index(1, 3) == 1);
    CHECK(p3.index(2, 3) == 2);

    const PairIndexer p9(9);
    CHECK(p9.index(1, 2) == 0);
    CHECK(p9.index(1, 9) == 7);
    CHECK(p9.index(2, 3) == 8);
    CHECK(p9.index(8, 9) == 35);

    CHECK_THROWS_AS(p9.index(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(p9.index(5, 2), std::invalid_argument);
    CHECK_THROWS_AS(p9.index(1, 10), std::invalid_argument);
    CHECK_THROWS_AS(PairIndexer(2), std::invalid_argument);

    for (int idx = 0; idx < p9.dimension(); ++idx) {
        const auto [i, j] = p9.pair(idx);
        CHECK(p9.index(i, j) == idx);
    }
}

TEST_CASE("facet generation counts and order") {
    CHECK(generate_facets(3).size() == 4);
    CHECK(generate_facets(5).size() == 40);
    CHECK(generate_facets(9).size() == 336);
    for (int n = 3; n <= 9; ++n)
        CHECK(static_cast<int>(generate_facets(n).size()) == 4 * n * (n - 1) * (n - 2) / 6);
    CHECK_THROWS_AS(generate_facets(2), std::invalid_argument);

    // canonical order: triples lexicographic, apex ascending, perimeter last
    const auto f3 = generate_facets(3);
    CHECK(format_delta_name(f3[0]) == "T 2 3 / 1");
    CHECK(format_delta_name(f3[1]) == "T 1 3 / 2");
    CHECK(format_delta_name(f3[2]) == "T 1 2 / 3");
    CHECK(format_delta_name(f3[3]) == "P 1 2 3");
}

TEST_CASE("facet names round-trip") {
    const auto parsed = parse_delta_name("T 2 3 / 1");
    CHECK(parsed.kind == FacetKind::Triangle);
    CHECK(parsed.i == 2);
    CHECK(parsed.j == 3);
    CHECK(parsed.k == 1);
    const auto peri = parse_delta_name("P 2 6 7");
    CHECK(peri.kind == FacetKind::Perimeter);

    for (const auto& f : generate_facets(9)) {
        const auto back = parse_delta_name(format_delta_name(f));
        CHECK(back.kind == f.kind);
        CHECK(back.i == f.i);
        CHECK(back.j == f.j);
        CHECK(back.k == f.k);
    }

    CHECK_THROWS_AS(parse_delta_name(""), ParseError);
    CHECK_THROWS_AS(parse_delta_name("X 1 2 3"), ParseError);
    CHECK_THROWS_AS(parse_delta_name("T 2 3"), ParseError);
    CHECK_THROWS_AS(parse_delta_name("P 3 2 1"), ParseError);
    CHECK_THROWS_AS(parse_delta_name("T 2 3 / 1 junk"), ParseError);
}

TEST_CASE("cut vectors") {
    CHECK(cut_vector(CutSet(3, {})) == MetricVector::zero(3));

    const MetricVector d2 = cut_vector(CutSet(3, {2}));
    CHECK(d2.coords == std::vector<Rational>{1, 0, 1});

    const MetricVector d23 = cut_vector(CutSet(4, {2, 3}));
    const PairIndexer idx(4);
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j) {
            const bool expect_one = (i == 1 && j == 2) || (i == 1 && j == 3) ||
                                    (i == 2 && j == 4) || (i == 3 && j == 4);
            CHECK(d23.coords[static_cast<std::size_t>(idx.index(i, j))] == (expect_one ? 1 : 0));
        }

    // canonicalization drops node 1 via complementation
    CHECK(CutSet(4, {1, 4}).members == std::vector<int>{2, 3});
    CHECK(cut_vector(CutSet(4, {1, 4})) == cut_vector(CutSet(4, {2, 3})));
    CHECK(all_cut_sets(5).size() == 16);
    CHECK(all_cut_sets(6).size() == 32);
}

TEST_CASE("slack evaluation") {
    const FacetSystem sys9(9);
    const MetricVector& v = counterexample_fixture().vertex;

    const FacetInequality tri = parse_delta_name("T 2 3 / 1");
    CHECK(evaluate_slack(tri, v) == 0);
    const FacetInequality peri = parse_delta_name("P 2 6 7");
    CHECK(evaluate_slack(peri, v) == 0);

    MetricVector half = MetricVector::zero(5);
    for (auto& c : half.coords) c = Rational(1, 2);
    const FacetInequality p5 = parse_delta_name("P 1 2 3");
    CHECK(evaluate_slack(p5, half) == Rational(1, 2));

    // dimension mismatch
    const FacetInequality far = parse_delta_name("T 8 9 / 7");
    CHECK_THROWS_AS(evaluate_slack(far, half), std::invalid_argument);
}

TEST_CASE("incidence of the counterexample matches the golden list") {
    const FacetSystem sys(9);
    const Fixture& fx = counterexample_fixture();
    const auto tight = sys.incidence(fx.vertex);
    REQUIRE(tight.size() == 37);

    std::vector<std::string> names;
    names.reserve(tight.size());
    for (int id : tight) names.push_back(format_delta_name(sys.facet(id)));
    CHECK(names == fx.expected_incidence);

    // and against the golden data file
    std::ifstream golden(std::string(METPOLY_DATA_DIR) + "/m9_counterexample_incidence.txt");
    REQUIRE(golden.good());
    std::vector<std::string> file_names;
    std::string line;
    while (std::getline(golden, line))
        if (!line.empty()) file_names.push_back(line);
    CHECK(names == file_names);
}

TEST_CASE("incidence edge cases") {
    const FacetSystem sys3(3);
    // all-1/2 point: strictly interior for perimeter and triangles
    MetricVector half = MetricVector::zero(3);
    for (auto& c : half.coords) c = Rational(1, 2);
    CHECK(sys3.incidence(half).empty());

    // zero cut: the 3 triangle facets are tight
    const auto tight = sys3.incidence(MetricVector::zero(3));
    REQUIRE(tight.size() == 3);
    for (int id : tight) CHECK(sys3.facet(id).kind == FacetKind::Triangle);

    // infeasible point: names a violated facet
    MetricVector bad = MetricVector::zero(3);
    bad.coords[0] = 1;  // x12 = 1, x13 = x23 = 0 violates T 1 2 / 3
    CHECK_THROWS_AS(sys3.incidence(bad), InfeasibleError);
    try {
        sys3.incidence(bad);
    } catch (const InfeasibleError& e) {
        CHECK(format_delta_name(sys3.facet(e.facet_id())) == e.facet_name());
    }
}

TEST_CASE("vertexhood") {
    const FacetSystem sys9(9);
    CHECK(sys9.is_vertex(counterexample_fixture().vertex));

    const FacetSystem sys5(5);
    MetricVector half = MetricVector::zero(5);
    for (auto& c : half.coords) c = Rational(1, 2);
    CHECK_FALSE(sys5.is_vertex(half));

    for (const auto& s : all_cut_sets(5)) CHECK(sys5.is_vertex(cut_vector(s)));

    // infeasible input is just not a vertex
    MetricVector bad = MetricVector::zero(5);
    bad.coords[0] = 3;
    CHECK_FALSE(sys5.is_vertex(bad));
}

TEST_CASE("cut vectors are vertices for n = 3..6") {
    for (int n = 3; n <= 6; ++n) {
        const FacetSystem sys(n);
        for (const auto& s : all_cut_sets(n)) {
            const MetricVector c = cut_vector(s);
            for (int id = 0; id < sys.facet_count(); ++id) CHECK(sys.slack(id, c) >= 0);
            CHECK(sys.is_vertex(c));
        }
    }
}

TEST_CASE("cuts satisfy all facets for n = 7") {
    const FacetSystem sys(7);
    for (const auto& s : all_cut_sets(7)) {
        const MetricVector c = cut_vector(s);
        for (int id = 0; id < sys.facet_count(); ++id) CHECK(sys.slack(id, c) >= 0);
    }
}

TEST_CASE("adjacency") {
    const FacetSystem sys5(5);
    const auto cuts = all_cut_sets(5);

    // any two distinct cuts form an edge
    for (std::size_t a = 0; a < cuts.size(); ++a)
        for (std::size_t b = a + 1; b < cuts.size(); ++b)
            CHECK(sys5.are_adjacent(cut_vector(cuts[a]), cut_vector(cuts[b])));

    // symmetry on sampled pairs
    std::mt19937 rng(2025);
    std::uniform_int_distribution<std::size_t> pick(0, cuts.size() - 1);
    for (int t = 0; t < 10; ++t) {
        const auto u = cut_vector(cuts[pick(rng)]);
        const auto v = cut_vector(cuts[pick(rng)]);
        if (u == v) continue;
        CHECK(sys5.are_adjacent(u, v) == sys5.are_adjacent(v, u));
    }

    // non-vertex input is an error
    MetricVector half = MetricVector::zero(5);
    for (auto& c : half.coords) c = Rational(1, 2);
    CHECK_THROWS_AS(sys5.are_adjacent(half, cut_vector(cuts[1])), std::invalid_argument);
    CHECK_THROWS_AS(sys5.are_adjacent(cut_vector(cuts[1]), cut_vector(cuts[1])),
                    std::invalid_argument);
}

TEST_CASE("integrality") {
    CHECK(is_integral(MetricVector::zero(4)));
    for (const auto& s : all_cut_sets(4)) CHECK(is_integral(cut_vector(s)));
    CHECK_FALSE(is_integral(counterexample_fixture().vertex));
}

TEST_CASE("triangle facets imply nonnegative coordinates") {
    // rejection-sample points from a box straddling negative values
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> num(-2, 8);
    const FacetSystem sys(3);
    int kept = 0;
    for (int t = 0; t < 4000 && kept < 60; ++t) {
        MetricVector x = MetricVector::zero(3);
        for (auto& c : x.coords) c = Rational(num(rng), 8);
        bool triangles_ok = true;
        for (int id = 0; id < sys.facet_count(); ++id) {
            if (sys.facet(id).kind != FacetKind::Triangle) continue;
            if (sys.slack(id, x) < 0) {
                triangles_ok = false;
                break;
            }
        }
        if (!triangles_ok) continue;
        ++kept;
        for (const auto& c : x.coords) CHECK(c >= 0);
    }
    CHECK(kept > 0);
}

TEST_CASE("random cut combinations stay feasible") {
    std::mt19937 rng(7);
    for (int n : {4, 5, 6}) {
        const FacetSystem sys(n);
        for (int t = 0; t < 20; ++t) CHECK(sys.is_feasible(random_cut_combination(n, rng)));
    }
}

TEST_CASE("vertex file round trip") {
    const MetricVector& v = counterexample_fixture().vertex;
    std::stringstream buf;
    write_vertex(buf, v);
    const MetricVector back = read_vertex(buf);
    CHECK(back == v);

    std::stringstream bad1("2\n1 2 3\n");
    CHECK_THROWS_AS(read_vertex(bad1), ParseError);
    std::stringstream bad2("3\n1 2\n");
    CHECK_THROWS_AS(read_vertex(bad2), ParseError);
    std::stringstream bad3("3\n1 2 x\n");
    CHECK_THROWS_AS(read_vertex(bad3), ParseError);
    std::stringstream bad4("3\n0 0 0 0\n");
    CHECK_THROWS_AS(read_vertex(bad4), ParseError);
}

TEST_CASE("vertex set file round trip") {
    VertexSet vs;
    vs.n = 4;
    for (const auto& s : all_cut_sets(4)) vs.vertices.push_back(cut_vector(s));
    std::sort(vs.vertices.begin(), vs.vertices.end());
    std::stringstream buf;
    write_vertex_set(buf, vs);
    const VertexSet back = read_vertex_set(buf);
    CHECK(back.n == 4);
    CHECK(back.vertices == vs.vertices);
}
