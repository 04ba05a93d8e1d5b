// Python bindings for the metric-polytope library. Exact rationals cross the
// boundary as strings ("p/q"), so values survive round trips unchanged;
// fractions.Fraction(s) parses them directly.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "metpoly/cone.hpp"
#include "metpoly/enumerate.hpp"
#include "metpoly/fixture.hpp"
#include "metpoly/io.hpp"
#include "metpoly/parallel.hpp"
#include "metpoly/symmetry.hpp"

namespace py = pybind11;
using namespace metpoly;

namespace {

MetricVector to_vector(int n, const std::vector<std::string>& coords) {
    const PairIndexer idx(n);
    if (static_cast<int>(coords.size()) != idx.dimension())
        throw std::invalid_argument("expected " + std::to_string(idx.dimension()) +
                                    " coordinates for n=" + std::to_string(n));
    std::vector<Rational> parsed;
    parsed.reserve(coords.size());
    for (const auto& s : coords) parsed.push_back(parse_rational(s));
    return MetricVector(n, std::move(parsed));
}

std::vector<std::string> from_vector(const MetricVector& x) {
    std::vector<std::string> out;
    out.reserve(x.coords.size());
    for (const auto& c : x.coords) out.push_back(format_rational(c));
    return out;
}

std::vector<std::vector<std::string>> from_vectors(const std::vector<MetricVector>& xs) {
    std::vector<std::vector<std::string>> out;
    out.reserve(xs.size());
    for (const auto& x : xs) out.push_back(from_vector(x));
    return out;
}

}  // namespace

PYBIND11_MODULE(metpoly, m) {
    m.doc() = "Exact computations on the metric polytope m_n: facets, cuts, vertex "
              "and adjacency tests, tangent-cone ray shooting, symmetry orbits and "
              "small-n vertex enumeration. Coordinates are exact rationals passed "
              "as strings like '2/9'.";

    m.def("set_thread_count", &set_thread_count, py::arg("threads"),
          "Worker threads for parallel sections (0 = all cores).");

    m.def("dimension", [](int n) { return PairIndexer(n).dimension(); }, py::arg("n"));
    m.def("pair_index", [](int n, int i, int j) { return PairIndexer(n).index(i, j); },
          py::arg("n"), py::arg("i"), py::arg("j"),
          "Lexicographic coordinate position of the node pair (i, j).");

    m.def("facet_count", [](int n) { return static_cast<int>(generate_facets(n).size()); },
          py::arg("n"));
    m.def("facet_names",
          [](int n) {
              std::vector<std::string> names;
              for (const auto& f : generate_facets(n)) names.push_back(format_delta_name(f));
              return names;
          },
          py::arg("n"), "All facet names in canonical order ('T i j / k', 'P i j k').");

    m.def("cut_vector",
          [](int n, const std::vector<int>& members) {
              return from_vector(cut_vector(CutSet(n, members)));
          },
          py::arg("n"), py::arg("members"),
          "Incidence vector of the cut delta(S); S is canonicalized to exclude node 1.");

    m.def("is_integral",
          [](int n, const std::vector<std::string>& coords) { return is_integral(to_vector(n, coords)); },
          py::arg("n"), py::arg("coords"));
    m.def("is_feasible",
          [](int n, const std::vector<std::string>& coords) {
              return FacetSystem(n).is_feasible(to_vector(n, coords));
          },
          py::arg("n"), py::arg("coords"));
    m.def("is_vertex",
          [](int n, const std::vector<std::string>& coords) {
              return FacetSystem(n).is_vertex(to_vector(n, coords));
          },
          py::arg("n"), py::arg("coords"));
    m.def("incidence",
          [](int n, const std::vector<std::string>& coords) {
              const FacetSystem sys(n);
              std::vector<std::string> names;
              for (int id : sys.incidence(to_vector(n, coords)))
                  names.push_back(format_delta_name(sys.facet(id)));
              return names;
          },
          py::arg("n"), py::arg("coords"), "Names of the facets tight at the point.");
    m.def("are_adjacent",
          [](int n, const std::vector<std::string>& u, const std::vector<std::string>& v) {
              return FacetSystem(n).are_adjacent(to_vector(n, u), to_vector(n, v));
          },
          py::arg("n"), py::arg("u"), py::arg("v"));

    m.def("tangent_cone_rays",
          [](int n, const std::vector<std::string>& coords) {
              return from_vectors(tangent_cone(FacetSystem(n), to_vector(n, coords)).rays);
          },
          py::arg("n"), py::arg("coords"),
          "Extreme rays of the tangent cone at a vertex, as primitive integer vectors.");
    m.def("neighbors",
          [](int n, const std::vector<std::string>& coords) {
              return from_vectors(neighbors(FacetSystem(n), to_vector(n, coords)));
          },
          py::arg("n"), py::arg("coords"));
    m.def("adjacent_to_some_cut",
          [](int n, const std::vector<std::string>& coords) {
              return adjacent_to_some_cut(FacetSystem(n), to_vector(n, coords));
          },
          py::arg("n"), py::arg("coords"));

    m.def("apply_permutation",
          [](int n, const std::vector<int>& perm, const std::vector<std::string>& coords) {
              return from_vector(apply_permutation(perm, to_vector(n, coords)));
          },
          py::arg("n"), py::arg("perm"), py::arg("coords"));
    m.def("apply_switching",
          [](int n, const std::vector<int>& members, const std::vector<std::string>& coords) {
              return from_vector(apply_switching(CutSet(n, members), to_vector(n, coords)));
          },
          py::arg("n"), py::arg("members"), py::arg("coords"));
    m.def("canonical_form",
          [](int n, const std::vector<std::string>& coords) {
              return from_vector(canonical_form(to_vector(n, coords)));
          },
          py::arg("n"), py::arg("coords"),
          "Lexicographically least image under node permutations and switchings.");
    m.def("orbit_size",
          [](int n, const std::vector<std::string>& coords) {
              return orbit(to_vector(n, coords)).size();
          },
          py::arg("n"), py::arg("coords"), "Exhaustive orbit size (n <= 6).");

    m.def("enumerate_vertices",
          [](int n, bool allow_long) { return from_vectors(enumerate_vertices(n, allow_long).vertices); },
          py::arg("n"), py::arg("allow_long") = false,
          "All vertices of m_n in lexicographic order (3 <= n <= 6).");

    m.def("enumerate_summary",
          [](int n, bool allow_long) {
              const VertexSet vs = enumerate_vertices(n, allow_long);
              const FacetSystem sys(n);
              const VertexGraph g = build_graph(sys, vs);
              const DominationReport dom = check_domination(sys, vs);
              const auto conn = check_fractional_connectivity(vs, g);
              const OrbitSummary orbits = orbit_summary(vs);
              py::dict out;
              out["n"] = n;
              out["vertices"] = vs.size();
              out["cuts"] = vs.integral_count();
              out["fractional"] = vs.size() - vs.integral_count();
              out["edges"] = g.edge_count;
              out["diameter"] = diameter(g);
              out["domination_holds"] = dom.holds();
              out["fractional_components"] = conn.component_count;
              out["orbit_count"] = orbits.orbits.size();
              return out;
          },
          py::arg("n"), py::arg("allow_long") = false,
          "Enumeration plus skeleton statistics and conjecture checks.");

    m.def("fixture_names", &fixture_names);
    m.def("fixture_vertex",
          [](const std::string& name) {
              const Fixture* fx = find_fixture(name);
              if (!fx) throw std::invalid_argument("unknown fixture '" + name + "'");
              return py::make_tuple(fx->vertex.n, from_vector(fx->vertex));
          },
          py::arg("name"), "Returns (n, coords) of a built-in fixture.");
    m.def("fixture_expected_incidence",
          [](const std::string& name) {
              const Fixture* fx = find_fixture(name);
              if (!fx) throw std::invalid_argument("unknown fixture '" + name + "'");
              return fx->expected_incidence;
          },
          py::arg("name"));
}
