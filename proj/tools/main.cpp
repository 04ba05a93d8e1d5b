// metpoly: exact computations on the metric polytope m_n.
//
// Exit codes: 0 = success / property holds, 1 = property fails or the input is
// not a vertex, 2 = usage or parse error.
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "metpoly/cone.hpp"
#include "metpoly/enumerate.hpp"
#include "metpoly/fixture.hpp"
#include "metpoly/io.hpp"
#include "metpoly/parallel.hpp"
#include "metpoly/symmetry.hpp"

using json = nlohmann::json;
using namespace metpoly;

namespace {

struct Options {
    bool json = false;
    bool timing = false;
    int threads = 0;
};

json facet_json(const FacetSystem& sys, int id) {
    const FacetInequality& f = sys.facet(id);
    json terms = json::array();
    for (auto [c, coef] : f.sparse_normal(sys.indexer())) {
        const auto [i, j] = sys.indexer().pair(c);
        terms.push_back({{"i", i}, {"j", j}, {"coef", coef}});
    }
    return {{"id", id},
            {"name", format_delta_name(f)},
            {"kind", f.kind == FacetKind::Triangle ? "triangle" : "perimeter"},
            {"terms", terms},
            {"rhs", format_rational(f.rhs())}};
}

std::string inequality_text(const FacetSystem& sys, int id) {
    const FacetInequality& f = sys.facet(id);
    std::string out;
    bool first = true;
    for (auto [c, coef] : f.sparse_normal(sys.indexer())) {
        const auto [i, j] = sys.indexer().pair(c);
        out += coef > 0 ? (first ? "" : " + ") : (first ? "-" : " - ");
        out += "x(" + std::to_string(i) + "," + std::to_string(j) + ")";
        first = false;
    }
    return out + " <= " + format_rational(f.rhs());
}

json coords_json(const MetricVector& x) {
    json arr = json::array();
    for (const auto& c : x.coords) arr.push_back(format_rational(c));
    return arr;
}

// resolve positional file vs --fixture NAME
MetricVector load_point(const std::string& file, const std::string& fixture) {
    if (!fixture.empty()) {
        const Fixture* fx = find_fixture(fixture);
        if (!fx) throw ParseError("unknown fixture '" + fixture + "'");
        return fx->vertex;
    }
    if (file.empty()) throw ParseError("expected a vertex file or --fixture NAME");
    return read_vertex_file(file);
}

int cmd_facets(const Options& opt, int n) {
    const FacetSystem sys(n);
    if (opt.json) {
        json out = {{"n", n}, {"facet_count", sys.facet_count()}, {"facets", json::array()}};
        for (int id = 0; id < sys.facet_count(); ++id) out["facets"].push_back(facet_json(sys, id));
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    for (int id = 0; id < sys.facet_count(); ++id)
        std::cout << id << "\t" << format_delta_name(sys.facet(id)) << "\t"
                  << inequality_text(sys, id) << "\n";
    return 0;
}

int cmd_cuts(const Options& opt, int n) {
    const auto cuts = all_cut_sets(n);
    if (opt.json) {
        json out = {{"n", n}, {"cut_count", cuts.size()}, {"cuts", json::array()}};
        for (const auto& s : cuts)
            out["cuts"].push_back({{"members", s.members}, {"coords", coords_json(cut_vector(s))}});
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    for (const auto& s : cuts) {
        std::cout << "S={";
        for (std::size_t k = 0; k < s.members.size(); ++k)
            std::cout << (k ? "," : "") << s.members[k];
        std::cout << "}\t" << format_coords(cut_vector(s)) << "\n";
    }
    return 0;
}

int cmd_incidence(const Options& opt, const std::string& file, const std::string& fixture) {
    const MetricVector x = load_point(file, fixture);
    const FacetSystem sys(x.n);
    const auto tight = sys.incidence(x);
    if (opt.json) {
        json names = json::array();
        for (int id : tight) names.push_back(format_delta_name(sys.facet(id)));
        std::cout << json{{"n", x.n}, {"tight_count", tight.size()}, {"tight", names}}.dump(2)
                  << "\n";
        return 0;
    }
    for (int id : tight) std::cout << format_delta_name(sys.facet(id)) << "\n";
    return 0;
}

int cmd_verify(const Options& opt, const std::string& file, const std::string& fixture) {
    const MetricVector x = load_point(file, fixture);
    const FacetSystem sys(x.n);
    const int dim = sys.dimension();

    // step (i): incidence
    std::vector<int> tight;
    try {
        tight = sys.incidence(x);
    } catch (const InfeasibleError& e) {
        if (opt.json)
            std::cout << json{{"n", x.n}, {"vertex", false}, {"violated_facet", e.facet_name()}}
                             .dump(2)
                      << "\n";
        else
            std::cout << "not in m_" << x.n << ": violates " << e.facet_name() << "\n";
        return 1;
    }
    if (!sys.is_vertex(x)) {
        if (opt.json)
            std::cout << json{{"n", x.n}, {"vertex", false}, {"tight_count", tight.size()}}.dump(2)
                      << "\n";
        else
            std::cout << "not a vertex (" << tight.size() << " tight facets)\n";
        return 1;
    }

    // step (ii): tangent cone; step (iii): ray shooting
    const TangentCone cone = tangent_cone(sys, x);
    const auto nbrs = neighbors(sys, x);
    const bool cut_adjacent = adjacent_to_some_cut(sys, x);

    bool consistent = nbrs.size() == cone.rays.size();
    std::size_t fractional = 0;
    for (const auto& w : nbrs) {
        if (!is_integral(w)) ++fractional;
        if (!sys.is_vertex(w) || !sys.are_adjacent(x, w)) consistent = false;
    }

    if (opt.json) {
        json tight_names = json::array();
        for (int id : tight) tight_names.push_back(format_delta_name(sys.facet(id)));
        json nbr = json::array();
        for (const auto& w : nbrs)
            nbr.push_back({{"coords", coords_json(w)}, {"integral", is_integral(w)}});
        std::cout << json{{"n", x.n},
                          {"vertex", true},
                          {"quasi_simple", tight.size() == static_cast<std::size_t>(dim) + 1},
                          {"tight_count", tight.size()},
                          {"tight", tight_names},
                          {"ray_count", cone.rays.size()},
                          {"neighbors", nbr},
                          {"fractional_neighbors", fractional},
                          {"cut_adjacent", cut_adjacent},
                          {"consistent", consistent}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "n: " << x.n << "\n";
        std::cout << "vertex: yes";
        if (tight.size() == static_cast<std::size_t>(dim) + 1) std::cout << " (quasi-simple)";
        std::cout << "\n";
        std::cout << "tight facets (" << tight.size() << "):\n";
        for (int id : tight) std::cout << "  " << format_delta_name(sys.facet(id)) << "\n";
        std::cout << "tangent cone rays: " << cone.rays.size() << "\n";
        std::cout << "neighbors (" << nbrs.size() << "):\n";
        for (const auto& w : nbrs)
            std::cout << "  " << format_coords(w) << (is_integral(w) ? "  [cut]" : "") << "\n";
        std::cout << "fractional neighbors: " << fractional << "/" << nbrs.size() << "\n";
        std::cout << "cut-adjacent: " << (cut_adjacent ? "YES" : "NO") << "\n";
        std::cout << "consistency: " << (consistent ? "ok" : "FAILED") << "\n";
    }
    return consistent ? 0 : 1;
}

int cmd_neighbors(const Options& opt, const std::string& file, const std::string& fixture) {
    const MetricVector x = load_point(file, fixture);
    const FacetSystem sys(x.n);
    if (!sys.is_vertex(x)) {
        std::cout << "not a vertex\n";
        return 1;
    }
    const auto nbrs = neighbors(sys, x);
    if (opt.json) {
        json arr = json::array();
        for (const auto& w : nbrs) arr.push_back(coords_json(w));
        std::cout << json{{"n", x.n}, {"neighbor_count", nbrs.size()}, {"neighbors", arr}}.dump(2)
                  << "\n";
        return 0;
    }
    for (const auto& w : nbrs) std::cout << format_coords(w) << "\n";
    return 0;
}

int cmd_adjacent(const Options& opt, const std::string& file_u, const std::string& file_v) {
    const MetricVector u = read_vertex_file(file_u);
    const MetricVector v = read_vertex_file(file_v);
    if (u.n != v.n) throw ParseError("vertex files have different node counts");
    const FacetSystem sys(u.n);
    if (!sys.is_vertex(u) || !sys.is_vertex(v)) {
        std::cout << "not a vertex\n";
        return 1;
    }
    if (u == v) throw ParseError("the two vertices are identical");
    const bool adj = sys.are_adjacent(u, v);
    if (opt.json)
        std::cout << json{{"n", u.n}, {"adjacent", adj}}.dump(2) << "\n";
    else
        std::cout << "adjacent: " << (adj ? "yes" : "no") << "\n";
    return adj ? 0 : 1;
}

int cmd_enumerate(const Options& opt, int n, bool allow_long, std::string output) {
    const VertexSet vs = enumerate_vertices(n, allow_long);
    if (output.empty()) output = "m" + std::to_string(n) + "_vertices.txt";
    {
        std::ofstream out(output);
        if (!out) throw ParseError("cannot write '" + output + "'");
        write_vertex_set(out, vs);
    }
    const FacetSystem sys(n);
    const VertexGraph graph = build_graph(sys, vs);
    const int diam = diameter(graph);
    const DominationReport domination = check_domination(sys, vs);
    const auto connectivity = check_fractional_connectivity(vs, graph);
    const OrbitSummary orbits = orbit_summary(vs);

    const std::size_t cuts = vs.integral_count();
    if (opt.json) {
        std::cout << json{{"n", n},
                          {"vertices", vs.size()},
                          {"cuts", cuts},
                          {"fractional", vs.size() - cuts},
                          {"edges", graph.edge_count},
                          {"diameter", diam},
                          {"domination_holds", domination.holds()},
                          {"domination_violators", domination.violators},
                          {"fractional_components", connectivity.component_count},
                          {"fractional_connected", connectivity.connected()},
                          {"orbit_count", orbits.orbits.size()},
                          {"output_file", output}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << vs.size() << " vertices (" << cuts << " cuts, " << vs.size() - cuts
                  << " fractional), " << graph.edge_count << " edges, diameter " << diam << "\n";
        std::cout << "domination: " << (domination.holds() ? "holds" : "FAILS") << " ("
                  << domination.violators.size() << " violators)\n";
        std::cout << "fractional subgraph: "
                  << (connectivity.fractional_count == 0
                          ? "empty"
                          : (connectivity.connected() ? "connected" : "disconnected"))
                  << " (" << connectivity.component_count << " components)\n";
        std::cout << "orbits: " << orbits.orbits.size() << "\n";
        std::cout << "vertex set written to " << output << "\n";
    }
    return 0;
}

int cmd_diameter(const Options& opt, const std::string& file) {
    const VertexSet vs = read_vertex_set_file(file);
    const FacetSystem sys(vs.n);
    const int diam = diameter(build_graph(sys, vs));
    if (opt.json)
        std::cout << json{{"n", vs.n}, {"vertices", vs.size()}, {"diameter", diam}}.dump(2) << "\n";
    else
        std::cout << "diameter: " << diam << "\n";
    return 0;
}

int cmd_canon(const Options& opt, const std::string& file, const std::string& fixture) {
    const MetricVector x = load_point(file, fixture);
    const FacetSystem sys(x.n);
    if (!sys.is_feasible(x)) {
        std::cout << "not in m_" << x.n << "\n";
        return 1;
    }
    const MetricVector canon = canonical_form(x);
    std::optional<std::size_t> orbit_size;
    if (x.n <= 6) orbit_size = orbit(x).size();
    if (opt.json) {
        json out = {{"n", x.n}, {"canonical", coords_json(canon)}};
        if (orbit_size) out["orbit_size"] = *orbit_size;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "canonical: " << format_coords(canon) << "\n";
        if (orbit_size) std::cout << "orbit size: " << *orbit_size << "\n";
    }
    return 0;
}

int cmd_check_lp(const Options& opt, const std::string& file, const std::string& fixture) {
    // vertex set files start with the header token "n"; vertex files with a number
    bool is_set = false;
    if (fixture.empty() && !file.empty()) {
        std::ifstream probe(file);
        std::string first;
        if (probe >> first && first == "n") is_set = true;
    }

    if (is_set) {
        const VertexSet vs = read_vertex_set_file(file);
        const FacetSystem sys(vs.n);
        const DominationReport report = check_domination(sys, vs);
        if (opt.json) {
            std::cout << json{{"n", vs.n},
                              {"vertices", report.vertex_count},
                              {"fractional", report.fractional_count},
                              {"holds", report.holds()},
                              {"violators", report.violators}}
                             .dump(2)
                      << "\n";
        } else {
            std::cout << "fractional vertices: " << report.fractional_count << "\n";
            std::cout << "cut-adjacent: "
                      << report.fractional_count - report.violators.size() << "\n";
            std::cout << "violators: " << report.violators.size() << "\n";
            std::cout << "domination: " << (report.holds() ? "holds" : "FAILS") << "\n";
        }
        return report.holds() ? 0 : 1;
    }

    const MetricVector x = load_point(file, fixture);
    const FacetSystem sys(x.n);
    if (!sys.is_vertex(x)) {
        std::cout << "not a vertex\n";
        return 1;
    }
    const bool adj = adjacent_to_some_cut(sys, x);
    if (opt.json)
        std::cout << json{{"n", x.n}, {"cut_adjacent", adj}}.dump(2) << "\n";
    else
        std::cout << "cut-adjacent: " << (adj ? "yes" : "no") << "\n";
    return adj ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations on the metric polytope m_n"};
    app.require_subcommand(1);
    app.fallthrough();  // let global flags appear after the subcommand name

    Options opt;
    app.add_flag("--json", opt.json, "emit structured JSON on stdout");
    app.add_flag("--timing", opt.timing, "report elapsed time on stderr");
    app.add_option("--threads", opt.threads, "worker threads (0 = all cores)")
        ->check(CLI::NonNegativeNumber);

    int n = 0;
    std::string file, file_v, fixture, output;
    bool allow_long = false;

    auto* facets = app.add_subcommand("facets", "list the 4 C(n,3) facet inequalities of m_n");
    facets->add_option("n", n, "node count")->required();

    auto* cuts = app.add_subcommand("cuts", "list the 2^(n-1) canonical cut vectors");
    cuts->add_option("n", n, "node count")->required();

    auto add_point_args = [&](CLI::App* cmd) {
        cmd->add_option("file", file, "vertex file");
        cmd->add_option("--fixture", fixture, "built-in fixture name");
    };

    auto* verify = app.add_subcommand(
        "verify", "incidence, tangent cone, ray shooting and cut-adjacency for a vertex");
    add_point_args(verify);

    auto* neighbors_cmd = app.add_subcommand("neighbors", "list all vertices adjacent to a vertex");
    add_point_args(neighbors_cmd);

    auto* incidence_cmd = app.add_subcommand("incidence", "list the facets tight at a point");
    add_point_args(incidence_cmd);

    auto* adjacent = app.add_subcommand("adjacent", "test whether two vertices share an edge");
    adjacent->add_option("file_u", file, "first vertex file")->required();
    adjacent->add_option("file_v", file_v, "second vertex file")->required();

    auto* enumerate = app.add_subcommand("enumerate", "enumerate all vertices of m_n (n <= 6)");
    enumerate->add_option("n", n, "node count")->required();
    enumerate->add_flag("--allow-long", allow_long, "permit the multi-hour n=7 run");
    enumerate->add_option("-o,--output", output, "vertex set output file");

    auto* diameter_cmd =
        app.add_subcommand("diameter", "skeleton diameter of an enumerated vertex set");
    diameter_cmd->add_option("file", file, "vertex set file")->required();

    auto* canon = app.add_subcommand("canon", "canonical form under the symmetry group");
    add_point_args(canon);

    auto* check_lp = app.add_subcommand(
        "check-lp", "cut-domination check for a vertex or a whole vertex set");
    add_point_args(check_lp);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    set_thread_count(opt.threads);
    const auto start = std::chrono::steady_clock::now();
    int rc = 2;
    try {
        if (*facets) rc = cmd_facets(opt, n);
        else if (*cuts) rc = cmd_cuts(opt, n);
        else if (*verify) rc = cmd_verify(opt, file, fixture);
        else if (*neighbors_cmd) rc = cmd_neighbors(opt, file, fixture);
        else if (*incidence_cmd) rc = cmd_incidence(opt, file, fixture);
        else if (*adjacent) rc = cmd_adjacent(opt, file, file_v);
        else if (*enumerate) rc = cmd_enumerate(opt, n, allow_long, output);
        else if (*diameter_cmd) rc = cmd_diameter(opt, file);
        else if (*canon) rc = cmd_canon(opt, file, fixture);
        else if (*check_lp) rc = cmd_check_lp(opt, file, fixture);
    } catch (const InfeasibleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        rc = 1;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        rc = 2;
    } catch (const CapabilityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        rc = 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        rc = 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        rc = 1;
    }
    if (opt.timing) {
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cerr << "elapsed: " << elapsed << "s\n";
    }
    return rc;
}
