#ifndef METPOLY_ENUMERATE_HPP
#define METPOLY_ENUMERATE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "metpoly/polytope.hpp"

namespace metpoly {

/// All vertices of one m_n, deduplicated, in lexicographic order.
struct VertexSet {
    int n = 0;
    std::vector<MetricVector> vertices;

    std::size_t size() const { return vertices.size(); }
    std::size_t integral_count() const;
};

/// Vertex enumeration by incremental double description: start from a simplex
/// bounding the 0 <= x <= 1 box and insert the 4 C(n,3) facet halfspaces, worst
/// cut-off count first. Supported for 3 <= n <= 6; n = 7 only with allow_long
/// (hours). Throws CapabilityError outside that range.
VertexSet enumerate_vertices(int n, bool allow_long = false);

/// Skeleton graph on a vertex set: edge (u,v) iff the vertices are adjacent.
struct VertexGraph {
    std::vector<std::vector<int>> adj;  // sorted neighbor indices per vertex
    std::size_t edge_count = 0;
};

VertexGraph build_graph(const FacetSystem& sys, const VertexSet& vs);

/// Max BFS eccentricity. Throws std::runtime_error naming two unreachable
/// vertex indices when the graph is disconnected.
int diameter(const VertexGraph& g);

/// Cut-domination check: does every fractional vertex have a cut neighbor?
struct DominationReport {
    int n = 0;
    std::size_t vertex_count = 0;
    std::size_t fractional_count = 0;
    std::vector<int> violators;  // indices of fractional vertices with no cut neighbor

    bool holds() const { return violators.empty(); }
};

DominationReport check_domination(const FacetSystem& sys, const VertexSet& vs);

/// Connectivity of the subgraph induced by the fractional vertices (all cut
/// vertices deleted).
struct FractionalConnectivityReport {
    int n = 0;
    std::size_t fractional_count = 0;
    std::size_t component_count = 0;  // 0 when the fractional set is empty

    bool connected() const { return component_count <= 1; }
};

FractionalConnectivityReport check_fractional_connectivity(const VertexSet& vs,
                                                           const VertexGraph& g);

/// Orbit decomposition of a vertex set under the permutation-switching group.
struct OrbitSummary {
    struct Orbit {
        MetricVector representative;  // canonical form
        std::size_t size = 0;
    };
    std::vector<Orbit> orbits;  // sorted by representative
};

/// Canonicalizes every vertex; orbit sizes are the multiplicities of each
/// canonical form (the enumerated set is group-closed). n <= 6.
OrbitSummary orbit_summary(const VertexSet& vs);

/// Brute-force vertex oracle: solve every C(n,2)-subset of tight facet systems
/// and keep feasible basic solutions. Exponential; intended for n <= 4 checks.
VertexSet enumerate_vertices_bruteforce(int n);

}  // namespace metpoly

#endif
