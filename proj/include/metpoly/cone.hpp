#ifndef METPOLY_CONE_HPP
#define METPOLY_CONE_HPP

#include <vector>

#include "metpoly/polytope.hpp"

namespace metpoly {

/// Pointed cone of feasible directions at a vertex. Rays carry integer
/// coordinates with gcd 1 and are pairwise non-proportional; every ray
/// satisfies normal . r <= 0 for each tight facet and is tight on a subset of
/// rank C(n,2) - 1.
struct TangentCone {
    MetricVector vertex;
    std::vector<int> tight;          // facet identifiers
    std::vector<MetricVector> rays;  // sorted lexicographically
};

/// Extreme rays of {y : normal_f . y <= 0 for every facet f tight at v},
/// computed by double description seeded from a rank-revealing basis of the
/// tight normals. Throws std::invalid_argument when v is not a vertex.
TangentCone tangent_cone(const FacetSystem& sys, const MetricVector& v);

/// March from v along direction r until the first facet not containing v is
/// pierced; returns the neighboring vertex v + t* r. Throws std::runtime_error
/// if no facet blocks the ray (an internal inconsistency for a polytope).
MetricVector ray_shoot(const FacetSystem& sys, const MetricVector& v, const MetricVector& r);

/// All vertices adjacent to v: tangent cone, one ray shot per extreme ray,
/// deduplicated and sorted lexicographically.
std::vector<MetricVector> neighbors(const FacetSystem& sys, const MetricVector& v);

/// True iff some cut vector is adjacent to v. Tests all 2^(n-1) cuts with the
/// algebraic rank test directly, so it also works on vertices whose tangent
/// cone would be expensive. Throws std::invalid_argument when v is not a vertex.
bool adjacent_to_some_cut(const FacetSystem& sys, const MetricVector& v);

}  // namespace metpoly

#endif
