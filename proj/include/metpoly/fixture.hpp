#ifndef METPOLY_FIXTURE_HPP
#define METPOLY_FIXTURE_HPP

#include <string>
#include <vector>

#include "metpoly/polytope.hpp"

namespace metpoly {

/// A named vertex shipped with the library. The Laurent-Poljak counterexample
/// is a quasi-simple fractional vertex of m_9 (37 tight facets) with no cut
/// among its 37 neighbors. Its expected incidence list is embedded; the
/// expected neighbor coordinates live in a golden data file.
struct Fixture {
    std::string name;
    MetricVector vertex;
    std::vector<std::string> expected_incidence;  // facet names, canonical order
};

/// The m_9 counterexample vertex, coordinates 1/9 (2, 2, 3, ...).
const Fixture& counterexample_fixture();

/// Fixture lookup by CLI name; nullptr when unknown.
const Fixture* find_fixture(const std::string& name);

std::vector<std::string> fixture_names();

}  // namespace metpoly

#endif
