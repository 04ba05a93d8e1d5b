#include "metpoly/fixture.hpp"

namespace metpoly {

namespace {

Fixture make_counterexample() {
    // 1/9 (2, 2, 3, ...) in lexicographic pair order; quasi-simple vertex of m_9
    static constexpr int ninths[36] = {2, 2, 3, 3, 4, 4, 5, 5, 4, 3, 5, 6, 6, 3, 3, 5, 5, 2,
                                       4, 3, 5, 6, 3, 3, 6, 6, 5, 3, 2, 6, 6, 3, 3, 5, 3, 4};
    std::vector<Rational> coords;
    coords.reserve(36);
    for (int k : ninths) coords.push_back(make_rational(k, 9));

    Fixture f;
    f.name = "laurent-poljak-counterexample";
    f.vertex = MetricVector(9, std::move(coords));
    f.expected_incidence = {
        "T 2 3 / 1", "T 2 5 / 1", "T 2 6 / 1", "T 2 7 / 1", "T 1 8 / 2", "T 1 9 / 2",
        "T 3 4 / 1", "T 3 5 / 1", "T 1 6 / 3", "T 1 8 / 3", "T 4 5 / 1", "T 1 8 / 5",
        "T 2 6 / 3", "T 2 6 / 4", "T 2 7 / 4", "T 4 8 / 2", "T 4 9 / 2", "T 2 5 / 8",
        "P 2 6 7",   "T 2 6 / 8", "T 2 6 / 9", "T 2 7 / 9", "T 3 4 / 6", "T 3 5 / 8",
        "T 6 7 / 3", "T 3 9 / 6", "T 4 5 / 7", "P 4 5 9",   "T 6 7 / 4", "T 4 8 / 6",
        "T 4 9 / 6", "T 4 9 / 7", "T 5 6 / 8", "T 7 8 / 5", "T 5 9 / 7", "T 5 9 / 8",
        "T 6 7 / 9",
    };
    return f;
}

}  // namespace

const Fixture& counterexample_fixture() {
    static const Fixture fixture = make_counterexample();
    return fixture;
}

const Fixture* find_fixture(const std::string& name) {
    const Fixture& ce = counterexample_fixture();
    if (name == ce.name) return &ce;
    return nullptr;
}

std::vector<std::string> fixture_names() { return {counterexample_fixture().name}; }

}  // namespace metpoly
