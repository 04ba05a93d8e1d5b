#ifndef METPOLY_POLYTOPE_HPP
#define METPOLY_POLYTOPE_HPP

#include <string>
#include <utility>
#include <vector>

#include "metpoly/bitset64.hpp"
#include "metpoly/errors.hpp"
#include "metpoly/linalg.hpp"
#include "metpoly/rational.hpp"

namespace metpoly {

/// Bijection between node pairs {(i,j) : 1 <= i < j <= n} and coordinate
/// indices 0..C(n,2)-1, in lexicographic order (1,2),(1,3),...,(n-1,n).
class PairIndexer {
public:
    explicit PairIndexer(int n);

    int n() const { return n_; }
    int dimension() const { return n_ * (n_ - 1) / 2; }

    /// Lexicographic position of (i,j). Throws std::invalid_argument unless
    /// 1 <= i < j <= n.
    int index(int i, int j) const;

    /// Inverse of index().
    std::pair<int, int> pair(int idx) const;

private:
    int n_;
};

/// A point (or direction) in R^C(n,2), coordinates in lexicographic pair order.
struct MetricVector {
    int n = 0;
    std::vector<Rational> coords;

    MetricVector() = default;
    MetricVector(int nodes, std::vector<Rational> c) : n(nodes), coords(std::move(c)) {}
    static MetricVector zero(int n);

    Rational& at(int i, int j);
    const Rational& at(int i, int j) const;

    bool operator==(const MetricVector& o) const { return n == o.n && coords == o.coords; }
    bool operator<(const MetricVector& o) const { return compare_lex(coords, o.coords) < 0; }
};

enum class FacetKind { Triangle, Perimeter };

/// One inequality normal . x <= rhs of m_n.
///   Triangle, apex k, pair (i,j):  x_ij - x_ik - x_jk <= 0
///   Perimeter on i < j < k:        x_ij + x_ik + x_jk <= 2
struct FacetInequality {
    FacetKind kind;
    int i, j, k;  // triangle: pair (i,j) with i < j, apex k; perimeter: i < j < k

    Rational rhs() const { return kind == FacetKind::Triangle ? Rational(0) : Rational(2); }

    /// The three nonzero normal entries as (pair index, coefficient).
    std::vector<std::pair<int, int>> sparse_normal(const PairIndexer& idx) const;

    /// Normal as a full coordinate vector.
    MetricVector normal(const PairIndexer& idx) const;
};

/// ASCII facet names: "T i j / k" (triangle, apex k) and "P i j k" (perimeter).
/// The apex is the node appearing in both negative terms of the triangle
/// inequality; in the usual overbar notation it is the barred index.
std::string format_delta_name(const FacetInequality& f);
FacetInequality parse_delta_name(const std::string& s);  // throws ParseError

/// All 4 C(n,3) facets of m_n in canonical order: triples lexicographically,
/// apexes ascending within each triple, perimeter last. Positions in this list
/// are the stable facet identifiers used everywhere else.
std::vector<FacetInequality> generate_facets(int n);  // throws std::invalid_argument if n < 3

/// Canonical node subset defining a cut: node 1 is never a member (a set
/// containing 1 is replaced by its complement, since delta(S) = delta(V\S)).
struct CutSet {
    int n = 0;
    std::vector<int> members;  // sorted, subset of {2..n}

    CutSet() = default;
    CutSet(int nodes, std::vector<int> raw_members);  // canonicalizes

    bool contains(int node) const;
    bool operator==(const CutSet& o) const { return n == o.n && members == o.members; }
};

/// Incidence vector of the cut: 1 at (i,j) iff exactly one endpoint is in S.
MetricVector cut_vector(const CutSet& s);

/// All 2^(n-1) canonical cuts, ordered by member bitmask.
std::vector<CutSet> all_cut_sets(int n);

/// Symmetric difference of two cuts, canonicalized.
CutSet cut_symmetric_difference(const CutSet& a, const CutSet& b);

/// Facet list of one m_n plus the operations that consult it. Built once per n;
/// immutable afterwards.
class FacetSystem {
public:
    explicit FacetSystem(int n);

    int n() const { return indexer_.n(); }
    int dimension() const { return indexer_.dimension(); }
    const PairIndexer& indexer() const { return indexer_; }
    const std::vector<FacetInequality>& facets() const { return facets_; }
    const FacetInequality& facet(int id) const { return facets_[static_cast<std::size_t>(id)]; }
    int facet_count() const { return static_cast<int>(facets_.size()); }

    /// rhs - normal . x; the point satisfies the facet iff the slack is >= 0.
    Rational slack(int facet_id, const MetricVector& x) const;

    /// normal . d for a direction d.
    Rational normal_dot(int facet_id, const MetricVector& d) const;
    Rational normal_dot(int facet_id, const std::vector<Rational>& coords) const;

    bool is_feasible(const MetricVector& x) const;

    /// Identifiers of all facets tight at x, ascending. Throws InfeasibleError
    /// (naming a violated facet) when x is outside m_n.
    std::vector<int> incidence(const MetricVector& x) const;

    /// Tight set as a bitset over facet identifiers; also reports feasibility.
    bool tight_bitset(const MetricVector& x, Bitset& out) const;

    /// True iff x is in m_n and the tight facet normals have full rank C(n,2).
    bool is_vertex(const MetricVector& x) const;

    /// True iff the minimal face containing both vertices is an edge, i.e. the
    /// normals tight at both have rank C(n,2) - 1. Throws std::invalid_argument
    /// unless both inputs are distinct vertices.
    bool are_adjacent(const MetricVector& u, const MetricVector& v) const;

    /// Adjacency rank test on precomputed tight sets; no vertexhood validation.
    bool adjacent_by_tight_sets(const Bitset& tu, const Bitset& tv) const;

    /// Dense normal row of one facet, appended to a RowBasis-compatible vector.
    std::vector<Rational> dense_normal(int facet_id) const;

private:
    PairIndexer indexer_;
    std::vector<FacetInequality> facets_;
    std::vector<std::vector<std::pair<int, int>>> sparse_;  // per facet: (coord, coef)
};

/// Slack of a single inequality against a point; dimensions must match.
Rational evaluate_slack(const FacetInequality& f, const MetricVector& x);

bool is_integral(const MetricVector& x);

}  // namespace metpoly

#endif
