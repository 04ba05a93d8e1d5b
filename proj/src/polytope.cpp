#include "metpoly/polytope.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace metpoly {

PairIndexer::PairIndexer(int n) : n_(n) {
    if (n < 3) throw std::invalid_argument("node count must be at least 3");
}

int PairIndexer::index(int i, int j) const {
    if (i < 1 || j <= i || j > n_)
        throw std::invalid_argument("pair (" + std::to_string(i) + "," + std::to_string(j) +
                                    ") out of range for n=" + std::to_string(n_));
    return (i - 1) * n_ - i * (i + 1) / 2 + j - 1;
}

std::pair<int, int> PairIndexer::pair(int idx) const {
    if (idx < 0 || idx >= dimension()) throw std::invalid_argument("pair index out of range");
    int i = 1;
    int row = n_ - 1;  // pairs in row i
    while (idx >= row) {
        idx -= row;
        --row;
        ++i;
    }
    return {i, i + 1 + idx};
}

MetricVector MetricVector::zero(int n) {
    PairIndexer idx(n);
    return MetricVector(n, std::vector<Rational>(static_cast<std::size_t>(idx.dimension()), Rational(0)));
}

Rational& MetricVector::at(int i, int j) {
    return coords[static_cast<std::size_t>(PairIndexer(n).index(i, j))];
}

const Rational& MetricVector::at(int i, int j) const {
    return coords[static_cast<std::size_t>(PairIndexer(n).index(i, j))];
}

std::vector<std::pair<int, int>> FacetInequality::sparse_normal(const PairIndexer& idx) const {
    if (kind == FacetKind::Triangle) {
        return {{idx.index(i, j), 1},
                {idx.index(std::min(i, k), std::max(i, k)), -1},
                {idx.index(std::min(j, k), std::max(j, k)), -1}};
    }
    return {{idx.index(i, j), 1}, {idx.index(i, k), 1}, {idx.index(j, k), 1}};
}

MetricVector FacetInequality::normal(const PairIndexer& idx) const {
    MetricVector v = MetricVector::zero(idx.n());
    for (auto [c, coef] : sparse_normal(idx)) v.coords[static_cast<std::size_t>(c)] = coef;
    return v;
}

std::string format_delta_name(const FacetInequality& f) {
    std::ostringstream os;
    if (f.kind == FacetKind::Triangle)
        os << "T " << f.i << " " << f.j << " / " << f.k;
    else
        os << "P " << f.i << " " << f.j << " " << f.k;
    return os.str();
}

FacetInequality parse_delta_name(const std::string& s) {
    std::istringstream is(s);
    std::string tag;
    if (!(is >> tag)) throw ParseError("empty facet name");
    auto read_node = [&](int& out) {
        if (!(is >> out) || out < 1) throw ParseError("malformed facet name '" + s + "'");
    };
    FacetInequality f{};
    if (tag == "T") {
        std::string slash;
        read_node(f.i);
        read_node(f.j);
        if (!(is >> slash) || slash != "/") throw ParseError("malformed facet name '" + s + "'");
        read_node(f.k);
        f.kind = FacetKind::Triangle;
        if (f.i >= f.j || f.k == f.i || f.k == f.j)
            throw ParseError("invalid triangle nodes in '" + s + "'");
    } else if (tag == "P") {
        read_node(f.i);
        read_node(f.j);
        read_node(f.k);
        f.kind = FacetKind::Perimeter;
        if (!(f.i < f.j && f.j < f.k)) throw ParseError("perimeter nodes must ascend in '" + s + "'");
    } else {
        throw ParseError("unknown facet kind '" + tag + "'");
    }
    std::string rest;
    if (is >> rest) throw ParseError("trailing tokens in facet name '" + s + "'");
    return f;
}

std::vector<FacetInequality> generate_facets(int n) {
    if (n < 3) throw std::invalid_argument("facets require n >= 3");
    std::vector<FacetInequality> out;
    out.reserve(static_cast<std::size_t>(4) * n * (n - 1) * (n - 2) / 6);
    for (int a = 1; a <= n; ++a) {
        for (int b = a + 1; b <= n; ++b) {
            for (int c = b + 1; c <= n; ++c) {
                out.push_back({FacetKind::Triangle, b, c, a});  // apex a
                out.push_back({FacetKind::Triangle, a, c, b});  // apex b
                out.push_back({FacetKind::Triangle, a, b, c});  // apex c
                out.push_back({FacetKind::Perimeter, a, b, c});
            }
        }
    }
    return out;
}

CutSet::CutSet(int nodes, std::vector<int> raw_members) : n(nodes) {
    if (nodes < 3) throw std::invalid_argument("cut set requires n >= 3");
    std::vector<bool> in(static_cast<std::size_t>(nodes) + 1, false);
    for (int v : raw_members) {
        if (v < 1 || v > nodes) throw std::invalid_argument("cut member out of range");
        in[static_cast<std::size_t>(v)] = true;
    }
    const bool complement = in[1];  // delta(S) = delta(V \ S); node 1 stays outside
    for (int v = 2; v <= nodes; ++v)
        if (in[static_cast<std::size_t>(v)] != complement) members.push_back(v);
}

bool CutSet::contains(int node) const {
    return std::binary_search(members.begin(), members.end(), node);
}

MetricVector cut_vector(const CutSet& s) {
    MetricVector x = MetricVector::zero(s.n);
    PairIndexer idx(s.n);
    for (int i = 1; i <= s.n; ++i)
        for (int j = i + 1; j <= s.n; ++j)
            if (s.contains(i) != s.contains(j))
                x.coords[static_cast<std::size_t>(idx.index(i, j))] = 1;
    return x;
}

std::vector<CutSet> all_cut_sets(int n) {
    std::vector<CutSet> out;
    const std::uint32_t total = 1u << (n - 1);
    out.reserve(total);
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        std::vector<int> members;
        for (int v = 2; v <= n; ++v)
            if (mask & (1u << (v - 2))) members.push_back(v);
        out.emplace_back(n, std::move(members));
    }
    return out;
}

CutSet cut_symmetric_difference(const CutSet& a, const CutSet& b) {
    if (a.n != b.n) throw std::invalid_argument("cut sets on different node counts");
    std::vector<int> sym;
    std::set_symmetric_difference(a.members.begin(), a.members.end(), b.members.begin(),
                                  b.members.end(), std::back_inserter(sym));
    return CutSet(a.n, std::move(sym));
}

FacetSystem::FacetSystem(int n) : indexer_(n), facets_(generate_facets(n)) {
    sparse_.reserve(facets_.size());
    for (const auto& f : facets_) sparse_.push_back(f.sparse_normal(indexer_));
}

Rational FacetSystem::slack(int facet_id, const MetricVector& x) const {
    Rational acc = facets_[static_cast<std::size_t>(facet_id)].rhs();
    for (auto [c, coef] : sparse_[static_cast<std::size_t>(facet_id)]) {
        if (coef > 0)
            acc -= x.coords[static_cast<std::size_t>(c)];
        else
            acc += x.coords[static_cast<std::size_t>(c)];
    }
    return acc;
}

Rational FacetSystem::normal_dot(int facet_id, const MetricVector& d) const {
    return normal_dot(facet_id, d.coords);
}

Rational FacetSystem::normal_dot(int facet_id, const std::vector<Rational>& coords) const {
    Rational acc(0);
    for (auto [c, coef] : sparse_[static_cast<std::size_t>(facet_id)]) {
        if (coef > 0)
            acc += coords[static_cast<std::size_t>(c)];
        else
            acc -= coords[static_cast<std::size_t>(c)];
    }
    return acc;
}

bool FacetSystem::is_feasible(const MetricVector& x) const {
    if (x.n != n()) throw std::invalid_argument("node count mismatch");
    for (int id = 0; id < facet_count(); ++id)
        if (slack(id, x) < 0) return false;
    return true;
}

std::vector<int> FacetSystem::incidence(const MetricVector& x) const {
    if (x.n != n()) throw std::invalid_argument("node count mismatch");
    std::vector<int> tight;
    for (int id = 0; id < facet_count(); ++id) {
        const Rational s = slack(id, x);
        if (s < 0) throw InfeasibleError(id, format_delta_name(facets_[static_cast<std::size_t>(id)]));
        if (s == 0) tight.push_back(id);
    }
    return tight;
}

bool FacetSystem::tight_bitset(const MetricVector& x, Bitset& out) const {
    out = Bitset(static_cast<std::size_t>(facet_count()));
    for (int id = 0; id < facet_count(); ++id) {
        const Rational s = slack(id, x);
        if (s < 0) return false;
        if (s == 0) out.set(static_cast<std::size_t>(id));
    }
    return true;
}

std::vector<Rational> FacetSystem::dense_normal(int facet_id) const {
    std::vector<Rational> row(static_cast<std::size_t>(dimension()), Rational(0));
    for (auto [c, coef] : sparse_[static_cast<std::size_t>(facet_id)])
        row[static_cast<std::size_t>(c)] = coef;
    return row;
}

bool FacetSystem::is_vertex(const MetricVector& x) const {
    if (x.n != n()) throw std::invalid_argument("node count mismatch");
    Bitset tight;
    if (!tight_bitset(x, tight)) return false;
    const int d = dimension();
    RowBasis basis(d);
    for (int id : tight.indices()) {
        if (basis.insert(dense_normal(id)) && basis.rank() == d) return true;
    }
    return false;
}

bool FacetSystem::adjacent_by_tight_sets(const Bitset& tu, const Bitset& tv) const {
    const int d = dimension();
    // normals tight at two distinct points are orthogonal to their difference,
    // so the rank can reach at most d - 1
    if (static_cast<int>(Bitset::and_count(tu, tv)) < d - 1) return false;
    RowBasis basis(d);
    for (int id : Bitset::intersect(tu, tv).indices()) {
        if (basis.insert(dense_normal(id)) && basis.rank() == d - 1) return true;
    }
    return false;
}

bool FacetSystem::are_adjacent(const MetricVector& u, const MetricVector& v) const {
    if (u == v) throw std::invalid_argument("adjacency requires two distinct vertices");
    if (!is_vertex(u) || !is_vertex(v))
        throw std::invalid_argument("adjacency requires vertex inputs");
    Bitset tu, tv;
    tight_bitset(u, tu);
    tight_bitset(v, tv);
    return adjacent_by_tight_sets(tu, tv);
}

Rational evaluate_slack(const FacetInequality& f, const MetricVector& x) {
    PairIndexer idx(x.n);
    const int maxnode = std::max(f.k, std::max(f.i, f.j));
    if (maxnode > x.n) throw std::invalid_argument("facet references node beyond vector's n");
    Rational acc = f.rhs();
    for (auto [c, coef] : f.sparse_normal(idx))
        acc -= Rational(coef) * x.coords[static_cast<std::size_t>(c)];
    return acc;
}

bool is_integral(const MetricVector& x) {
    for (const auto& c : x.coords)
        if (!(c == 0 || c == 1)) return false;
    return true;
}

}  // namespace metpoly
