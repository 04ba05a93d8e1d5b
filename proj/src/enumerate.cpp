#include "metpoly/enumerate.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>

#include "metpoly/bitset64.hpp"
#include "metpoly/parallel.hpp"
#include "metpoly/symmetry.hpp"

namespace metpoly {

std::size_t VertexSet::integral_count() const {
    std::size_t c = 0;
    for (const auto& v : vertices)
        if (is_integral(v)) ++c;
    return c;
}

namespace {

struct SparseRow {
    std::vector<std::pair<int, int>> nz;  // (coordinate, +-1 coefficient)
    Rational rhs;

    Rational slack(const std::vector<Rational>& x) const {
        Rational acc = rhs;
        for (auto [c, coef] : nz) {
            if (coef > 0)
                acc -= x[static_cast<std::size_t>(c)];
            else
                acc += x[static_cast<std::size_t>(c)];
        }
        return acc;
    }
};

struct DDVertex {
    std::vector<Rational> x;
    Bitset tight;  // over all row ids; only processed rows ever set
};

std::vector<Rational> dense_row(const SparseRow& row, int d) {
    std::vector<Rational> out(static_cast<std::size_t>(d), Rational(0));
    for (auto [c, coef] : row.nz) out[static_cast<std::size_t>(c)] = coef;
    return out;
}

// vertices u, v of a full-dimensional polytope are adjacent iff the rows tight
// at both reach rank d - 1 (they cannot exceed it)
bool dd_adjacent(const std::vector<SparseRow>& rows, const DDVertex& u, const DDVertex& v, int d) {
    if (static_cast<int>(Bitset::and_count(u.tight, v.tight)) < d - 1) return false;
    RowBasis basis(d);
    for (int id : Bitset::intersect(u.tight, v.tight).indices()) {
        if (basis.insert(dense_row(rows[static_cast<std::size_t>(id)], d)) && basis.rank() == d - 1)
            return true;
    }
    return false;
}

}  // namespace

VertexSet enumerate_vertices(int n, bool allow_long) {
    if (n < 3 || n > 7 || (n == 7 && !allow_long))
        throw CapabilityError(n == 7
                                  ? "n=7 enumeration takes hours; pass allow_long to opt in"
                                  : "vertex enumeration supported for 3 <= n <= 6 (7 with allow_long)");

    const FacetSystem sys(n);
    const int d = sys.dimension();
    const int simplex_rows = d + 1;
    const std::size_t total_rows = static_cast<std::size_t>(simplex_rows) + sys.facets().size();

    std::vector<SparseRow> rows(total_rows);
    for (int c = 0; c < d; ++c) rows[static_cast<std::size_t>(c)] = {{{c, -1}}, Rational(0)};
    SparseRow sum_row;
    for (int c = 0; c < d; ++c) sum_row.nz.emplace_back(c, 1);
    sum_row.rhs = d;
    rows[static_cast<std::size_t>(d)] = std::move(sum_row);
    for (std::size_t f = 0; f < sys.facets().size(); ++f) {
        SparseRow r;
        r.nz = sys.facets()[f].sparse_normal(sys.indexer());
        r.rhs = sys.facets()[f].rhs();
        rows[static_cast<std::size_t>(simplex_rows) + f] = std::move(r);
    }

    // bounding simplex of the unit box: x >= 0 componentwise, sum x <= d
    std::vector<DDVertex> verts;
    {
        DDVertex origin;
        origin.x.assign(static_cast<std::size_t>(d), Rational(0));
        origin.tight = Bitset(total_rows);
        for (int c = 0; c < d; ++c) origin.tight.set(static_cast<std::size_t>(c));
        verts.push_back(std::move(origin));
        for (int i = 0; i < d; ++i) {
            DDVertex apex;
            apex.x.assign(static_cast<std::size_t>(d), Rational(0));
            apex.x[static_cast<std::size_t>(i)] = d;
            apex.tight = Bitset(total_rows);
            for (int c = 0; c < d; ++c)
                if (c != i) apex.tight.set(static_cast<std::size_t>(c));
            apex.tight.set(static_cast<std::size_t>(d));
            verts.push_back(std::move(apex));
        }
    }

    std::vector<bool> inserted(sys.facets().size(), false);
    for (std::size_t step = 0; step < sys.facets().size(); ++step) {
        // max-cutoff heuristic: insert the facet violated by the most vertices
        int pick = -1;
        std::size_t best_neg = 0;
        for (std::size_t f = 0; f < sys.facets().size(); ++f) {
            if (inserted[f]) continue;
            std::size_t negs = 0;
            for (const auto& v : verts)
                if (rows[static_cast<std::size_t>(simplex_rows) + f].slack(v.x) < 0) ++negs;
            if (pick < 0 || negs > best_neg) {
                pick = static_cast<int>(f);
                best_neg = negs;
            }
        }
        inserted[static_cast<std::size_t>(pick)] = true;
        const std::size_t row_id = static_cast<std::size_t>(simplex_rows + pick);
        const SparseRow& row = rows[row_id];

        std::vector<Rational> sigma(verts.size());
        std::vector<std::size_t> pos, neg;
        for (std::size_t k = 0; k < verts.size(); ++k) {
            sigma[k] = row.slack(verts[k].x);
            if (sigma[k] > 0)
                pos.push_back(k);
            else if (sigma[k] < 0)
                neg.push_back(k);
        }
        if (neg.empty()) {
            for (std::size_t k = 0; k < verts.size(); ++k)
                if (sigma[k] == 0) verts[k].tight.set(row_id);
            continue;
        }

        // adjacent (kept, dropped) pairs spawn the new vertices on the cut edges
        std::vector<std::pair<std::size_t, std::size_t>> cand;
        cand.reserve(pos.size() * neg.size() / 4 + 1);
        for (std::size_t p : pos)
            for (std::size_t q : neg)
                if (static_cast<int>(Bitset::and_count(verts[p].tight, verts[q].tight)) >= d - 1)
                    cand.emplace_back(p, q);
        std::vector<char> adjacent(cand.size(), 0);
        parallel_for(cand.size(), [&](std::size_t k) {
            adjacent[k] = dd_adjacent(rows, verts[cand[k].first], verts[cand[k].second], d) ? 1 : 0;
        });

        std::vector<DDVertex> born;
        born.reserve(cand.size());
        for (std::size_t k = 0; k < cand.size(); ++k) {
            if (!adjacent[k]) continue;
            const auto [p, q] = cand[k];
            DDVertex fresh;
            fresh.x.resize(static_cast<std::size_t>(d));
            const Rational span = sigma[p] - sigma[q];
            for (int c = 0; c < d; ++c)
                fresh.x[static_cast<std::size_t>(c)] =
                    (sigma[p] * verts[q].x[static_cast<std::size_t>(c)] -
                     sigma[q] * verts[p].x[static_cast<std::size_t>(c)]) /
                    span;
            fresh.tight = Bitset::intersect(verts[p].tight, verts[q].tight);
            fresh.tight.set(row_id);
            born.push_back(std::move(fresh));
        }

        std::vector<DDVertex> next;
        next.reserve(verts.size() - neg.size() + born.size());
        for (std::size_t k = 0; k < verts.size(); ++k) {
            if (sigma[k] < 0) continue;
            DDVertex kept = std::move(verts[k]);
            if (sigma[k] == 0) kept.tight.set(row_id);
            next.push_back(std::move(kept));
        }
        for (auto& v : born) next.push_back(std::move(v));
        verts = std::move(next);
    }

    VertexSet out;
    out.n = n;
    out.vertices.reserve(verts.size());
    for (auto& v : verts) out.vertices.emplace_back(n, std::move(v.x));
    std::sort(out.vertices.begin(), out.vertices.end());
    for (std::size_t k = 1; k < out.vertices.size(); ++k)
        if (out.vertices[k] == out.vertices[k - 1])
            throw std::runtime_error("double description produced a duplicate vertex");
    return out;
}

VertexGraph build_graph(const FacetSystem& sys, const VertexSet& vs) {
    const std::size_t count = vs.size();
    std::vector<Bitset> tight(count);
    parallel_for(count, [&](std::size_t k) {
        if (!sys.tight_bitset(vs.vertices[k], tight[k]))
            throw std::runtime_error("vertex set contains an infeasible point");
    });

    std::vector<std::vector<int>> upper(count);
    parallel_for(count, [&](std::size_t i) {
        for (std::size_t j = i + 1; j < count; ++j)
            if (sys.adjacent_by_tight_sets(tight[i], tight[j]))
                upper[i].push_back(static_cast<int>(j));
    });

    VertexGraph g;
    g.adj.assign(count, {});
    for (std::size_t i = 0; i < count; ++i) {
        g.edge_count += upper[i].size();
        for (int j : upper[i]) {
            g.adj[i].push_back(j);
            g.adj[static_cast<std::size_t>(j)].push_back(static_cast<int>(i));
        }
    }
    for (auto& row : g.adj) std::sort(row.begin(), row.end());
    return g;
}

namespace {

std::vector<int> bfs_depths(const VertexGraph& g, std::size_t src) {
    std::vector<int> depth(g.adj.size(), -1);
    std::queue<std::size_t> queue;
    depth[src] = 0;
    queue.push(src);
    while (!queue.empty()) {
        const std::size_t u = queue.front();
        queue.pop();
        for (int w : g.adj[u]) {
            if (depth[static_cast<std::size_t>(w)] < 0) {
                depth[static_cast<std::size_t>(w)] = depth[u] + 1;
                queue.push(static_cast<std::size_t>(w));
            }
        }
    }
    return depth;
}

}  // namespace

int diameter(const VertexGraph& g) {
    if (g.adj.empty()) return 0;
    int best = 0;
    for (std::size_t s = 0; s < g.adj.size(); ++s) {
        const auto depth = bfs_depths(g, s);
        for (std::size_t k = 0; k < depth.size(); ++k) {
            if (depth[k] < 0)
                throw std::runtime_error("vertex graph is disconnected: no path between vertices " +
                                         std::to_string(s) + " and " + std::to_string(k));
            best = std::max(best, depth[k]);
        }
    }
    return best;
}

DominationReport check_domination(const FacetSystem& sys, const VertexSet& vs) {
    DominationReport report;
    report.n = vs.n;
    report.vertex_count = vs.size();

    const auto cuts = all_cut_sets(vs.n);
    std::vector<MetricVector> cut_vecs(cuts.size());
    std::vector<Bitset> cut_tight(cuts.size());
    parallel_for(cuts.size(), [&](std::size_t k) {
        cut_vecs[k] = cut_vector(cuts[k]);
        sys.tight_bitset(cut_vecs[k], cut_tight[k]);
    });

    std::vector<char> fractional(vs.size(), 0), dominated(vs.size(), 0);
    parallel_for(vs.size(), [&](std::size_t k) {
        const MetricVector& v = vs.vertices[k];
        if (is_integral(v)) return;
        fractional[k] = 1;
        Bitset tv;
        sys.tight_bitset(v, tv);
        for (std::size_t c = 0; c < cuts.size(); ++c) {
            if (sys.adjacent_by_tight_sets(tv, cut_tight[c])) {
                dominated[k] = 1;
                return;
            }
        }
    });
    for (std::size_t k = 0; k < vs.size(); ++k) {
        if (!fractional[k]) continue;
        ++report.fractional_count;
        if (!dominated[k]) report.violators.push_back(static_cast<int>(k));
    }
    return report;
}

FractionalConnectivityReport check_fractional_connectivity(const VertexSet& vs,
                                                           const VertexGraph& g) {
    FractionalConnectivityReport report;
    report.n = vs.n;
    std::vector<char> fractional(vs.size(), 0);
    for (std::size_t k = 0; k < vs.size(); ++k) fractional[k] = is_integral(vs.vertices[k]) ? 0 : 1;
    report.fractional_count = static_cast<std::size_t>(
        std::count(fractional.begin(), fractional.end(), static_cast<char>(1)));

    std::vector<char> seen(vs.size(), 0);
    for (std::size_t s = 0; s < vs.size(); ++s) {
        if (!fractional[s] || seen[s]) continue;
        ++report.component_count;
        std::queue<std::size_t> queue;
        seen[s] = 1;
        queue.push(s);
        while (!queue.empty()) {
            const std::size_t u = queue.front();
            queue.pop();
            for (int w : g.adj[u]) {
                const auto wi = static_cast<std::size_t>(w);
                if (fractional[wi] && !seen[wi]) {
                    seen[wi] = 1;
                    queue.push(wi);
                }
            }
        }
    }
    return report;
}

OrbitSummary orbit_summary(const VertexSet& vs) {
    if (vs.n > 6) throw CapabilityError("orbit summary supported for n <= 6");
    std::vector<MetricVector> canon(vs.size());
    parallel_for(vs.size(), [&](std::size_t k) { canon[k] = canonical_form(vs.vertices[k]); });

    std::map<MetricVector, std::size_t> counts;
    for (const auto& c : canon) ++counts[c];
    OrbitSummary s;
    s.orbits.reserve(counts.size());
    for (auto& [rep, size] : counts) s.orbits.push_back({rep, size});
    return s;
}

VertexSet enumerate_vertices_bruteforce(int n) {
    if (n < 3 || n > 4) throw CapabilityError("brute-force enumeration intended for n <= 4");
    const FacetSystem sys(n);
    const int d = sys.dimension();
    const int m = sys.facet_count();

    std::vector<MetricVector> found;
    std::vector<int> comb(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) comb[static_cast<std::size_t>(k)] = k;
    for (;;) {
        RationalMatrix a(d, d);
        std::vector<Rational> b(static_cast<std::size_t>(d));
        for (int r = 0; r < d; ++r) {
            const auto row = sys.dense_normal(comb[static_cast<std::size_t>(r)]);
            for (int c = 0; c < d; ++c) a.at(r, c) = row[static_cast<std::size_t>(c)];
            b[static_cast<std::size_t>(r)] = sys.facet(comb[static_cast<std::size_t>(r)]).rhs();
        }
        if (rank(a) == d) {
            const auto x = solve(a, b);
            MetricVector candidate(n, *x);
            if (sys.is_feasible(candidate)) found.push_back(std::move(candidate));
        }
        // next combination
        int i = d - 1;
        while (i >= 0 && comb[static_cast<std::size_t>(i)] == m - d + i) --i;
        if (i < 0) break;
        ++comb[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < d; ++j)
            comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
    }
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    VertexSet out;
    out.n = n;
    out.vertices = std::move(found);
    return out;
}

}  // namespace metpoly
