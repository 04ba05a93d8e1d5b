#include "metpoly/cone.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "metpoly/bitset64.hpp"
#include "metpoly/linalg.hpp"

namespace metpoly {

namespace {

struct Ray {
    std::vector<Rational> dir;
    Bitset tight;  // over positions in the tight-facet list, processed rows only
};

// Solve B X = -I for the seed rays of the simplicial cone {y : B y <= 0}.
std::vector<std::vector<Rational>> negated_inverse_columns(const RationalMatrix& b) {
    const int d = b.rows;
    RationalMatrix aug(d, 2 * d);
    for (int r = 0; r < d; ++r) {
        for (int c = 0; c < d; ++c) aug.at(r, c) = b.at(r, c);
        aug.at(r, d + r) = -1;
    }
    for (int col = 0; col < d; ++col) {
        int sel = -1;
        for (int r = col; r < d; ++r)
            if (aug.at(r, col) != 0) {
                sel = r;
                break;
            }
        if (sel < 0) throw std::runtime_error("singular basis in tangent cone seed");
        if (sel != col)
            for (int c = 0; c < 2 * d; ++c) swap(aug.at(col, c), aug.at(sel, c));
        const Rational pivot = aug.at(col, col);
        for (int c = col; c < 2 * d; ++c) aug.at(col, c) /= pivot;
        for (int r = 0; r < d; ++r) {
            if (r == col || aug.at(r, col) == 0) continue;
            const Rational factor = aug.at(r, col);
            for (int c = col; c < 2 * d; ++c) aug.at(r, c) -= factor * aug.at(col, c);
        }
    }
    std::vector<std::vector<Rational>> cols(static_cast<std::size_t>(d));
    for (int c = 0; c < d; ++c) {
        cols[static_cast<std::size_t>(c)].resize(static_cast<std::size_t>(d));
        for (int r = 0; r < d; ++r) cols[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)] = aug.at(r, d + c);
    }
    return cols;
}

}  // namespace

TangentCone tangent_cone(const FacetSystem& sys, const MetricVector& v) {
    if (!sys.is_vertex(v)) throw std::invalid_argument("tangent cone requires a vertex of m_n");
    const int d = sys.dimension();
    const std::vector<int> tight = sys.incidence(v);
    const std::size_t m = tight.size();

    // rank-revealing basis among the tight normals
    RowBasis probe(d);
    std::vector<std::size_t> basis_rows;  // positions within `tight`
    std::vector<bool> in_basis(m, false);
    for (std::size_t t = 0; t < m && probe.rank() < d; ++t) {
        if (probe.insert(sys.dense_normal(tight[t]))) {
            basis_rows.push_back(t);
            in_basis[t] = true;
        }
    }

    RationalMatrix b(d, d);
    for (int r = 0; r < d; ++r) {
        const auto row = sys.dense_normal(tight[basis_rows[static_cast<std::size_t>(r)]]);
        for (int c = 0; c < d; ++c) b.at(r, c) = row[static_cast<std::size_t>(c)];
    }

    std::vector<Ray> rays;
    rays.reserve(static_cast<std::size_t>(d));
    const auto seed = negated_inverse_columns(b);
    for (int i = 0; i < d; ++i) {
        Ray r;
        r.dir = primitive_integer_vector(seed[static_cast<std::size_t>(i)]);
        r.tight = Bitset(m);
        for (int j = 0; j < d; ++j)
            if (j != i) r.tight.set(basis_rows[static_cast<std::size_t>(j)]);
        rays.push_back(std::move(r));
    }

    auto normal_dot = [&](std::size_t t, const std::vector<Rational>& dir) {
        return sys.normal_dot(tight[t], dir);
    };

    // insert the remaining tight rows, one double-description step each
    for (std::size_t t = 0; t < m; ++t) {
        if (in_basis[t]) continue;
        std::vector<Rational> sigma(rays.size());
        std::vector<std::size_t> pos, neg;
        for (std::size_t k = 0; k < rays.size(); ++k) {
            sigma[k] = normal_dot(t, rays[k].dir);
            if (sigma[k] > 0)
                pos.push_back(k);
            else if (sigma[k] < 0)
                neg.push_back(k);
        }
        std::vector<Ray> fresh_rays;
        for (std::size_t p : pos) {
            for (std::size_t q : neg) {
                // adjacency: common tight normals must reach rank d - 2
                if (static_cast<int>(Bitset::and_count(rays[p].tight, rays[q].tight)) < d - 2)
                    continue;
                const Bitset common = Bitset::intersect(rays[p].tight, rays[q].tight);
                RowBasis rb(d);
                bool adjacent = false;
                for (int row : common.indices()) {
                    if (rb.insert(sys.dense_normal(tight[static_cast<std::size_t>(row)])) &&
                        rb.rank() == d - 2) {
                        adjacent = true;
                        break;
                    }
                }
                if (!adjacent) continue;
                Ray fresh;
                fresh.dir.resize(static_cast<std::size_t>(d));
                for (int c = 0; c < d; ++c)
                    fresh.dir[static_cast<std::size_t>(c)] =
                        sigma[p] * rays[q].dir[static_cast<std::size_t>(c)] -
                        sigma[q] * rays[p].dir[static_cast<std::size_t>(c)];
                fresh.dir = primitive_integer_vector(fresh.dir);
                fresh.tight = common;
                fresh.tight.set(t);
                fresh_rays.push_back(std::move(fresh));
            }
        }
        std::vector<Ray> next;
        next.reserve(rays.size() - pos.size() + fresh_rays.size());
        for (std::size_t k = 0; k < rays.size(); ++k) {
            if (sigma[k] > 0) continue;
            Ray kept = std::move(rays[k]);
            if (sigma[k] == 0) kept.tight.set(t);
            next.push_back(std::move(kept));
        }
        for (auto& r : fresh_rays) next.push_back(std::move(r));
        rays = std::move(next);
    }

    TangentCone cone;
    cone.vertex = v;
    cone.tight = tight;
    cone.rays.reserve(rays.size());
    for (auto& r : rays) cone.rays.emplace_back(v.n, std::move(r.dir));
    std::sort(cone.rays.begin(), cone.rays.end());
    return cone;
}

MetricVector ray_shoot(const FacetSystem& sys, const MetricVector& v, const MetricVector& r) {
    if (v.n != sys.n() || r.n != sys.n()) throw std::invalid_argument("node count mismatch");
    bool found = false;
    Rational best_t;
    for (int id = 0; id < sys.facet_count(); ++id) {
        const Rational d = sys.normal_dot(id, r);
        if (d <= 0) continue;
        const Rational t = sys.slack(id, v) / d;
        if (!found || t < best_t) {
            best_t = t;
            found = true;
        }
    }
    if (!found) throw std::runtime_error("ray escapes every facet: inconsistent direction for a polytope");
    if (best_t == 0) throw std::invalid_argument("direction leaves the tangent cone at the vertex");
    MetricVector out = v;
    for (std::size_t c = 0; c < out.coords.size(); ++c) out.coords[c] += best_t * r.coords[c];
    return out;
}

std::vector<MetricVector> neighbors(const FacetSystem& sys, const MetricVector& v) {
    const TangentCone cone = tangent_cone(sys, v);
    std::set<MetricVector> found;
    for (const auto& r : cone.rays) found.insert(ray_shoot(sys, v, r));
    return {found.begin(), found.end()};
}

bool adjacent_to_some_cut(const FacetSystem& sys, const MetricVector& v) {
    if (!sys.is_vertex(v)) throw std::invalid_argument("cut adjacency requires a vertex of m_n");
    Bitset tv;
    sys.tight_bitset(v, tv);
    for (const CutSet& s : all_cut_sets(sys.n())) {
        const MetricVector w = cut_vector(s);
        if (w == v) continue;
        Bitset tw;
        sys.tight_bitset(w, tw);
        if (sys.adjacent_by_tight_sets(tv, tw)) return true;
    }
    return false;
}

}  // namespace metpoly
