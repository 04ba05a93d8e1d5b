#include "metpoly/symmetry.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace metpoly {

std::uint64_t symmetry_group_order(int n) {
    std::uint64_t f = 1;
    for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
    return f << (n - 1);
}

namespace {

void check_permutation(const std::vector<int>& perm, int n) {
    if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("permutation length != n");
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : perm) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("not a permutation of 1..n");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

std::vector<int> invert(const std::vector<int>& perm) {
    std::vector<int> inv(perm.size());
    for (std::size_t a = 0; a < perm.size(); ++a)
        inv[static_cast<std::size_t>(perm[a] - 1)] = static_cast<int>(a) + 1;
    return inv;
}

}  // namespace

MetricVector apply_permutation(const std::vector<int>& perm, const MetricVector& x) {
    check_permutation(perm, x.n);
    const PairIndexer idx(x.n);
    const std::vector<int> inv = invert(perm);
    MetricVector out = MetricVector::zero(x.n);
    for (int i = 1; i <= x.n; ++i) {
        for (int j = i + 1; j <= x.n; ++j) {
            const int a = inv[static_cast<std::size_t>(i - 1)];
            const int b = inv[static_cast<std::size_t>(j - 1)];
            out.coords[static_cast<std::size_t>(idx.index(i, j))] =
                x.coords[static_cast<std::size_t>(idx.index(std::min(a, b), std::max(a, b)))];
        }
    }
    return out;
}

MetricVector apply_switching(const CutSet& s, const MetricVector& x) {
    if (s.n != x.n) throw std::invalid_argument("node count mismatch");
    const PairIndexer idx(x.n);
    MetricVector out = x;
    for (int i = 1; i <= x.n; ++i)
        for (int j = i + 1; j <= x.n; ++j)
            if (s.contains(i) != s.contains(j)) {
                auto& c = out.coords[static_cast<std::size_t>(idx.index(i, j))];
                c = Rational(1) - c;
            }
    return out;
}

MetricVector apply_symmetry(const SymmetryElement& g, const MetricVector& x) {
    return apply_switching(g.switch_cut, apply_permutation(g.perm, x));
}

std::vector<int> compose_permutations(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("permutation size mismatch");
    std::vector<int> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[static_cast<std::size_t>(b[i] - 1)];
    return out;
}

namespace {

// Canonicalization search for one switching. Image coordinates are
//   z(i,j) = flip(i,j) ? 1 - x(q(i), q(j)) : x(q(i), q(j))
// where q maps image nodes to original nodes. Placing image nodes 1..n in
// order decides the coordinate prefix (1,2),(1,3),...,(1,k) contiguously, so a
// partial q can be compared against the incumbent on that prefix and abandoned
// early. Non-prefix coordinates are settled by a full comparison at the leaves.
class CanonSearch {
public:
    CanonSearch(const MetricVector& x, const PairIndexer& idx)
        : x_(x), idx_(idx), n_(x.n), q_(static_cast<std::size_t>(x.n) + 1, 0),
          used_(static_cast<std::size_t>(x.n) + 1, false),
          row1_(static_cast<std::size_t>(x.n) + 1) {}

    void run(const std::vector<char>& flip, std::vector<Rational>& best, bool& have_best) {
        flip_ = &flip;
        best_ = &best;
        have_best_ = &have_best;
        descend(1);
    }

private:
    Rational image_coord(int i, int j) const {
        const int a = q_[static_cast<std::size_t>(i)];
        const int b = q_[static_cast<std::size_t>(j)];
        const int id = idx_.index(std::min(a, b), std::max(a, b));
        const Rational& v = x_.coords[static_cast<std::size_t>(id)];
        return (*flip_)[static_cast<std::size_t>(idx_.index(i, j))] ? Rational(1) - v : v;
    }

    // compare decided prefix (1,2)..(1,k) against the incumbent
    // -1 strictly smaller, 0 tied, +1 strictly larger
    int compare_prefix(int k) const {
        if (!*have_best_) return -1;
        for (int t = 2; t <= k; ++t) {
            const int c = cmp(row1_[static_cast<std::size_t>(t)], (*best_)[static_cast<std::size_t>(t - 2)]);
            if (c != 0) return c;
        }
        return 0;
    }

    void descend(int level) {
        if (level > n_) {
            finish_leaf();
            return;
        }
        if (level == 1) {
            for (int v = 1; v <= n_; ++v) {
                q_[1] = v;
                used_[static_cast<std::size_t>(v)] = true;
                descend(2);
                used_[static_cast<std::size_t>(v)] = false;
            }
            return;
        }
        // order candidates by the newly decided prefix coordinate
        std::vector<std::pair<Rational, int>> cand;
        cand.reserve(static_cast<std::size_t>(n_));
        for (int v = 1; v <= n_; ++v) {
            if (used_[static_cast<std::size_t>(v)]) continue;
            q_[static_cast<std::size_t>(level)] = v;
            cand.emplace_back(image_coord(1, level), v);
        }
        std::sort(cand.begin(), cand.end(), [](const auto& a, const auto& b) {
            const int c = cmp(a.first, b.first);
            return c != 0 ? c < 0 : a.second < b.second;
        });
        for (const auto& [coord, v] : cand) {
            row1_[static_cast<std::size_t>(level)] = coord;
            if (compare_prefix(level) > 0) break;  // later candidates only larger
            q_[static_cast<std::size_t>(level)] = v;
            used_[static_cast<std::size_t>(v)] = true;
            descend(level + 1);
            used_[static_cast<std::size_t>(v)] = false;
        }
    }

    void finish_leaf() {
        std::vector<Rational> img(static_cast<std::size_t>(idx_.dimension()));
        for (int t = 2; t <= n_; ++t) img[static_cast<std::size_t>(t - 2)] = row1_[static_cast<std::size_t>(t)];
        std::size_t pos = static_cast<std::size_t>(n_) - 1;
        for (int i = 2; i <= n_; ++i)
            for (int j = i + 1; j <= n_; ++j) img[pos++] = image_coord(i, j);
        if (!*have_best_ || compare_lex(img, *best_) < 0) {
            *best_ = std::move(img);
            *have_best_ = true;
        }
    }

    const MetricVector& x_;
    const PairIndexer& idx_;
    const int n_;
    std::vector<int> q_;      // q_[i] = original node shown at image position i
    std::vector<bool> used_;
    std::vector<Rational> row1_;  // decided image coords (1,t)
    const std::vector<char>* flip_ = nullptr;
    std::vector<Rational>* best_ = nullptr;
    bool* have_best_ = nullptr;
};

std::vector<char> switching_flips(const CutSet& s, const PairIndexer& idx) {
    std::vector<char> flip(static_cast<std::size_t>(idx.dimension()), 0);
    for (int i = 1; i <= s.n; ++i)
        for (int j = i + 1; j <= s.n; ++j)
            if (s.contains(i) != s.contains(j)) flip[static_cast<std::size_t>(idx.index(i, j))] = 1;
    return flip;
}

}  // namespace

MetricVector canonical_form(const MetricVector& x) {
    const PairIndexer idx(x.n);
    std::vector<Rational> best;
    bool have_best = false;
    CanonSearch search(x, idx);
    for (const CutSet& s : all_cut_sets(x.n))
        search.run(switching_flips(s, idx), best, have_best);
    return MetricVector(x.n, std::move(best));
}

std::vector<MetricVector> orbit(const MetricVector& x) {
    if (x.n > 6)
        throw CapabilityError("exhaustive orbit supported for n <= 6 (group order " +
                              std::to_string(symmetry_group_order(x.n)) + " at n=" +
                              std::to_string(x.n) + ")");
    std::set<MetricVector> images;
    std::vector<int> perm(static_cast<std::size_t>(x.n));
    std::iota(perm.begin(), perm.end(), 1);
    const auto cuts = all_cut_sets(x.n);
    do {
        const MetricVector permuted = apply_permutation(perm, x);
        for (const CutSet& s : cuts) images.insert(apply_switching(s, permuted));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return {images.begin(), images.end()};
}

}  // namespace metpoly
