#include "metpoly/linalg.hpp"

#include <stdexcept>

namespace metpoly {

RationalMatrix RationalMatrix::transposed() const {
    RationalMatrix t(cols, rows);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
    return t;
}

namespace {

// Forward elimination in place; returns pivot (row, col) positions.
// Pivot choice: first row with a nonzero entry in the current column.
std::vector<std::pair<int, int>> echelonize(RationalMatrix& m) {
    std::vector<std::pair<int, int>> pivots;
    int r = 0;
    for (int col = 0; col < m.cols && r < m.rows; ++col) {
        int sel = -1;
        for (int i = r; i < m.rows; ++i) {
            if (m.at(i, col) != 0) {
                sel = i;
                break;
            }
        }
        if (sel < 0) continue;
        if (sel != r)
            for (int c = col; c < m.cols; ++c) swap(m.at(r, c), m.at(sel, c));
        const Rational pivot = m.at(r, col);
        for (int i = r + 1; i < m.rows; ++i) {
            if (m.at(i, col) == 0) continue;
            const Rational factor = m.at(i, col) / pivot;
            m.at(i, col) = 0;
            for (int c = col + 1; c < m.cols; ++c) m.at(i, c) -= factor * m.at(r, c);
        }
        pivots.emplace_back(r, col);
        ++r;
    }
    return pivots;
}

}  // namespace

int rank(const RationalMatrix& m) {
    RationalMatrix work = m;
    return static_cast<int>(echelonize(work).size());
}

std::vector<std::vector<Rational>> nullspace_basis(const RationalMatrix& m) {
    RationalMatrix work = m;
    auto pivots = echelonize(work);

    // back-substitute to reduced row echelon form
    for (int p = static_cast<int>(pivots.size()) - 1; p >= 0; --p) {
        auto [pr, pc] = pivots[p];
        const Rational pivot = work.at(pr, pc);
        for (int c = pc; c < work.cols; ++c) work.at(pr, c) /= pivot;
        for (int i = 0; i < pr; ++i) {
            const Rational factor = work.at(i, pc);
            if (factor == 0) continue;
            for (int c = pc; c < work.cols; ++c) work.at(i, c) -= factor * work.at(pr, c);
        }
    }

    std::vector<bool> is_pivot_col(static_cast<std::size_t>(m.cols), false);
    for (auto [pr, pc] : pivots) is_pivot_col[static_cast<std::size_t>(pc)] = true;

    std::vector<std::vector<Rational>> basis;
    for (int free_col = 0; free_col < m.cols; ++free_col) {
        if (is_pivot_col[static_cast<std::size_t>(free_col)]) continue;
        std::vector<Rational> v(static_cast<std::size_t>(m.cols), Rational(0));
        v[static_cast<std::size_t>(free_col)] = 1;
        for (auto [pr, pc] : pivots) v[static_cast<std::size_t>(pc)] = -work.at(pr, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rational>> solve(const RationalMatrix& m, const std::vector<Rational>& b) {
    if (static_cast<int>(b.size()) != m.rows)
        throw std::invalid_argument("solve: right-hand side length does not match row count");

    RationalMatrix aug(m.rows, m.cols + 1);
    for (int r = 0; r < m.rows; ++r) {
        for (int c = 0; c < m.cols; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols) = b[static_cast<std::size_t>(r)];
    }
    auto pivots = echelonize(aug);

    // a pivot in the augmented column marks an inconsistent system
    if (!pivots.empty() && pivots.back().second == m.cols) return std::nullopt;

    std::vector<Rational> x(static_cast<std::size_t>(m.cols), Rational(0));
    for (int p = static_cast<int>(pivots.size()) - 1; p >= 0; --p) {
        auto [pr, pc] = pivots[p];
        Rational acc = aug.at(pr, m.cols);
        for (int c = pc + 1; c < m.cols; ++c) acc -= aug.at(pr, c) * x[static_cast<std::size_t>(c)];
        x[static_cast<std::size_t>(pc)] = acc / aug.at(pr, pc);
    }
    return x;
}

bool RowBasis::insert(std::vector<Rational> row) {
    if (static_cast<int>(row.size()) != cols_)
        throw std::invalid_argument("RowBasis: row length mismatch");
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const int pc = pivot_cols_[k];
        const Rational& lead = row[static_cast<std::size_t>(pc)];
        if (lead == 0) continue;
        const Rational factor = lead / rows_[k][static_cast<std::size_t>(pc)];
        for (int c = pc; c < cols_; ++c)
            row[static_cast<std::size_t>(c)] -= factor * rows_[k][static_cast<std::size_t>(c)];
    }
    int pc = -1;
    for (int c = 0; c < cols_; ++c) {
        if (row[static_cast<std::size_t>(c)] != 0) {
            pc = c;
            break;
        }
    }
    if (pc < 0) return false;
    // keep rows ordered by pivot column so reduction stays one pass
    std::size_t pos = 0;
    while (pos < rows_.size() && pivot_cols_[pos] < pc) ++pos;
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(row));
    pivot_cols_.insert(pivot_cols_.begin() + static_cast<std::ptrdiff_t>(pos), pc);
    return true;
}

}  // namespace metpoly
