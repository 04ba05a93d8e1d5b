#ifndef METPOLY_LINALG_HPP
#define METPOLY_LINALG_HPP

#include <optional>
#include <vector>

#include "metpoly/rational.hpp"

namespace metpoly {

/// Dense row-major matrix of exact rationals.
struct RationalMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Rational> entries;  // rows * cols, row-major

    RationalMatrix() = default;
    RationalMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<std::size_t>(r) * c) {}

    Rational& at(int r, int c) { return entries[static_cast<std::size_t>(r) * cols + c]; }
    const Rational& at(int r, int c) const { return entries[static_cast<std::size_t>(r) * cols + c]; }

    RationalMatrix transposed() const;
};

/// Exact rank via fraction-preserving Gaussian elimination. Pivot choice is the
/// first nonzero entry in column order.
int rank(const RationalMatrix& m);

/// Basis of {x : m x = 0}; size equals cols - rank(m). Each vector satisfies
/// m x = 0 exactly.
std::vector<std::vector<Rational>> nullspace_basis(const RationalMatrix& m);

/// Exact solution of m x = b, or nullopt when the system is inconsistent.
/// Free variables are set to zero. Throws std::invalid_argument on dimension
/// mismatch.
std::optional<std::vector<Rational>> solve(const RationalMatrix& m, const std::vector<Rational>& b);

/// Incremental row-space basis. Rows are reduced against the current echelon
/// set as they arrive, so rank queries can stop early once a target is hit.
class RowBasis {
public:
    explicit RowBasis(int cols) : cols_(cols) {}

    /// Reduce the row against the basis; keep it if independent.
    /// Returns true when the rank increased.
    bool insert(std::vector<Rational> row);

    int rank() const { return static_cast<int>(rows_.size()); }
    int cols() const { return cols_; }

private:
    int cols_;
    std::vector<std::vector<Rational>> rows_;  // echelon rows
    std::vector<int> pivot_cols_;              // pivot column of rows_[k]
};

}  // namespace metpoly

#endif
