#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "infrank/dense_matrix.hpp"

namespace infrank {

/// Largest system the dense solvers accept.
inline constexpr std::size_t kMaxDirectSize = 2000;

/// LU factorization with partial (row) pivoting, PA = LU.
///
/// Throws NumericalFailure on an exactly zero pivot column.
class LuDecomposition {
public:
    explicit LuDecomposition(DenseMatrix a);

    std::size_t size() const noexcept { return lu_.rows(); }

    /// Solves A x = b.
    std::vector<double> solve(std::span<const double> b) const;

    /// Returns A^{-1}, one column solve per unit vector.
    DenseMatrix inverse() const;

private:
    void solve_in_place(std::span<double> x) const;

    DenseMatrix lu_;
    std::vector<std::size_t> pivot_;
};

/// Compressed in-link lists of a square matrix: for each column j, the rows i
/// with m_ij != 0. apply() computes y = M^T x, i.e. y_j = sum_i m_ij x_i, which
/// for a normalized adjacency matrix is the sum over in-neighbors i of x_i / od(i).
class TransposedCsr {
public:
    explicit TransposedCsr(const DenseMatrix& m);

    std::size_t size() const noexcept { return offsets_.size() - 1; }
    std::size_t nonzeros() const noexcept { return sources_.size(); }

    void apply(std::span<const double> x, std::span<double> y) const;

private:
    std::vector<std::size_t> offsets_;
    std::vector<std::size_t> sources_;
    std::vector<double> weights_;
};

}  // namespace infrank
