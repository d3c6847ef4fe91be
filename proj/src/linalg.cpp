#include "infrank/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include "infrank/errors.hpp"

namespace infrank {

LuDecomposition::LuDecomposition(DenseMatrix a) : lu_(std::move(a)) {
    const std::size_t n = lu_.rows();
    if (lu_.cols() != n) throw DimensionMismatch("LU: matrix must be square");
    pivot_.resize(n);
    std::iota(pivot_.begin(), pivot_.end(), std::size_t{0});

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        double best = std::abs(lu_(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            const double v = std::abs(lu_(i, k));
            if (v > best) {
                best = v;
                p = i;
            }
        }
        if (best == 0.0 || !std::isfinite(best)) {
            throw NumericalFailure("LU: singular matrix (zero pivot in column " +
                                   std::to_string(k) + ")");
        }
        if (p != k) {
            auto rk = lu_.row(k);
            auto rp = lu_.row(p);
            std::swap_ranges(rk.begin(), rk.end(), rp.begin());
            std::swap(pivot_[k], pivot_[p]);
        }
        const double diag = lu_(k, k);
        auto rk = lu_.row(k);
        for (std::size_t i = k + 1; i < n; ++i) {
            auto ri = lu_.row(i);
            const double factor = ri[k] / diag;
            ri[k] = factor;
            if (factor == 0.0) continue;
            for (std::size_t j = k + 1; j < n; ++j) ri[j] -= factor * rk[j];
        }
    }
}

void LuDecomposition::solve_in_place(std::span<double> x) const {
    const std::size_t n = size();
    for (std::size_t i = 0; i < n; ++i) {
        auto ri = lu_.row(i);
        double s = x[i];
        for (std::size_t j = 0; j < i; ++j) s -= ri[j] * x[j];
        x[i] = s;
    }
    for (std::size_t i = n; i-- > 0;) {
        auto ri = lu_.row(i);
        double s = x[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= ri[j] * x[j];
        x[i] = s / ri[i];
    }
}

std::vector<double> LuDecomposition::solve(std::span<const double> b) const {
    if (b.size() != size()) throw DimensionMismatch("LU solve: right-hand side length");
    std::vector<double> x(size());
    for (std::size_t i = 0; i < size(); ++i) x[i] = b[pivot_[i]];
    solve_in_place(x);
    return x;
}

DenseMatrix LuDecomposition::inverse() const {
    const std::size_t n = size();
    DenseMatrix inv(n, n);
    std::vector<double> column(n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) column[i] = pivot_[i] == j ? 1.0 : 0.0;
        solve_in_place(column);
        for (std::size_t i = 0; i < n; ++i) inv(i, j) = column[i];
    }
    return inv;
}

TransposedCsr::TransposedCsr(const DenseMatrix& m) {
    const std::size_t n = m.rows();
    if (m.cols() != n) throw DimensionMismatch("in-link operator: matrix must be square");
    offsets_.assign(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (m(i, j) != 0.0) ++offsets_[j + 1];
        }
    }
    std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
    sources_.resize(offsets_.back());
    weights_.resize(offsets_.back());
    std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
    // Row-major scan, so each column's sources come out in increasing order.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double v = m(i, j);
            if (v == 0.0) continue;
            sources_[cursor[j]] = i;
            weights_[cursor[j]] = v;
            ++cursor[j];
        }
    }
}

void TransposedCsr::apply(std::span<const double> x, std::span<double> y) const {
    const std::size_t n = size();
    for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t k = offsets_[j]; k < offsets_[j + 1]; ++k) s += weights_[k] * x[sources_[k]];
        y[j] = s;
    }
}

}  // namespace infrank
