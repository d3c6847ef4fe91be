#include "infrank/influence.hpp"

#include <algorithm>
#include <cmath>

#include "infrank/errors.hpp"
#include "infrank/linalg.hpp"

namespace infrank {

DampingFactor::DampingFactor(double alpha) : alpha_(alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw InvalidArgument("damping factor must lie strictly between 0 and 1, got " +
                              std::to_string(alpha));
    }
}

std::string to_string(SolverMethod method) {
    switch (method) {
        case SolverMethod::Direct: return "direct";
        case SolverMethod::Series: return "series";
        case SolverMethod::FixedPoint: return "fixed-point";
    }
    return "unknown";
}

void SolverConfig::validate() const {
    if (!(tol > 0.0) || !std::isfinite(tol)) throw InvalidArgument("tolerance must be positive");
    if (max_iter < 1) throw InvalidArgument("iteration cap must be at least 1");
}

InfluenceMatrix::InfluenceMatrix(DenseMatrix values, DampingFactor alpha,
                                 InfluenceProvenance provenance, std::vector<std::string> labels)
    : values_(std::move(values)),
      alpha_(alpha),
      provenance_(provenance),
      labels_(std::move(labels)) {
    const std::size_t n = values_.rows();
    if (n == 0) throw EmptyGraph();
    if (values_.cols() != n) throw DimensionMismatch("influence matrix must be square");
    if (labels_.empty()) labels_ = default_labels(n);
    if (labels_.size() != n) throw DimensionMismatch("one label per node is required");

    const double expected_row_sum =
        provenance_.method == SolverMethod::Series
            ? 1.0 - std::pow(alpha_.value(), static_cast<double>(provenance_.last_term + 1))
            : 1.0;

    min_raw_entry_ = values_(0, 0);
    for (std::size_t i = 0; i < n; ++i) {
        double sum = 0.0;
        for (double v : values_.row(i)) {
            if (!std::isfinite(v)) throw NumericalFailure("influence matrix has a non-finite entry");
            min_raw_entry_ = std::min(min_raw_entry_, v);
            sum += v;
        }
        if (std::abs(sum - expected_row_sum) > kRowSumTolerance) {
            throw NumericalFailure("influence matrix row " + std::to_string(i) + " sums to " +
                                   std::to_string(sum) + ", expected " +
                                   std::to_string(expected_row_sum));
        }
    }
    if (min_raw_entry_ < -kNegativeRoundoff) {
        throw NumericalFailure("influence matrix has a negative entry beyond roundoff");
    }
    for (double& v : values_.data()) v = std::max(v, 0.0);
}

InfluenceMatrix influence_direct(const RowStochasticMatrix& w, DampingFactor alpha) {
    const std::size_t n = w.size();
    if (n > kMaxDirectSize) {
        throw ProblemTooLarge("direct solve refused for " + std::to_string(n) +
                              " nodes (limit " + std::to_string(kMaxDirectSize) +
                              "); use the series or fixed-point method");
    }
    DenseMatrix system(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) system(i, j) = -alpha.value() * w(i, j);
        system(i, i) += 1.0;
    }
    DenseMatrix v = LuDecomposition(std::move(system)).inverse();
    for (double& x : v.data()) x *= alpha.complement();
    return InfluenceMatrix(std::move(v), alpha, {SolverMethod::Direct, 0}, w.labels());
}

std::size_t series_truncation_index(DampingFactor alpha, double tol) {
    if (!(tol > 0.0)) throw InvalidArgument("tolerance must be positive");
    std::size_t k = 0;
    double tail = alpha.value();
    while (tail > tol) {
        tail *= alpha.value();
        ++k;
    }
    return k;
}

InfluenceMatrix influence_partial_sum(const RowStochasticMatrix& w, DampingFactor alpha,
                                      std::size_t last_term) {
    const std::size_t n = w.size();
    DenseMatrix sum = DenseMatrix::identity(n);
    DenseMatrix term = DenseMatrix::identity(n);
    for (std::size_t j = 1; j <= last_term; ++j) {
        term = multiply(w.dense(), term);
        for (double& x : term.data()) x *= alpha.value();
        auto acc = sum.data();
        auto t = term.data();
        for (std::size_t e = 0; e < acc.size(); ++e) acc[e] += t[e];
    }
    for (double& x : sum.data()) x *= alpha.complement();
    return InfluenceMatrix(std::move(sum), alpha, {SolverMethod::Series, last_term}, w.labels());
}

InfluenceMatrix influence_series(const RowStochasticMatrix& w, DampingFactor alpha, double tol,
                                 std::size_t max_iter) {
    const std::size_t k = series_truncation_index(alpha, tol);
    if (k > max_iter) {
        throw IterationCapExceeded("series needs terms up to k = " + std::to_string(k) +
                                       " but the cap is " + std::to_string(max_iter),
                                   k, max_iter);
    }
    return influence_partial_sum(w, alpha, k);
}

}  // namespace infrank
