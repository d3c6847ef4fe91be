#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "infrank/dense_matrix.hpp"
#include "infrank/graph.hpp"

namespace infrank {

/// Damping factor alpha, strictly inside (0, 1). PageRank's d is the same number.
class DampingFactor {
public:
    static constexpr double kDefault = 0.85;

    constexpr DampingFactor() = default;
    /// Throws InvalidArgument unless 0 < alpha < 1.
    explicit DampingFactor(double alpha);

    constexpr double value() const noexcept { return alpha_; }
    constexpr double complement() const noexcept { return 1.0 - alpha_; }

private:
    double alpha_ = kDefault;
};

enum class SolverMethod { Direct, Series, FixedPoint };

std::string to_string(SolverMethod method);

struct SolverConfig {
    DampingFactor alpha;
    double tol = 1e-10;
    std::size_t max_iter = 10000;
    SolverMethod method = SolverMethod::FixedPoint;

    /// Throws InvalidArgument unless tol > 0 and max_iter >= 1.
    void validate() const;
};

/// How an InfluenceMatrix was obtained. For Series, `last_term` is the k of
/// the partial sum (1 - alpha) * sum_{j=0..k} alpha^j W^j.
struct InfluenceProvenance {
    SolverMethod method = SolverMethod::Direct;
    std::size_t last_term = 0;
};

/// Total-influence matrix V = (1 - alpha)(I - alpha W)^{-1}, or a truncated
/// series approximation of it. Entry (i, j) is the net influence of j on i.
///
/// Construction checks the invariants: raw entries >= -kNegativeRoundoff
/// (then clamped to 0) and row sums equal to 1, or to 1 - alpha^(k+1) for a
/// k-term partial sum, within kRowSumTolerance. Violations throw NumericalFailure.
class InfluenceMatrix {
public:
    static constexpr double kRowSumTolerance = 1e-10;
    static constexpr double kNegativeRoundoff = 1e-14;

    InfluenceMatrix(DenseMatrix values, DampingFactor alpha, InfluenceProvenance provenance,
                    std::vector<std::string> labels = {});

    std::size_t size() const noexcept { return values_.rows(); }
    double operator()(std::size_t i, std::size_t j) const noexcept { return values_(i, j); }
    const DenseMatrix& dense() const noexcept { return values_; }
    DampingFactor alpha() const noexcept { return alpha_; }
    const InfluenceProvenance& provenance() const noexcept { return provenance_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    /// Smallest entry before clamping.
    double min_raw_entry() const noexcept { return min_raw_entry_; }

private:
    DenseMatrix values_;
    DampingFactor alpha_;
    InfluenceProvenance provenance_;
    std::vector<std::string> labels_;
    double min_raw_entry_ = 0.0;
};

/// Exact V by LU with partial pivoting. Throws ProblemTooLarge above kMaxDirectSize nodes.
InfluenceMatrix influence_direct(const RowStochasticMatrix& w, DampingFactor alpha);

/// Smallest k >= 0 with alpha^(k+1) <= tol. Since every power of a
/// row-stochastic W has max row sum 1, alpha^(k+1) is exactly the
/// max-row-sum-norm distance between the k-th partial sum and V.
std::size_t series_truncation_index(DampingFactor alpha, double tol);

/// Partial sum (1 - alpha) * sum_{j=0..last_term} alpha^j W^j.
InfluenceMatrix influence_partial_sum(const RowStochasticMatrix& w, DampingFactor alpha,
                                      std::size_t last_term);

/// Truncated series with k = series_truncation_index(alpha, tol). Throws
/// IterationCapExceeded (carrying the required k) when k > max_iter.
InfluenceMatrix influence_series(const RowStochasticMatrix& w, DampingFactor alpha, double tol,
                                 std::size_t max_iter);

}  // namespace infrank
