#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "infrank/graph.hpp"
#include "infrank/influence.hpp"

namespace infrank {

/// Normalized: constant term (1 - alpha)/n, values sum to 1.
/// Unnormalized: constant term (1 - alpha), values are column sums of V and sum to n.
enum class CentralityScale { Normalized, Unnormalized };

/// Which vocabulary a vector is reported under. The numbers are the same.
enum class Measure { TotalEffect, PageRank };

enum class PageRankForm { Original, Normalized };

inline CentralityScale scale_of(PageRankForm form) {
    return form == PageRankForm::Original ? CentralityScale::Unnormalized
                                          : CentralityScale::Normalized;
}

/// How the numbers were produced. `iterations` counts fixed-point updates
/// (or series terms beyond the first); `last_step` is the max-norm change of
/// the final update; `error_bound` is a certified bound on the max-norm
/// distance to the exact solution (0 for direct solves).
struct SolveStats {
    SolverMethod method = SolverMethod::Direct;
    std::size_t iterations = 0;
    double last_step = 0.0;
    double error_bound = 0.0;
};

struct CentralityVector {
    std::vector<double> values;
    CentralityScale scale = CentralityScale::Normalized;
    DampingFactor alpha;
    std::vector<std::string> labels;
    Measure measure = Measure::TotalEffect;
    /// Number of column entries each value averages over: n for the plain
    /// normalized measure, n - 1 with the diagonal excluded, 1 for column sums.
    std::size_t averaging_divisor = 1;
    SolveStats stats;

    std::size_t size() const noexcept { return values.size(); }
    std::map<std::string, double> label_map() const;
};

/// Column averages of V: c_j = (1/n) sum_i v_ij. With `exclude_diagonal`
/// the average runs over the n - 1 off-diagonal entries and the result is
/// tagged Unnormalized, unless `renormalize` rescales it to sum to 1.
/// Throws DegenerateSize for n = 1 with the diagonal excluded.
CentralityVector total_effect_centrality(const InfluenceMatrix& v, bool exclude_diagonal,
                                         bool renormalize = false);

/// One linear solve of (I - alpha W^T) x = e, scaled by (1 - alpha)/n or (1 - alpha).
CentralityVector centrality_direct(const RowStochasticMatrix& w, DampingFactor alpha,
                                   CentralityScale scale);

/// Iterates c <- b + alpha W^T c from c = b, where b is the scale's constant
/// term, until the max-norm step is at most tol * (1 - alpha).
/// Throws IterationCapExceeded with the last iterate on hitting max_iter.
CentralityVector centrality_fixed_point(const RowStochasticMatrix& w, const SolverConfig& config,
                                        CentralityScale scale);

/// The same recurrence run for exactly series_truncation_index(alpha, tol)
/// updates: the k-th iterate is e^T times the k-th partial sum of V, so this
/// is the truncated series restricted to column sums.
CentralityVector centrality_series(const RowStochasticMatrix& w, const SolverConfig& config,
                                   CentralityScale scale);

/// PageRank of a link graph. Original is the unnormalized form (constant
/// term 1 - d), Normalized the (1 - d)/n form. config.alpha is d; the method
/// defaults to the fixed point but Direct and Series are honored.
CentralityVector pagerank(const AdjacencyMatrix& adjacency, PageRankForm form,
                          DanglingPolicy policy, const SolverConfig& config);

struct EquivalenceReport {
    std::size_t n = 0;
    DampingFactor alpha;
    double max_abs_diff_normalized = 0.0;
    double max_abs_diff_scale_relation = 0.0;
    bool pass = false;
    double tol = 0.0;
};

inline constexpr double kDefaultEquivalenceTolerance = 1e-9;
inline constexpr double kEquivalenceSolverTolerance = 1e-12;

/// Checks that normalized PageRank by fixed point equals the normalized
/// total-effect centrality by direct solve, and that the original PageRank
/// equals n times the normalized one. Also returns the normalized vector.
EquivalenceReport verify_equivalence(const AdjacencyMatrix& adjacency, DampingFactor alpha,
                                     DanglingPolicy policy,
                                     double tol = kDefaultEquivalenceTolerance,
                                     CentralityVector* normalized_out = nullptr);

/// Dense ranks, 1 = largest value. Values that agree to 15 significant
/// digits share a rank; ties resolve in index order.
std::vector<std::size_t> dense_ranks(const std::vector<double>& values);

}  // namespace infrank
