#include "infrank/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <numeric>

#include "infrank/errors.hpp"
#include "infrank/linalg.hpp"

namespace infrank {
namespace {

double constant_term(DampingFactor alpha, CentralityScale scale, std::size_t n) {
    return scale == CentralityScale::Normalized ? alpha.complement() / static_cast<double>(n)
                                                : alpha.complement();
}

std::size_t divisor_of(CentralityScale scale, std::size_t n) {
    return scale == CentralityScale::Normalized ? n : 1;
}

// One update c_next = b + alpha W^T c. In node terms: each node keeps the
// constant inflow and receives alpha * c_j / od(j) from every in-neighbor j.
struct Recurrence {
    TransposedCsr in_links;
    double alpha;
    double inflow;

    void step(std::span<const double> current, std::span<double> next) const {
        in_links.apply(current, next);
        for (double& x : next) x = inflow + alpha * x;
    }
};

}  // namespace

std::map<std::string, double> CentralityVector::label_map() const {
    std::map<std::string, double> out;
    for (std::size_t i = 0; i < values.size(); ++i) out.emplace(labels[i], values[i]);
    return out;
}

CentralityVector total_effect_centrality(const InfluenceMatrix& v, bool exclude_diagonal,
                                         bool renormalize) {
    const std::size_t n = v.size();
    if (exclude_diagonal && n == 1) {
        throw DegenerateSize("diagonal exclusion needs at least two nodes");
    }
    CentralityVector c;
    c.alpha = v.alpha();
    c.labels = v.labels();
    c.values.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        auto row = v.dense().row(i);
        for (std::size_t j = 0; j < n; ++j) {
            if (exclude_diagonal && i == j) continue;
            c.values[j] += row[j];
        }
    }
    c.averaging_divisor = exclude_diagonal ? n - 1 : n;
    for (double& x : c.values) x /= static_cast<double>(c.averaging_divisor);
    c.scale = exclude_diagonal ? CentralityScale::Unnormalized : CentralityScale::Normalized;

    if (exclude_diagonal && renormalize) {
        const double total = std::accumulate(c.values.begin(), c.values.end(), 0.0);
        if (!(total > 0.0)) throw NumericalFailure("off-diagonal influence sums to zero");
        for (double& x : c.values) x /= total;
        c.scale = CentralityScale::Normalized;
    }
    c.stats.method = v.provenance().method;
    c.stats.iterations = v.provenance().last_term;
    return c;
}

CentralityVector centrality_direct(const RowStochasticMatrix& w, DampingFactor alpha,
                                   CentralityScale scale) {
    const std::size_t n = w.size();
    if (n > kMaxDirectSize) {
        throw ProblemTooLarge("direct solve refused for " + std::to_string(n) +
                              " nodes (limit " + std::to_string(kMaxDirectSize) +
                              "); use the series or fixed-point method");
    }
    DenseMatrix system(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) system(i, j) = -alpha.value() * w(j, i);
        system(i, i) += 1.0;
    }
    const std::vector<double> ones(n, 1.0);
    CentralityVector c;
    c.values = LuDecomposition(std::move(system)).solve(ones);
    const double b = constant_term(alpha, scale, n);
    for (double& x : c.values) {
        x *= b;
        if (!std::isfinite(x)) throw NumericalFailure("direct centrality solve is not finite");
    }
    c.scale = scale;
    c.alpha = alpha;
    c.labels = w.labels();
    c.averaging_divisor = divisor_of(scale, n);
    c.stats = {SolverMethod::Direct, 0, 0.0, 0.0};
    return c;
}

CentralityVector centrality_fixed_point(const RowStochasticMatrix& w, const SolverConfig& config,
                                        CentralityScale scale) {
    config.validate();
    const std::size_t n = w.size();
    const DampingFactor alpha = config.alpha;
    const Recurrence rec{TransposedCsr(w.dense()), alpha.value(), constant_term(alpha, scale, n)};
    const double stop_at = config.tol * alpha.complement();
    const double mass = static_cast<double>(n) * rec.inflow / alpha.complement();
    const double ratio = alpha.value() / alpha.complement();

    std::vector<double> current(n, rec.inflow);
    std::vector<double> next(n);
    double step = 0.0;
    double previous_step = std::numeric_limits<double>::infinity();
    double step_l1 = 0.0;
    std::size_t iterations = 0;
    bool converged = false;
    while (iterations < config.max_iter) {
        rec.step(current, next);
        ++iterations;
        step = 0.0;
        step_l1 = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double d = std::abs(next[i] - current[i]);
            step = std::max(step, d);
            step_l1 += d;
        }
        current.swap(next);
        // Max-norm window over two steps, plus the 1-norm certificate relative to total mass.
        if (std::max(step, alpha.value() * previous_step) <= stop_at &&
            ratio * step_l1 <= config.tol * mass) {
            converged = true;
            break;
        }
        previous_step = step;
    }
    if (!converged) {
        throw IterationCapExceeded("fixed point did not converge in " +
                                       std::to_string(config.max_iter) +
                                       " iterations (last step " + std::to_string(step) + ")",
                                   iterations, config.max_iter, std::move(current), step);
    }

    CentralityVector c;
    c.values = std::move(current);
    c.scale = scale;
    c.alpha = alpha;
    c.labels = w.labels();
    c.averaging_divisor = divisor_of(scale, n);
    c.stats = {SolverMethod::FixedPoint, iterations, step, ratio * step_l1};
    return c;
}

CentralityVector centrality_series(const RowStochasticMatrix& w, const SolverConfig& config,
                                   CentralityScale scale) {
    config.validate();
    const std::size_t n = w.size();
    const DampingFactor alpha = config.alpha;
    const std::size_t k = series_truncation_index(alpha, config.tol);
    if (k > config.max_iter) {
        throw IterationCapExceeded("series needs terms up to k = " + std::to_string(k) +
                                       " but the cap is " + std::to_string(config.max_iter),
                                   k, config.max_iter);
    }
    const Recurrence rec{TransposedCsr(w.dense()), alpha.value(), constant_term(alpha, scale, n)};
    std::vector<double> current(n, rec.inflow);
    std::vector<double> next(n);
    double step = 0.0;
    for (std::size_t t = 0; t < k; ++t) {
        rec.step(current, next);
        step = max_abs_diff(current, next);
        current.swap(next);
    }

    CentralityVector c;
    c.values = std::move(current);
    c.scale = scale;
    c.alpha = alpha;
    c.labels = w.labels();
    c.averaging_divisor = divisor_of(scale, n);
    // Omitted tail has 1-norm exactly alpha^(k+1) (times n when unnormalized).
    const double tail = std::pow(alpha.value(), static_cast<double>(k + 1));
    c.stats = {SolverMethod::Series, k, step,
               scale == CentralityScale::Normalized ? tail : tail * static_cast<double>(n)};
    return c;
}

CentralityVector pagerank(const AdjacencyMatrix& adjacency, PageRankForm form,
                          DanglingPolicy policy, const SolverConfig& config) {
    const RowStochasticMatrix w = row_normalize(adjacency, policy);
    const CentralityScale scale = scale_of(form);
    CentralityVector pr;
    switch (config.method) {
        case SolverMethod::Direct:
            pr = centrality_direct(w, config.alpha, scale);
            break;
        case SolverMethod::Series:
            pr = centrality_series(w, config, scale);
            break;
        case SolverMethod::FixedPoint:
            pr = centrality_fixed_point(w, config, scale);
            break;
    }
    pr.measure = Measure::PageRank;
    return pr;
}

EquivalenceReport verify_equivalence(const AdjacencyMatrix& adjacency, DampingFactor alpha,
                                     DanglingPolicy policy, double tol,
                                     CentralityVector* normalized_out) {
    if (!(tol > 0.0)) throw InvalidArgument("tolerance must be positive");
    SolverConfig config;
    config.alpha = alpha;
    config.tol = kEquivalenceSolverTolerance;
    config.max_iter = 1000000;
    config.method = SolverMethod::FixedPoint;

    CentralityVector normalized = pagerank(adjacency, PageRankForm::Normalized, policy, config);
    const CentralityVector direct =
        centrality_direct(row_normalize(adjacency, policy), alpha, CentralityScale::Normalized);
    const CentralityVector original = pagerank(adjacency, PageRankForm::Original, policy, config);

    const std::size_t n = adjacency.size();
    EquivalenceReport report;
    report.n = n;
    report.alpha = alpha;
    report.tol = tol;
    report.max_abs_diff_normalized = max_abs_diff(normalized.values, direct.values);
    double scale_gap = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        scale_gap = std::max(
            scale_gap, std::abs(original.values[i] - static_cast<double>(n) * normalized.values[i]));
    }
    report.max_abs_diff_scale_relation = scale_gap;
    report.pass = report.max_abs_diff_normalized <= tol && report.max_abs_diff_scale_relation <= tol;
    if (normalized_out) *normalized_out = std::move(normalized);
    return report;
}

std::vector<std::size_t> dense_ranks(const std::vector<double>& values) {
    const std::size_t n = values.size();
    std::vector<double> keys(n);
    char buf[64];
    for (std::size_t i = 0; i < n; ++i) {
        std::snprintf(buf, sizeof buf, "%.15g", values[i]);
        keys[i] = std::strtod(buf, nullptr);
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return keys[a] > keys[b]; });
    std::vector<std::size_t> ranks(n);
    std::size_t rank = 0;
    for (std::size_t pos = 0; pos < n; ++pos) {
        if (pos == 0 || keys[order[pos]] != keys[order[pos - 1]]) ++rank;
        ranks[order[pos]] = rank;
    }
    return ranks;
}

}  // namespace infrank
