#include "infrank/graph.hpp"

#include <cmath>

#include "infrank/errors.hpp"

namespace infrank {
namespace {

// Neumaier summation; keeps the row-sum check meaningful for long rows.
double compensated_sum(std::span<const double> values) {
    double sum = 0.0;
    double carry = 0.0;
    for (double v : values) {
        const double t = sum + v;
        carry += std::abs(sum) >= std::abs(v) ? (sum - t) + v : (v - t) + sum;
        sum = t;
    }
    return sum + carry;
}

}  // namespace

std::vector<std::string> default_labels(std::size_t n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    return labels;
}

AdjacencyMatrix::AdjacencyMatrix(std::size_t n, std::vector<std::uint8_t> entries,
                                 std::vector<std::string> labels)
    : n_(n), entries_(std::move(entries)), labels_(std::move(labels)) {
    if (n_ == 0) throw EmptyGraph();
    if (entries_.size() != n_ * n_) {
        throw DimensionMismatch("adjacency entries do not form an n x n matrix");
    }
    if (labels_.empty()) labels_ = default_labels(n_);
    if (labels_.size() != n_) throw DimensionMismatch("one label per node is required");
    for (std::uint8_t v : entries_) {
        if (v > 1) throw InvalidArgument("adjacency entries must be 0 or 1");
    }
    index_.reserve(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        if (labels_[i].empty()) throw InvalidArgument("node labels must be nonempty");
        if (!index_.emplace(labels_[i], i).second) {
            throw InvalidArgument("duplicate node label '" + labels_[i] + "'");
        }
    }
}

std::optional<std::size_t> AdjacencyMatrix::index_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<std::size_t> AdjacencyMatrix::self_loop_nodes() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n_; ++i) {
        if (link(i, i)) out.push_back(i);
    }
    return out;
}

AdjacencyMatrix build_adjacency(std::span<const Edge> edges,
                                std::span<const std::string> explicit_nodes) {
    std::vector<std::string> labels;
    std::unordered_map<std::string, std::size_t> index;
    auto intern = [&](const std::string& label) {
        if (label.empty()) throw InvalidArgument("node labels must be nonempty");
        auto [it, inserted] = index.emplace(label, labels.size());
        if (inserted) labels.push_back(label);
        return it->second;
    };

    for (const auto& label : explicit_nodes) intern(label);
    std::vector<std::pair<std::size_t, std::size_t>> links;
    links.reserve(edges.size());
    for (const auto& [source, target] : edges) {
        const std::size_t s = intern(source);
        const std::size_t t = intern(target);
        links.emplace_back(s, t);
    }

    const std::size_t n = labels.size();
    if (n == 0) throw EmptyGraph();
    std::vector<std::uint8_t> entries(n * n, 0);
    for (auto [s, t] : links) entries[s * n + t] = 1;
    return AdjacencyMatrix(n, std::move(entries), std::move(labels));
}

OutDegreeVector out_degrees(const AdjacencyMatrix& adjacency) {
    OutDegreeVector od;
    od.values.resize(adjacency.size(), 0);
    for (std::size_t i = 0; i < adjacency.size(); ++i) {
        for (std::uint8_t a : adjacency.row(i)) od.values[i] += a;
    }
    return od;
}

RowStochasticMatrix::RowStochasticMatrix(DenseMatrix weights, std::vector<std::string> labels)
    : weights_(std::move(weights)), labels_(std::move(labels)) {
    const std::size_t n = weights_.rows();
    if (n == 0) throw EmptyGraph();
    if (weights_.cols() != n) throw DimensionMismatch("row-stochastic matrix must be square");
    if (labels_.empty()) labels_ = default_labels(n);
    if (labels_.size() != n) throw DimensionMismatch("one label per node is required");
    for (std::size_t i = 0; i < n; ++i) {
        for (double w : weights_.row(i)) {
            if (!(w >= 0.0 && w <= 1.0)) {
                throw InvalidArgument("row " + std::to_string(i) + " has an entry outside [0, 1]");
            }
        }
        if (std::abs(compensated_sum(weights_.row(i)) - 1.0) > kRowSumTolerance) {
            throw InvalidArgument("row " + std::to_string(i) + " does not sum to 1");
        }
    }
}

RowStochasticMatrix row_normalize(const AdjacencyMatrix& adjacency, DanglingPolicy policy) {
    const std::size_t n = adjacency.size();
    const auto od = out_degrees(adjacency);
    DenseMatrix w(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t degree = od.values[i];
        if (degree > 0) {
            const double share = 1.0 / static_cast<double>(degree);
            auto a_row = adjacency.row(i);
            for (std::size_t j = 0; j < n; ++j) {
                if (a_row[j]) w(i, j) = share;
            }
            continue;
        }
        switch (policy) {
            case DanglingPolicy::Reject:
                throw DanglingNode(i, adjacency.labels()[i]);
            case DanglingPolicy::UniformTeleport:
                for (std::size_t j = 0; j < n; ++j) w(i, j) = 1.0 / static_cast<double>(n);
                break;
            case DanglingPolicy::SelfLoop:
                w(i, i) = 1.0;
                break;
        }
    }
    return RowStochasticMatrix(std::move(w), adjacency.labels());
}

}  // namespace infrank
