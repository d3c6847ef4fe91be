#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "infrank/dense_matrix.hpp"

namespace infrank {

using Edge = std::pair<std::string, std::string>;

/// Labels "1".."n", used when a graph arrives without node names.
std::vector<std::string> default_labels(std::size_t n);

/// Directed 0/1 link structure. Entry (i, j) is 1 iff node i links to node j.
///
/// Immutable after construction. Node indices follow first appearance in the
/// input; labels are unique.
class AdjacencyMatrix {
public:
    /// Takes a row-major n*n matrix of 0/1 values. Throws EmptyGraph for n == 0,
    /// InvalidArgument for non-binary entries or bad labels.
    AdjacencyMatrix(std::size_t n, std::vector<std::uint8_t> entries,
                    std::vector<std::string> labels);

    std::size_t size() const noexcept { return n_; }
    bool link(std::size_t from, std::size_t to) const noexcept { return entries_[from * n_ + to] != 0; }
    std::span<const std::uint8_t> row(std::size_t i) const noexcept {
        return {entries_.data() + i * n_, n_};
    }
    std::span<const std::uint8_t> entries() const noexcept { return entries_; }

    const std::vector<std::string>& labels() const noexcept { return labels_; }
    std::optional<std::size_t> index_of(const std::string& label) const;

    /// Indices of nodes with a_ii = 1. The model allows them; callers
    /// may surface this as a warning.
    std::vector<std::size_t> self_loop_nodes() const;
    bool has_self_loops() const { return !self_loop_nodes().empty(); }

    bool operator==(const AdjacencyMatrix& other) const {
        return n_ == other.n_ && entries_ == other.entries_ && labels_ == other.labels_;
    }

private:
    std::size_t n_;
    std::vector<std::uint8_t> entries_;
    std::vector<std::string> labels_;
    std::unordered_map<std::string, std::size_t> index_;
};

/// Builds the adjacency matrix from an edge list. Nodes in `explicit_nodes`
/// come first (isolated ones keep an all-zero row), then nodes in order of
/// first appearance in `edges`. Duplicate edges collapse to one entry.
AdjacencyMatrix build_adjacency(std::span<const Edge> edges,
                                std::span<const std::string> explicit_nodes = {});

struct OutDegreeVector {
    std::vector<std::size_t> values;
};

OutDegreeVector out_degrees(const AdjacencyMatrix& adjacency);

enum class DanglingPolicy {
    Reject,           ///< out-degree zero is an error
    UniformTeleport,  ///< dangling row becomes (1/n, ..., 1/n)
    SelfLoop,         ///< dangling row becomes the unit vector at i
};

/// Nonnegative matrix whose rows each sum to 1.
class RowStochasticMatrix {
public:
    static constexpr double kRowSumTolerance = 1e-12;

    /// Validates `weights`: square, entries in [0, 1], row sums within
    /// kRowSumTolerance of 1. Labels default to "1".."n".
    explicit RowStochasticMatrix(DenseMatrix weights, std::vector<std::string> labels = {});

    std::size_t size() const noexcept { return weights_.rows(); }
    double operator()(std::size_t i, std::size_t j) const noexcept { return weights_(i, j); }
    const DenseMatrix& dense() const noexcept { return weights_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }

private:
    DenseMatrix weights_;
    std::vector<std::string> labels_;
};

/// w_ij = a_ij / od(i); rows with od(i) = 0 are handled by `policy`.
/// Throws DanglingNode under DanglingPolicy::Reject.
RowStochasticMatrix row_normalize(const AdjacencyMatrix& adjacency,
                                  DanglingPolicy policy = DanglingPolicy::Reject);

}  // namespace infrank
