#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "infrank/graph.hpp"

namespace infrank {

enum class InputFormat { EdgeList, DenseMatrix };

/// One `source<TAB>target` pair per line. Lines starting with '#' and blank
/// lines are skipped; a trailing '\r' is ignored. Throws ParseError.
std::vector<Edge> read_edge_list(std::istream& in);

/// First line n, then n lines of n space-separated 0/1 integers. Nodes are
/// labeled "1".."n". Throws ParseError.
AdjacencyMatrix read_dense_matrix(std::istream& in);

void write_dense_matrix(std::ostream& out, const AdjacencyMatrix& adjacency);

/// Reads a graph file. Throws InvalidArgument if it cannot be opened.
AdjacencyMatrix load_graph(const std::filesystem::path& path, InputFormat format);

}  // namespace infrank
