#include "infrank/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>

#include "infrank/errors.hpp"

namespace infrank {
namespace {

void strip_cr(std::string& line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
}

bool is_blank(std::string_view line) {
    return line.find_first_not_of(" \t") == std::string_view::npos;
}

std::vector<std::string_view> split_spaces(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    while (pos < line.size()) {
        const std::size_t start = line.find_first_not_of(" \t", pos);
        if (start == std::string_view::npos) break;
        std::size_t end = line.find_first_of(" \t", start);
        if (end == std::string_view::npos) end = line.size();
        fields.push_back(line.substr(start, end - start));
        pos = end;
    }
    return fields;
}

}  // namespace

std::vector<Edge> read_edge_list(std::istream& in) {
    std::vector<Edge> edges;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        strip_cr(line);
        if (is_blank(line) || line.front() == '#') continue;
        const std::size_t tab = line.find('\t');
        if (tab == std::string::npos) throw ParseError(line_no, "expected source<TAB>target");
        if (line.find('\t', tab + 1) != std::string::npos) {
            throw ParseError(line_no, "more than two fields");
        }
        std::string source = line.substr(0, tab);
        std::string target = line.substr(tab + 1);
        if (source.empty() || target.empty()) throw ParseError(line_no, "empty node label");
        edges.emplace_back(std::move(source), std::move(target));
    }
    return edges;
}

AdjacencyMatrix read_dense_matrix(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    auto next_line = [&]() -> bool {
        if (!std::getline(in, line)) return false;
        ++line_no;
        strip_cr(line);
        return true;
    };

    if (!next_line()) throw ParseError(1, "missing node count");
    const auto header = split_spaces(line);
    std::size_t n = 0;
    if (header.size() != 1) throw ParseError(line_no, "first line must hold the node count");
    auto [ptr, ec] = std::from_chars(header[0].data(), header[0].data() + header[0].size(), n);
    if (ec != std::errc{} || ptr != header[0].data() + header[0].size()) {
        throw ParseError(line_no, "node count is not a nonnegative integer");
    }
    if (n == 0) throw EmptyGraph();

    std::vector<std::uint8_t> entries;
    entries.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!next_line()) throw ParseError(line_no + 1, "expected " + std::to_string(n) + " rows");
        const auto fields = split_spaces(line);
        if (fields.size() != n) {
            throw ParseError(line_no, "expected " + std::to_string(n) + " entries, found " +
                                          std::to_string(fields.size()));
        }
        for (auto field : fields) {
            if (field != "0" && field != "1") throw ParseError(line_no, "entries must be 0 or 1");
            entries.push_back(field == "1" ? 1 : 0);
        }
    }
    while (next_line()) {
        if (!is_blank(line)) throw ParseError(line_no, "unexpected content after the matrix");
    }
    return AdjacencyMatrix(n, std::move(entries), default_labels(n));
}

void write_dense_matrix(std::ostream& out, const AdjacencyMatrix& adjacency) {
    const std::size_t n = adjacency.size();
    out << n << '\n';
    for (std::size_t i = 0; i < n; ++i) {
        auto row = adjacency.row(i);
        for (std::size_t j = 0; j < n; ++j) {
            if (j) out << ' ';
            out << static_cast<int>(row[j]);
        }
        out << '\n';
    }
}

AdjacencyMatrix load_graph(const std::filesystem::path& path, InputFormat format) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open '" + path.string() + "'");
    if (format == InputFormat::DenseMatrix) return read_dense_matrix(in);
    const auto edges = read_edge_list(in);
    return build_adjacency(edges);
}

}  // namespace infrank
