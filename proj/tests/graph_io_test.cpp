#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "infrank/errors.hpp"
#include "infrank/graph_io.hpp"
#include "oracles.hpp"

using namespace infrank;

TEST(EdgeList, SkipsCommentsAndBlankLines) {
    std::istringstream in("# header\n\na\tb\r\n  \nb\ta\n# trailing\n");
    const auto edges = read_edge_list(in);
    ASSERT_EQ(edges.size(), 2u);
    EXPECT_EQ(edges[0], (Edge{"a", "b"}));
    EXPECT_EQ(edges[1], (Edge{"b", "a"}));
}

TEST(EdgeList, LabelsMayContainSpaces) {
    std::istringstream in("page one\tpage two\n");
    const auto edges = read_edge_list(in);
    EXPECT_EQ(edges.at(0), (Edge{"page one", "page two"}));
}

TEST(EdgeList, ReportsLineNumbers) {
    std::istringstream missing_tab("a\tb\n# ok\nc d\n");
    try {
        read_edge_list(missing_tab);
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3u);
    }
    std::istringstream extra_field("a\tb\tc\n");
    EXPECT_THROW(read_edge_list(extra_field), ParseError);
    std::istringstream empty_label("a\t\n");
    EXPECT_THROW(read_edge_list(empty_label), ParseError);
}

TEST(DenseFormat, Reads) {
    std::istringstream in("3\n0 1 1\n1 0 0\n1 0 0\n");
    const auto a = read_dense_matrix(in);
    EXPECT_EQ(a.size(), 3u);
    EXPECT_TRUE(a.link(0, 2));
    EXPECT_FALSE(a.link(1, 2));
    EXPECT_EQ(a.labels(), (std::vector<std::string>{"1", "2", "3"}));
}

TEST(DenseFormat, Errors) {
    auto line_of = [](const std::string& text) -> std::size_t {
        std::istringstream in(text);
        try {
            read_dense_matrix(in);
        } catch (const ParseError& e) {
            return e.line();
        }
        return 0;
    };
    EXPECT_EQ(line_of("x\n"), 1u);
    EXPECT_EQ(line_of("2\n0 1\n1\n"), 3u);
    EXPECT_EQ(line_of("2\n0 1\n1 2\n"), 3u);
    EXPECT_EQ(line_of("2\n0 1\n"), 3u);
    EXPECT_EQ(line_of("1\n0\n1\n"), 3u);
    EXPECT_EQ(line_of(""), 1u);
    std::istringstream zero("0\n");
    EXPECT_THROW(read_dense_matrix(zero), EmptyGraph);
}

TEST(DenseFormat, RoundTripProperty) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        const auto a = oracle::erdos_renyi(1 + trial, 0.3, rng);
        std::ostringstream out;
        write_dense_matrix(out, a);
        std::istringstream in(out.str());
        const auto b = read_dense_matrix(in);
        EXPECT_TRUE(std::equal(a.entries().begin(), a.entries().end(), b.entries().begin(),
                               b.entries().end()));
        std::ostringstream again;
        write_dense_matrix(again, b);
        EXPECT_EQ(again.str(), out.str());
        std::istringstream in2(again.str());
        EXPECT_EQ(read_dense_matrix(in2), b);
    }
}

TEST(LoadGraph, MissingFile) {
    EXPECT_THROW(load_graph("/nonexistent/graph.tsv", InputFormat::EdgeList), InvalidArgument);
}
