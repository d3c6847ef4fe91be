#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "infrank/centrality.hpp"
#include "infrank/graph_io.hpp"
#include "infrank/influence.hpp"

namespace infrank::cli {

enum class Mode {
    FjNormalized,
    FjUnnormalized,
    PageRankOriginal,
    PageRankNormalized,
    InfluenceMatrix,
    Verify,
};

enum class OutputFormat { Csv, Json, Table };

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitNumericalError = 2;

struct RunRequest {
    std::filesystem::path input_path;
    InputFormat input_format = InputFormat::EdgeList;
    Mode mode = Mode::PageRankOriginal;
    /// Unset means the mode's default: fixed point for PageRank, direct otherwise.
    std::optional<SolverMethod> method;
    DampingFactor alpha;
    /// Unset means 1e-10 for solvers and 1e-9 for verify.
    std::optional<double> tol;
    std::size_t max_iter = 10000;
    DanglingPolicy dangling = DanglingPolicy::Reject;
    bool exclude_diagonal = false;
    bool renormalize = false;
    OutputFormat output_format = OutputFormat::Csv;
};

std::string to_string(Mode mode);

/// Throws InvalidArgument if the flag combination is not meaningful.
void validate(const RunRequest& request);

/// Executes a request, writing the result to `out` and diagnostics to `err`.
/// Returns 0 on success, 1 on input errors, 2 on numerical errors (iteration
/// cap, dangling node under reject, failed verification).
int run(const RunRequest& request, std::ostream& out, std::ostream& err);

/// Full command line entry point, including the `dump` subcommand.
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// %.15g, with ".0" appended to integral results.
std::string format_value(double value);

}  // namespace infrank::cli
