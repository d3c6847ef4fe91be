#include "infrank/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "infrank/errors.hpp"

namespace infrank::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr double kDefaultSolverTolerance = 1e-10;

const std::map<std::string, Mode> kModes{
    {"fj-normalized", Mode::FjNormalized},
    {"fj-unnormalized", Mode::FjUnnormalized},
    {"pagerank-original", Mode::PageRankOriginal},
    {"pagerank-normalized", Mode::PageRankNormalized},
    {"influence-matrix", Mode::InfluenceMatrix},
    {"verify", Mode::Verify},
};

const std::map<std::string, SolverMethod> kMethods{
    {"direct", SolverMethod::Direct},
    {"series", SolverMethod::Series},
    {"fixed-point", SolverMethod::FixedPoint},
};

const std::map<std::string, DanglingPolicy> kDanglingPolicies{
    {"reject", DanglingPolicy::Reject},
    {"error", DanglingPolicy::Reject},
    {"teleport", DanglingPolicy::UniformTeleport},
    {"uniform", DanglingPolicy::UniformTeleport},
    {"self-loop", DanglingPolicy::SelfLoop},
};

const std::map<std::string, OutputFormat> kFormats{
    {"csv", OutputFormat::Csv},
    {"json", OutputFormat::Json},
    {"table", OutputFormat::Table},
};

const std::map<std::string, InputFormat> kInputFormats{
    {"edgelist", InputFormat::EdgeList},
    {"dense", InputFormat::DenseMatrix},
};

constexpr const char* kModeHelp =
    "Modes (W = out-degree normalized adjacency, a = alpha = d, e = ones):\n"
    "  fj-normalized        c = ((1-a)/n) (I - a W^T)^{-1} e   (column averages of V)\n"
    "  fj-unnormalized      c = (1-a) (I - a W^T)^{-1} e       (column sums of V)\n"
    "  pagerank-original    PR(i) = (1-d) + d sum_{j->i} PR(j)/od(j)\n"
    "  pagerank-normalized  PR(i) = (1-d)/n + d sum_{j->i} PR(j)/od(j)\n"
    "  influence-matrix     V = (1-a)(I - a W)^{-1} = (1-a)(I + aW + a^2 W^2 + ...)\n"
    "  verify               checks pagerank-normalized == fj-normalized and\n"
    "                       pagerank-original == n * pagerank-normalized\n"
    "Exit status: 0 success, 1 input error, 2 numerical error.";

bool is_pagerank(Mode mode) {
    return mode == Mode::PageRankOriginal || mode == Mode::PageRankNormalized;
}

SolverMethod resolved_method(const RunRequest& request) {
    if (request.method) return *request.method;
    return is_pagerank(request.mode) ? SolverMethod::FixedPoint : SolverMethod::Direct;
}

double resolved_tol(const RunRequest& request) {
    if (request.tol) return *request.tol;
    return request.mode == Mode::Verify ? kDefaultEquivalenceTolerance : kDefaultSolverTolerance;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char ch : s) {
        if (ch == '"') quoted += '"';
        quoted += ch;
    }
    return quoted + '"';
}

// The value as it appears in text output, so JSON and CSV carry the same digits.
double rounded(double value) { return std::strtod(format_value(value).c_str(), nullptr); }

void write_padded_row(std::ostream& out, const std::vector<std::string>& cells,
                      const std::vector<std::size_t>& widths) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c) out << "  ";
        out << cells[c];
        if (c + 1 < cells.size()) out << std::string(widths[c] - cells[c].size(), ' ');
    }
    out << '\n';
}

void write_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> widths;
    for (const auto& row : rows) {
        widths.resize(std::max(widths.size(), row.size()), 0);
        for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
    }
    for (const auto& row : rows) write_padded_row(out, row, widths);
}

Json nodes_json(const CentralityVector& c) {
    const auto ranks = dense_ranks(c.values);
    Json nodes = Json::array();
    for (std::size_t i = 0; i < c.size(); ++i) {
        nodes.push_back({{"label", c.labels[i]}, {"value", rounded(c.values[i])}, {"rank", ranks[i]}});
    }
    return nodes;
}

void emit_centrality(std::ostream& out, const RunRequest& request, const CentralityVector& c) {
    const auto ranks = dense_ranks(c.values);
    switch (request.output_format) {
        case OutputFormat::Csv:
            out << "label,value,rank\n";
            for (std::size_t i = 0; i < c.size(); ++i) {
                out << csv_field(c.labels[i]) << ',' << format_value(c.values[i]) << ','
                    << ranks[i] << '\n';
            }
            break;
        case OutputFormat::Json: {
            Json doc{{"mode", to_string(request.mode)},
                     {"alpha", request.alpha.value()},
                     {"method", infrank::to_string(resolved_method(request))},
                     {"nodes", nodes_json(c)}};
            out << doc.dump(2) << '\n';
            break;
        }
        case OutputFormat::Table: {
            std::vector<std::vector<std::string>> rows{{"label", "value", "rank"}};
            for (std::size_t i = 0; i < c.size(); ++i) {
                rows.push_back({c.labels[i], format_value(c.values[i]), std::to_string(ranks[i])});
            }
            write_table(out, rows);
            break;
        }
    }
}

void emit_matrix(std::ostream& out, const RunRequest& request, const InfluenceMatrix& v) {
    const std::size_t n = v.size();
    switch (request.output_format) {
        case OutputFormat::Csv:
            out << "label";
            for (const auto& l : v.labels()) out << ',' << csv_field(l);
            out << '\n';
            for (std::size_t i = 0; i < n; ++i) {
                out << csv_field(v.labels()[i]);
                for (std::size_t j = 0; j < n; ++j) out << ',' << format_value(v(i, j));
                out << '\n';
            }
            break;
        case OutputFormat::Json: {
            Json matrix = Json::array();
            for (std::size_t i = 0; i < n; ++i) {
                Json row = Json::array();
                for (std::size_t j = 0; j < n; ++j) row.push_back(rounded(v(i, j)));
                matrix.push_back(std::move(row));
            }
            Json doc{{"mode", to_string(request.mode)},
                     {"alpha", request.alpha.value()},
                     {"method", infrank::to_string(resolved_method(request))},
                     {"labels", v.labels()},
                     {"matrix", std::move(matrix)}};
            out << doc.dump(2) << '\n';
            break;
        }
        case OutputFormat::Table: {
            std::vector<std::vector<std::string>> rows;
            std::vector<std::string> header{""};
            header.insert(header.end(), v.labels().begin(), v.labels().end());
            rows.push_back(std::move(header));
            for (std::size_t i = 0; i < n; ++i) {
                std::vector<std::string> row{v.labels()[i]};
                for (std::size_t j = 0; j < n; ++j) row.push_back(format_value(v(i, j)));
                rows.push_back(std::move(row));
            }
            write_table(out, rows);
            break;
        }
    }
}

void emit_report(std::ostream& out, const RunRequest& request, const EquivalenceReport& report,
                 const CentralityVector& normalized) {
    switch (request.output_format) {
        case OutputFormat::Csv:
            out << "n,alpha,max_abs_diff_normalized,max_abs_diff_scale_relation,pass,tol\n"
                << report.n << ',' << format_value(report.alpha.value()) << ','
                << format_value(report.max_abs_diff_normalized) << ','
                << format_value(report.max_abs_diff_scale_relation) << ','
                << (report.pass ? "true" : "false") << ',' << format_value(report.tol) << '\n';
            break;
        case OutputFormat::Json: {
            Json doc{{"mode", to_string(request.mode)},
                     {"alpha", request.alpha.value()},
                     {"method", infrank::to_string(SolverMethod::FixedPoint)},
                     {"nodes", nodes_json(normalized)},
                     {"n", report.n},
                     {"max_abs_diff_normalized", rounded(report.max_abs_diff_normalized)},
                     {"max_abs_diff_scale_relation", rounded(report.max_abs_diff_scale_relation)},
                     {"pass", report.pass},
                     {"tol", report.tol}};
            out << doc.dump(2) << '\n';
            break;
        }
        case OutputFormat::Table:
            write_table(out, {{"n", std::to_string(report.n)},
                              {"alpha", format_value(report.alpha.value())},
                              {"max_abs_diff_normalized", format_value(report.max_abs_diff_normalized)},
                              {"max_abs_diff_scale_relation",
                               format_value(report.max_abs_diff_scale_relation)},
                              {"pass", report.pass ? "true" : "false"},
                              {"tol", format_value(report.tol)}});
            break;
    }
}

int execute(const RunRequest& request, std::ostream& out, std::ostream& err) {
    const AdjacencyMatrix adjacency = load_graph(request.input_path, request.input_format);
    for (std::size_t i : adjacency.self_loop_nodes()) {
        err << "warning: node '" << adjacency.labels()[i] << "' links to itself\n";
    }

    SolverConfig config;
    config.alpha = request.alpha;
    config.tol = resolved_tol(request);
    config.max_iter = request.max_iter;
    config.method = resolved_method(request);
    config.validate();

    switch (request.mode) {
        case Mode::Verify: {
            CentralityVector normalized;
            const EquivalenceReport report = verify_equivalence(
                adjacency, request.alpha, request.dangling, config.tol, &normalized);
            emit_report(out, request, report, normalized);
            if (!report.pass) {
                err << "error: equivalence check failed at tolerance " << format_value(report.tol)
                    << '\n';
                return kExitNumericalError;
            }
            return kExitOk;
        }
        case Mode::PageRankOriginal:
        case Mode::PageRankNormalized: {
            const PageRankForm form = request.mode == Mode::PageRankOriginal
                                          ? PageRankForm::Original
                                          : PageRankForm::Normalized;
            emit_centrality(out, request, pagerank(adjacency, form, request.dangling, config));
            return kExitOk;
        }
        case Mode::InfluenceMatrix: {
            const RowStochasticMatrix w = row_normalize(adjacency, request.dangling);
            const InfluenceMatrix v =
                config.method == SolverMethod::Series
                    ? influence_series(w, config.alpha, config.tol, config.max_iter)
                    : influence_direct(w, config.alpha);
            emit_matrix(out, request, v);
            return kExitOk;
        }
        case Mode::FjNormalized:
        case Mode::FjUnnormalized: {
            const RowStochasticMatrix w = row_normalize(adjacency, request.dangling);
            if (request.exclude_diagonal) {
                const InfluenceMatrix v =
                    config.method == SolverMethod::Series
                        ? influence_series(w, config.alpha, config.tol, config.max_iter)
                        : influence_direct(w, config.alpha);
                emit_centrality(out, request,
                                total_effect_centrality(v, true, request.renormalize));
                return kExitOk;
            }
            const CentralityScale scale = request.mode == Mode::FjNormalized
                                              ? CentralityScale::Normalized
                                              : CentralityScale::Unnormalized;
            CentralityVector c;
            switch (config.method) {
                case SolverMethod::Direct: c = centrality_direct(w, config.alpha, scale); break;
                case SolverMethod::Series: c = centrality_series(w, config, scale); break;
                case SolverMethod::FixedPoint: c = centrality_fixed_point(w, config, scale); break;
            }
            emit_centrality(out, request, c);
            return kExitOk;
        }
    }
    return kExitOk;
}

}  // namespace

std::string to_string(Mode mode) {
    for (const auto& [name, m] : kModes) {
        if (m == mode) return name;
    }
    return "unknown";
}

std::string format_value(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", value);
    std::string s = buf;
    if (s.find_first_not_of("-0123456789") == std::string::npos) s += ".0";
    return s;
}

void validate(const RunRequest& request) {
    if (request.tol && !(*request.tol > 0.0)) throw InvalidArgument("--tol must be positive");
    if (request.max_iter < 1) throw InvalidArgument("--max-iter must be at least 1");
    const SolverMethod method = resolved_method(request);
    if (request.mode == Mode::InfluenceMatrix && method == SolverMethod::FixedPoint) {
        throw InvalidArgument("influence-matrix needs --method direct or series");
    }
    if (request.exclude_diagonal) {
        if (request.mode != Mode::FjNormalized) {
            throw InvalidArgument("--exclude-diagonal applies to fj-normalized only");
        }
        if (method == SolverMethod::FixedPoint) {
            throw InvalidArgument("--exclude-diagonal needs V; use --method direct or series");
        }
    }
    if (request.renormalize && !request.exclude_diagonal) {
        throw InvalidArgument("--renormalize requires --exclude-diagonal");
    }
}

int run(const RunRequest& request, std::ostream& out, std::ostream& err) {
    try {
        validate(request);
        // Buffer so a failure part way through never leaves partial output.
        std::ostringstream buffer;
        const int status = execute(request, buffer, err);
        out << buffer.str();
        return status;
    } catch (const ParseError& e) {
        err << "error: " << request.input_path.string() << ": " << e.what() << '\n';
        return kExitInputError;
    } catch (const IterationCapExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kExitNumericalError;
    } catch (const DanglingNode& e) {
        err << "error: " << e.what() << "; pass --dangling teleport or self-loop to repair\n";
        return kExitNumericalError;
    } catch (const NumericalFailure& e) {
        err << "error: " << e.what() << '\n';
        return kExitNumericalError;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }
}

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Total-effect centrality, influence matrices and PageRank for directed graphs",
                 "infrank"};
    app.footer(kModeHelp);

    std::string input;
    Mode mode = Mode::PageRankOriginal;
    std::optional<SolverMethod> method;
    double alpha = DampingFactor::kDefault;
    std::optional<double> tol;
    std::size_t max_iter = 10000;
    DanglingPolicy dangling = DanglingPolicy::Reject;
    bool exclude_diagonal = false;
    bool renormalize = false;
    OutputFormat format = OutputFormat::Csv;
    InputFormat input_format = InputFormat::EdgeList;

    app.add_option("input", input, "Graph file (edge list: source<TAB>target per line)");
    app.add_option("--mode", mode, "What to compute (see below)")
        ->transform(CLI::CheckedTransformer(kModes, CLI::ignore_case).description(""));
    app.add_option("--method", method, "Solver: direct, series or fixed-point")
        ->transform(CLI::CheckedTransformer(kMethods, CLI::ignore_case).description(""));
    app.add_option("--alpha,-d", alpha, "Damping factor, 0 < alpha < 1")->capture_default_str();
    app.add_option("--tol", tol, "Tolerance (default 1e-10; 1e-9 for verify)");
    app.add_option("--max-iter", max_iter, "Iteration cap")->capture_default_str();
    app.add_option("--dangling", dangling,
                   "Out-degree zero handling: reject (alias error), teleport (alias uniform), "
                   "self-loop")
        ->transform(CLI::CheckedTransformer(kDanglingPolicies, CLI::ignore_case).description(""));
    app.add_flag("--exclude-diagonal", exclude_diagonal,
                 "fj-normalized: average the n-1 off-diagonal entries of each column of V");
    app.add_flag("--renormalize", renormalize,
                 "With --exclude-diagonal, rescale the averages to sum to 1");
    app.add_option("--format", format, "Output: csv, json or table")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case).description(""));
    app.add_option("--input-format", input_format, "edgelist or dense")
        ->transform(CLI::CheckedTransformer(kInputFormats, CLI::ignore_case).description(""));

    auto* dump = app.add_subcommand("dump", "Write the adjacency matrix in dense format");
    std::string dump_input;
    InputFormat dump_format = InputFormat::EdgeList;
    dump->add_option("input", dump_input, "Graph file")->required();
    dump->add_option("--input-format", dump_format, "edgelist or dense")
        ->transform(CLI::CheckedTransformer(kInputFormats, CLI::ignore_case).description(""));
    app.require_subcommand(0, 1);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }

    if (dump->parsed()) {
        try {
            const AdjacencyMatrix adjacency = load_graph(dump_input, dump_format);
            write_dense_matrix(out, adjacency);
            return kExitOk;
        } catch (const Error& e) {
            err << "error: " << dump_input << ": " << e.what() << '\n';
            return kExitInputError;
        }
    }
    if (input.empty()) {
        err << "error: an input graph file is required\n";
        return kExitInputError;
    }

    RunRequest request;
    request.input_path = input;
    request.input_format = input_format;
    request.mode = mode;
    request.method = method;
    try {
        request.alpha = DampingFactor(alpha);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    request.tol = tol;
    request.max_iter = max_iter;
    request.dangling = dangling;
    request.exclude_diagonal = exclude_diagonal;
    request.renormalize = renormalize;
    request.output_format = format;
    return run(request, out, err);
}

}  // namespace infrank::cli
