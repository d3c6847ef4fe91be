#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace infrank {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Caller supplied a malformed value (bad damping factor, bad tolerance, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

class EmptyGraph : public Error {
public:
    EmptyGraph() : Error("graph has no nodes") {}
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// A node with out-degree zero was met under the Reject dangling policy.
class DanglingNode : public Error {
public:
    DanglingNode(std::size_t index, std::string label)
        : Error("dangling node '" + label + "' (index " + std::to_string(index) +
                ") has no outgoing links"),
          index_(index),
          label_(std::move(label)) {}

    std::size_t index() const noexcept { return index_; }
    const std::string& label() const noexcept { return label_; }

private:
    std::size_t index_;
    std::string label_;
};

/// The dense solver hit a zero pivot or produced values that break the
/// row-stochastic invariants of V. Cannot happen for valid input with 0 < alpha < 1.
class NumericalFailure : public Error {
public:
    using Error::Error;
};

/// Dense direct methods are refused above a size limit.
class ProblemTooLarge : public Error {
public:
    using Error::Error;
};

class DegenerateSize : public Error {
public:
    using Error::Error;
};

/// An iterative method needed more iterations than the configured cap.
///
/// For the truncated series, `required()` is the number of the last term the
/// tolerance demands. For the fixed point, `last_iterate()` and `residual()`
/// carry the state at the point of giving up.
class IterationCapExceeded : public Error {
public:
    IterationCapExceeded(std::string what, std::size_t required, std::size_t cap,
                         std::vector<double> last_iterate = {}, double residual = 0.0)
        : Error(std::move(what)),
          required_(required),
          cap_(cap),
          last_iterate_(std::move(last_iterate)),
          residual_(residual) {}

    std::size_t required() const noexcept { return required_; }
    std::size_t cap() const noexcept { return cap_; }
    const std::vector<double>& last_iterate() const noexcept { return last_iterate_; }
    double residual() const noexcept { return residual_; }

private:
    std::size_t required_;
    std::size_t cap_;
    std::vector<double> last_iterate_;
    double residual_;
};

/// Malformed input file. `line()` is 1-based.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& message)
        : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace infrank
