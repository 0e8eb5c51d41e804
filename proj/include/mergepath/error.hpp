#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mergepath {

enum class ErrorCode {
    UnknownVertex,
    UnknownEdge,
    InvalidGraph,
    VertexNotOnPath,
    OrderViolation,
    EndpointMismatch,
    EdgeRepetition,
    InvalidPath,
    CyclicGraph,
    NoPath,
    NotAMerge,
    DegreeViolation,
    PreconditionUnverified,
    CyclicInput,
    StalePlan,
    ValidationFailure,
    SourceMismatch,
    InvalidCut,
    BudgetExceeded,
    PartUnavailable,
    SearchExhausted,
    ParseError,
    UnknownGenerator,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace mergepath
