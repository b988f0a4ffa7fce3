#pragma once

#include <stdexcept>
#include <string>

namespace degsplit {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SelfLoopError : Error {
    explicit SelfLoopError(int node)
        : Error("self-loop at node " + std::to_string(node)), node(node) {}
    int node;
};

struct NodeOutOfRangeError : Error {
    using Error::Error;
};

struct ParityError : Error {
    using Error::Error;
};

struct RetryExhaustedError : Error {
    using Error::Error;
};

struct BadParamError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct TypeError : Error {
    using Error::Error;
};

struct RangeError : Error {
    using Error::Error;
};

struct DomainError : Error {
    using Error::Error;
};

struct InvalidInputError : Error {
    using Error::Error;
};

struct BudgetExhaustedError : Error {
    BudgetExhaustedError(long resamples, const std::string& what)
        : Error(what), resamples(resamples) {}
    long resamples;
};

struct TooLargeError : Error {
    using Error::Error;
};

}  // namespace degsplit
