#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace mbb {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Structural problems found in a delegation graph. Carries the full
// violation list so callers can surface every offending node/edge at once.
struct ValidationError : Error {
    explicit ValidationError(std::vector<std::string> violations_)
        : Error(join(violations_)), violations(std::move(violations_)) {}

    std::vector<std::string> violations;

  private:
    static std::string join(const std::vector<std::string> &v) {
        std::string s = "invalid delegation graph";
        for (const auto &line : v) {
            s += "\n  - " + line;
        }
        return s;
    }
};

struct ParseError : Error {
    using Error::Error;
};

struct AllIsolatedError : Error {
    using Error::Error;
};

struct NoSuchNodeError : Error {
    using Error::Error;
};

struct NotABijectionError : Error {
    using Error::Error;
};

struct NonTerminationError : Error {
    using Error::Error;
};

struct NotABranchingError : Error {
    using Error::Error;
};

struct ZeroTreeCountError : Error {
    using Error::Error;
};

struct SingularSystemError : Error {
    using Error::Error;
};

struct EpsOutOfRangeError : Error {
    using Error::Error;
};

struct IllDefinedChainError : Error {
    using Error::Error;
};

struct NoLabeledNodesError : Error {
    using Error::Error;
};

struct TooLargeError : Error {
    using Error::Error;
};

} // namespace mbb
