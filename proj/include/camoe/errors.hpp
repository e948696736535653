#pragma once

#include <stdexcept>
#include <string>

namespace camoe {

/// Shape or dimension mismatch in a numeric operation.
struct InvalidDimensionError : std::runtime_error {
    explicit InvalidDimensionError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Bad argument value (empty batch, nonpositive power, malformed spec, ...).
struct InvalidArgumentError : std::runtime_error {
    explicit InvalidArgumentError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Class label outside [0, num_classes).
struct InvalidLabelError : std::runtime_error {
    explicit InvalidLabelError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Channel input violates its contract (e.g. negative noise level).
struct InvalidChannelError : std::runtime_error {
    explicit InvalidChannelError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Fading gain of zero cannot be equalized.
struct SingularChannelError : std::runtime_error {
    explicit SingularChannelError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Bitstream cannot be decoded (truncated or invalid prefix path).
struct DecodeError : std::runtime_error {
    explicit DecodeError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Text input failed to parse; carries a 1-based line number when known.
struct ParseError : std::runtime_error {
    long line = 0;
    ParseError(const std::string& msg, long line_no)
        : std::runtime_error(msg + " (line " + std::to_string(line_no) + ")"), line(line_no) {}
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Inconsistent configuration (checkpoint/scenario mismatch, unknown name, ...).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Operation called on a model in the wrong lifecycle stage.
struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace camoe
