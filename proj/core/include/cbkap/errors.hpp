#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cbkap {

// Caller misuse: mismatched field contexts, bad dimensions, invalid config.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Matrix inversion hit a singular input. Callers (TTP setup, keygen) catch
// this to resample, so it is a distinct type from UsageError.
class SingularMatrixError : public std::runtime_error {
public:
    SingularMatrixError() : std::runtime_error("singular matrix") {}
};

// A braid-word evaluation asked for a tau index outside the stored range.
class EvaluationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Retry budget exhausted while sampling invertible matrices.
class SetupError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed bytes in the canonical binary format. Carries the byte offset
// at which decoding failed.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t offset, const std::string& what)
        : std::runtime_error("parse error at offset " + std::to_string(offset) + ": " + what),
          offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

} // namespace cbkap
