#pragma once

#include <stdexcept>
#include <string>

namespace cipp {

// Error categories; the CLI maps them to process exit codes
// (validation = 1, io = 2, pipeline = 3).
enum class ErrorKind { Validation = 1, Io = 2, Pipeline = 3 };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

// Bad parameters, violated invariants, malformed configs.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& what) : Error(ErrorKind::Validation, what) {}
};

// Missing or unreadable files, unparseable file contents.
class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error(ErrorKind::Io, what) {}
};

// A pipeline stage could not produce a result from otherwise valid inputs.
class PipelineError : public Error {
public:
    explicit PipelineError(const std::string& what) : Error(ErrorKind::Pipeline, what) {}
};

} // namespace cipp
