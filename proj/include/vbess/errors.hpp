#pragma once

#include <stdexcept>
#include <string>

namespace vbess {

// Bad user input: malformed config, invalid parameter, inconsistent series.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or incomplete profile/tariff files.
class IngestError : public std::runtime_error {
public:
    explicit IngestError(const std::string& what) : std::runtime_error(what) {}
};

// A solve that was expected to reach optimality did not.
class SolveError : public std::runtime_error {
public:
    explicit SolveError(const std::string& what) : std::runtime_error(what) {}
};

// Forecaster asked to predict before any usable history exists.
class InsufficientHistoryError : public ValidationError {
public:
    explicit InsufficientHistoryError(const std::string& what) : ValidationError(what) {}
};

}  // namespace vbess
