#pragma once

#include <stdexcept>
#include <string>

namespace infoflow {

/// Base class for every error raised by the library. The CLI maps each
/// subclass to its own exit status.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A series with zero variance, too few samples, or otherwise unusable.
class DegenerateInput : public Error {
public:
    using Error::Error;
};

/// Covariance matrix singular or with condition number above the limit.
class SingularCovariance : public Error {
public:
    using Error::Error;
};

/// Observed Fisher information matrix could not be inverted.
class SingularInformation : public Error {
public:
    using Error::Error;
};

/// All terms of a node's entropy budget vanish, so no normalizer exists.
class DegenerateNormalizer : public Error {
public:
    using Error::Error;
};

/// A simulated trajectory blew up.
class Divergence : public Error {
public:
    using Error::Error;
};

/// Malformed CSV or JSON input. Row/column are 1-based; 0 means unknown.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t row = 0, std::size_t column = 0)
        : Error(format(what, row, column)), row_(row), column_(column) {}

    std::size_t row() const noexcept { return row_; }
    std::size_t column() const noexcept { return column_; }

private:
    static std::string format(const std::string& what, std::size_t row, std::size_t column) {
        if (row == 0) return what;
        std::string out = what + " (row " + std::to_string(row);
        if (column != 0) out += ", column " + std::to_string(column);
        return out + ")";
    }

    std::size_t row_;
    std::size_t column_;
};

/// File could not be opened for reading or writing.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace infoflow
