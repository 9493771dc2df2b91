#pragma once

#include <stdexcept>
#include <string>

namespace qchan {

// Precondition / contract failures raised by the library. The kind is kept
// machine-readable so front ends can map failures to exit codes.
enum class ErrorKind {
    NotSquare,
    NotHermitian,
    DimMismatch,
    DimOrder,
    DimTooSmall,
    ParamOutOfRange,
    NotNormalized,
    WeightInvalid,
    InvalidLabels,
    UnsupportedDims,
    IncompleteAnalyzer,
    DegenerateAnalyzer,
    InvalidDistribution,
    IllConditioned,
    InvalidInput,
    Io,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

inline void require(bool ok, ErrorKind kind, const std::string& message) {
    if (!ok) fail(kind, message);
}

const char* to_string(ErrorKind kind) noexcept;

}  // namespace qchan
