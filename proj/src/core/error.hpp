#pragma once

#include <stdexcept>
#include <string>

namespace phishlens {

enum class ErrorCode {
    MalformedUrl,
    InvalidThresholds,
    SchemaMismatch,
    BadLabel,
    BadValue,
    EmptyDataset,
    UnknownFeature,
    SingleClassTraining,
    NonFiniteLoss,
    DimensionMismatch,
    Io,
    InvalidArgument,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

} // namespace phishlens
