#pragma once

#include <stdexcept>
#include <string>

namespace xgrag {

// Error categories mirrored one-to-one by the C API status codes.
enum class ErrorCode {
    invalid_argument,
    io,
    parse,
    not_found,
    backend,
    no_convergence,
    state,
    internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void throw_error(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

} // namespace xgrag
