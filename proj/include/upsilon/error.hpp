#pragma once

#include <stdexcept>
#include <string>

namespace upsilon {

/// Machine-readable failure category, surfaced verbatim in CLI error objects.
enum class ErrorKind {
    invalid_graph,
    parse,
    invalid_argument,
    too_large,
    infeasible,
    isolated_vertices,
    not_converged,
    certification_failed,
    io,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace upsilon
