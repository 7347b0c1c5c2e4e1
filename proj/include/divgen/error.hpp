#pragma once

#include <stdexcept>
#include <string>

namespace divgen {

enum class ErrorCode {
    invalid_parameter,
    length_mismatch,
    parse_error,
    degenerate_mapping,
    capacity_exceeded,
    insufficient_vectors,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace divgen
