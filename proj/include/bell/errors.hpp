#pragma once

#include <stdexcept>
#include <string>

namespace bell {

// Violated domain precondition or invariant (CLI exit code 1).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input document or unparsable value (CLI exit code 2).
struct DocumentError : std::runtime_error {
    explicit DocumentError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bell
