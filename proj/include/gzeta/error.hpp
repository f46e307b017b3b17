#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gzeta {

// Input document or expression could not be parsed. CLI exit code 2.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A configured size cap was exceeded (group order, multiset enumeration,
// truncation order). CLI exit code 4.
struct SizeLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Semantic validation failure: invalid subgroup, bad action table, invalid
// stratum, mismatched groups. CLI exit code 3.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
    ValidationError(const std::string& what, std::vector<std::string> details)
        : std::runtime_error(what), diagnostics(std::move(details)) {}

    std::vector<std::string> diagnostics;
};

} // namespace gzeta
