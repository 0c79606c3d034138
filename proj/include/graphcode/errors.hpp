#pragma once

#include <stdexcept>
#include <string>

namespace graphcode {

// Invalid parameters (bad n/r ranges, dimension mismatches, limits).
struct parameter_error : std::invalid_argument {
    explicit parameter_error(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed external input (edge-list files, matrix text fixtures).
struct format_error : std::runtime_error {
    explicit format_error(const std::string& what) : std::runtime_error(what) {}
};

// The input violates the storage model (isolated vertex, non-codeword state).
struct model_error : std::runtime_error {
    explicit model_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace graphcode
