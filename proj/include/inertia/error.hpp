#pragma once

#include <stdexcept>
#include <string>

namespace inertia {

// Mismatched fields, variable counts, axis indices, malformed call arguments.
struct structural_error : std::invalid_argument {
    explicit structural_error(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed input text: hypersurface files, words, points, field tags.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// A randomized search ran out of its retry budget.
struct sampling_exhausted : std::runtime_error {
    explicit sampling_exhausted(const std::string& what) : std::runtime_error(what) {}
};

} // namespace inertia
