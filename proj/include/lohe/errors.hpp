#pragma once

#include <stdexcept>
#include <string>

namespace lohe {

struct dimension_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct validation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct convergence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when an integration produces non-finite entries; carries the time
// of the first offending step.
struct divergence_error : std::runtime_error {
    divergence_error(const std::string& msg, double t_fail)
        : std::runtime_error(msg), time(t_fail) {}
    double time;
};

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace lohe
