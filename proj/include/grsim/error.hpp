#pragma once

#include <stdexcept>
#include <string>

namespace grsim {

// Invalid values, out-of-range arguments, malformed records. Maps to exit code 2.
struct data_error : std::runtime_error {
    explicit data_error(const std::string& what) : std::runtime_error(what) {}
};

// Filesystem and stream failures. Maps to exit code 3.
struct io_error : std::runtime_error {
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace grsim
