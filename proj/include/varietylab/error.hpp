#pragma once

#include <stdexcept>
#include <string>

namespace vlab {

// Domain errors: bad inputs, violated preconditions. CLI maps these to exit 1.
struct error : std::runtime_error {
    explicit error(const std::string &msg) : std::runtime_error(msg) {}
};

// A configured size cap would be exceeded. CLI maps these to exit 2.
struct cap_exceeded : error {
    explicit cap_exceeded(const std::string &msg) : error(msg) {}
};

} // namespace vlab
