#pragma once

#include <stdexcept>
#include <string>

namespace hkit {

/// Declared Hoelder exponents do not satisfy the Young condition
/// alpha + beta > 1 (or its two-dimensional analogue).
class young_condition_error : public std::runtime_error {
public:
    explicit young_condition_error(const std::string& what)
        : std::runtime_error(what) {}
};

/// A winding-number query landed inside the guard band around the curve.
class on_curve_error : public std::runtime_error {
public:
    explicit on_curve_error(const std::string& what)
        : std::runtime_error(what) {}
};

/// File could not be read/written or has a malformed layout.
class io_error : public std::runtime_error {
public:
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

/// Bad experiment configuration (unknown key, missing parameter, ...).
class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& what)
        : std::runtime_error(what) {}
};

} // namespace hkit
