#pragma once

#include <stdexcept>
#include <string>

namespace conftree {

// Base for every error this library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Tensor shape or rank mismatch; message names both shapes.
struct ShapeError : Error {
    using Error::Error;
};

// Malformed input document (transcript or conference JSON).
struct ParseError : Error {
    using Error::Error;
};

// Invalid configuration or contract violation (bad dims, B < 2, ...).
struct ConfigError : Error {
    using Error::Error;
};

// Annotation backend failure (remote unreachable, unparseable label).
struct BackendError : Error {
    using Error::Error;
};

// A tree failed validation where a valid tree was required.
struct ValidationError : Error {
    using Error::Error;
};

}  // namespace conftree
