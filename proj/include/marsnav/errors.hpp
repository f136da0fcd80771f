#pragma once

#include <stdexcept>
#include <string>

namespace marsnav {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid construction/operation parameter (non-positive extent, bad config value, ...).
class ParameterError : public Error {
public:
    using Error::Error;
};

/// Query outside the modeled world.
class OutOfBoundsError : public Error {
public:
    using Error::Error;
};

/// Not enough data for an estimate (matches, points, ...).
class InsufficientDataError : public Error {
public:
    using Error::Error;
};

/// Input geometry does not constrain the solution (collinear points etc.).
class DegenerateGeometryError : public Error {
public:
    using Error::Error;
};

/// Projection of a point with non-positive depth.
class BehindCameraError : public Error {
public:
    using Error::Error;
};

/// Config file problem; carries the offending field name.
class ConfigError : public Error {
public:
    ConfigError(const std::string& field, const std::string& what)
        : Error("config field '" + field + "': " + what), field_(field) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

}  // namespace marsnav
