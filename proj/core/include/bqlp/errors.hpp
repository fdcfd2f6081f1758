#pragma once

#include <stdexcept>
#include <string>

namespace bqlp {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid grid, solver, or run configuration. `field()` names the offending
/// entry using dotted config paths such as "physics.nu".
class ConfigError : public Error {
public:
    ConfigError(std::string field, const std::string& message)
        : Error(field.empty() ? message : field + ": " + message), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

/// Exponent pair or other numerical parameter outside its admissible range.
class ParameterError : public Error {
public:
    using Error::Error;
};

/// Advective CFL number above the configured ceiling; the step was not taken.
class CflError : public Error {
public:
    CflError(double cfl, double limit);

    double cfl() const noexcept { return cfl_; }
    double limit() const noexcept { return limit_; }

private:
    double cfl_;
    double limit_;
};

/// Ledger samples supplied out of time order.
class SequencingError : public Error {
public:
    using Error::Error;
};

/// Dissipation cutoff requested where it is not defined (min{nu, kappa} = 0).
class UndefinedCutoffError : public Error {
public:
    using Error::Error;
};

/// Malformed, truncated, or incompatible snapshot file.
class SnapshotError : public Error {
public:
    using Error::Error;
};

/// Filesystem failure while writing outputs.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace bqlp
