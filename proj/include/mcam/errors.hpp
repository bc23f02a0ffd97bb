#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace mcam {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A frame or vector became unusable (zero length, parallel axes, handedness flip).
class GeometryError : public Error {
public:
    using Error::Error;
};

/// The engagement left the region where the guidance quantities are defined:
/// zero baseline (collision) or zero relative velocity.
class DegeneracyError : public Error {
public:
    explicit DegeneracyError(const std::string& what, std::optional<double> time = std::nullopt)
        : Error(time ? what + " at t=" + std::to_string(*time) : what), time_(time) {}

    [[nodiscard]] std::optional<double> time() const noexcept { return time_; }

private:
    std::optional<double> time_;
};

/// One of the accessibility hypotheses A1..A7 (or a derived requirement) does not hold.
class HypothesisError : public Error {
public:
    HypothesisError(std::string hypothesis, const std::string& what)
        : Error(hypothesis + ": " + what), hypothesis_(std::move(hypothesis)) {}

    [[nodiscard]] const std::string& hypothesis() const noexcept { return hypothesis_; }

private:
    std::string hypothesis_;
};

/// Malformed or inconsistent scenario configuration.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// File could not be read or written.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace mcam
