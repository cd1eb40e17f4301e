#pragma once

#include <stdexcept>
#include <string>

namespace binfair {

/// Base class for all library errors.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input violates a documented precondition: dimension mismatch, overlapping
/// bundles, out-of-range indices, malformed parameters.
class validation_error : public error {
public:
    using error::error;
};

/// An operation was asked to run on a valuation class it does not support.
class class_error : public error {
public:
    using error::error;
};

/// An exhaustive enumeration would exceed the configured budget. Carries the
/// estimated number of states the computation would need.
class budget_error : public error {
public:
    budget_error(const std::string& what, double required_states)
        : error(what), required_states_(required_states) {}

    double required_states() const noexcept { return required_states_; }

private:
    double required_states_;
};

/// An internal invariant broke mid-run. When raised by the solver this
/// indicates a value oracle that does not satisfy its declared class.
class invariant_error : public error {
public:
    using error::error;
};

/// Malformed document or schema violation while reading JSON inputs.
class parse_error : public error {
public:
    using error::error;
};

}  // namespace binfair
