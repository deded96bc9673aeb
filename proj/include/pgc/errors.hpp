#pragma once

#include <stdexcept>
#include <string>

namespace pgc {

/// Expression text could not be parsed. `column` is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, int column)
        : std::runtime_error(std::move(message)), column_(column) {}
    int column() const { return column_; }

private:
    int column_;
};

/// Evaluation left the domain of a subexpression (ln of a nonpositive
/// value, division by zero, ...). Carries the offending subexpression.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string message, std::string subexpression, double at)
        : std::runtime_error(std::move(message)),
          subexpression_(std::move(subexpression)),
          at_(at) {}
    const std::string& subexpression() const { return subexpression_; }
    double at() const { return at_; }

private:
    std::string subexpression_;
    double at_;
};

/// The curve fails the admissibility condition y''^2 - z''^2 != 0 at `s`.
class AdmissibilityError : public std::runtime_error {
public:
    AdmissibilityError(std::string message, double s, double value)
        : std::runtime_error(std::move(message)), s_(s), value_(value) {}
    double s() const { return s_; }
    double value() const { return value_; }

private:
    double s_;
    double value_;
};

/// An operation that divides by the torsion was asked to run where
/// |tau| falls below tau_eps (or tau changes sign where one sign is required).
class ZeroTorsionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Frame assembly failed: orientation sign flipped across the grid or the
/// normal lost its unit-timelike normalization.
class FrameError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The normal component of the position vector is lightlike somewhere, so
/// ratios dividing by m2^2 - m1^2 are undefined (first-kind overlap).
class DegenerateNormalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Overflow or other non-recoverable numeric failure.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A curve specification file is malformed. `field` names the bad entry.
class SpecError : public std::runtime_error {
public:
    SpecError(std::string message, std::string field = {})
        : std::runtime_error(std::move(message)), field_(std::move(field)) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

} // namespace pgc
