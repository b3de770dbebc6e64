#pragma once

#include <stdexcept>

namespace okamoto {

// Argument outside the mathematical domain of an operation (x not in [0,1],
// a not in (0,1), a non-ternary rational where k/3^m is required).
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Index range violation, e.g. a > b in a digit count over [a, b].
class range_error : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

// Requested table or grid exceeds the configured size cap.
class resource_error : public std::length_error {
public:
    using std::length_error::length_error;
};

// Series with ratio |t| >= 1.
class contraction_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class parse_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace okamoto
