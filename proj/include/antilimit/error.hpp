#pragma once

#include <stdexcept>
#include <string>

namespace antilimit {

/// Base of every error raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class duplicate_abscissa : public error {
public:
    using error::error;
};

class out_of_terms : public error {
public:
    using error::error;
};

class parse_error : public error {
public:
    using error::error;
};

class domain_error : public error {
public:
    using error::error;
};

class precision_unachievable : public error {
public:
    using error::error;
};

class spec_mismatch : public error {
public:
    using error::error;
};

/// Raised whenever a series cannot be assigned a value by polynomial
/// extrapolation. The CLI maps every subclass to the same exit status.
class summability_error : public error {
public:
    using error::error;
};

/// No polynomial of degree <= max_degree reproduces the subsequence.
class not_polynomial : public summability_error {
public:
    using summability_error::summability_error;
};

/// The supplied data ran out before a degree could be certified.
class insufficient_terms : public summability_error {
public:
    using summability_error::summability_error;
};

class not_alternating_divergent : public summability_error {
public:
    using summability_error::summability_error;
};

/// p_odd - p_even is a nonzero constant: the branches never meet.
class no_intersection : public summability_error {
public:
    using summability_error::summability_error;
};

class inconsistent_value : public summability_error {
public:
    using summability_error::summability_error;
};

} // namespace antilimit
