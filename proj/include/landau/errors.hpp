#pragma once

#include <stdexcept>
#include <string>

namespace landau {

/// Base class of every error raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation.
class domain_error : public error {
public:
    using error::error;
};

/// A request would exceed a configured size or memory ceiling.
class resource_error : public error {
public:
    using error::error;
};

/// A query reaches past the limit of the sieve it was given.
class insufficient_sieve_error : public error {
public:
    using error::error;
};

/// No analytic bound covers the requested argument.
class no_bound_error : public error {
public:
    using error::error;
};

/// A condition that a proof guarantees was found violated.
class internal_error : public error {
public:
    using error::error;
};

/// Malformed on-disk data (prime cache, table CSV).
class format_error : public error {
public:
    using error::error;
};

} // namespace landau
