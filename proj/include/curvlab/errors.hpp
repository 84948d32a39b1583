#pragma once

#include <stdexcept>
#include <string>

namespace curvlab {

// All library failures derive from Error. The CLI maps the three kinds to
// exit codes 2 (input, domain) and 3 (resource).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input: unsorted simplices, bad JSON, unknown letters.
class InputError : public Error {
public:
    using Error::Error;
};

// Well-formed input outside an operation's domain.
class DomainError : public Error {
public:
    using Error::Error;
};

// A configured size cap was exceeded.
class ResourceError : public Error {
public:
    using Error::Error;
};

}  // namespace curvlab
