/*
 * shiftlab — symbolic dynamics toolkit
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <stdexcept>
#include <string>

namespace shiftlab {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Bad input: precondition violation, malformed file, inconsistent alphabets.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

/// A configured resource cap was exceeded (subset blow-up, lcm overflow, ...).
class ResourceError : public Error {
public:
    explicit ResourceError(const std::string& msg) : Error(msg) {}
};

/// The library contradicted one of its own guarantees. Always a bug.
class InternalError : public Error {
public:
    explicit InternalError(const std::string& msg) : Error(msg) {}
};

/// A shift-space description whose language is empty.
class EmptyShiftError : public ValidationError {
public:
    explicit EmptyShiftError(const std::string& msg) : ValidationError(msg) {}
};

} // namespace shiftlab
