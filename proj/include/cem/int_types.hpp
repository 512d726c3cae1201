#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace cem {

/// Arbitrary-precision signed integer. Every coefficient in the library is
/// one of these; machine-word overflow is not a failure mode we accept.
using Int = mpz_class;

/// Thrown when an exact division leaves a nonzero remainder. Distinguishes a
/// failed identity (the dividend genuinely is not a multiple) from API misuse.
class NotDivisibleError : public std::runtime_error {
public:
    explicit NotDivisibleError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Thrown when an enumeration or expansion would exceed its configured cap.
class ResourceCapError : public std::runtime_error {
public:
    explicit ResourceCapError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace cem
