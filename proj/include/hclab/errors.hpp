#pragma once

#include <stdexcept>
#include <string>

namespace hclab {

// Malformed input text (graph files, rationals on the command line).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Arguments outside an operation's domain (negative fugacity, unknown
// vertex ids, infeasible generator parameters, ...).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Input too large for an exact computation cap.
class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// A certificate failed while an algorithm relied on it.
class CertificateError : public std::runtime_error {
public:
    explicit CertificateError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hclab
