#pragma once

#include <stdexcept>
#include <string>

namespace ultrametric {

// Error taxonomy shared by the whole library. The CLI maps `kind()` onto
// exit codes and the {"error": kind, "message": text} stderr document.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

// Bad argument values (non-prime p, mismatched parents, empty sample sets).
struct InputError : Error {
    explicit InputError(const std::string& msg) : Error("input", msg) {}
};

// Mathematically undefined requests (inverse of zero, ZERO to a nonpositive
// power, valuation of a multi-prime magnitude).
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error("domain", msg) {}
};

// Exact computation would exceed a configured bound; loud failure instead of
// a wrong answer.
struct ResourceError : Error {
    explicit ResourceError(const std::string& msg) : Error("resource", msg) {}
};

// An irreducibility certificate failed validation against (f, p).
struct CertificateError : Error {
    explicit CertificateError(const std::string& msg) : Error("certificate", msg) {}
};

// A checked operation hypothesis failed; message carries the witness.
struct PreconditionError : Error {
    explicit PreconditionError(const std::string& msg) : Error("precondition", msg) {}
};

// Malformed textual input (polynomials, rationals, descriptor files).
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error("parse", msg) {}
};

} // namespace ultrametric
