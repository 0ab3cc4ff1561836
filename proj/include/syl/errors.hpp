#pragma once

#include <stdexcept>
#include <string>

namespace syl {

// Input outside the mathematical domain of an operation (division by an
// interval containing zero, epsilon outside (0,1], malformed interval, ...).
class domain_error : public std::domain_error {
public:
    explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

// Eigenvalue vector outside the positivity cone required by a normalized
// symmetric-function evaluation.
class cone_error : public domain_error {
public:
    explicit cone_error(const std::string& what) : domain_error(what) {}
};

// A numerical process failed to converge (step size underflow, tolerance
// not reachable, self-test mismatch).
class numerical_error : public std::runtime_error {
public:
    explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace syl
