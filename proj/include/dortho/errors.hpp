#pragma once

#include <stdexcept>
#include <string>

namespace dortho {

// Base class for all library errors so callers can catch one type at the
// boundary (the CLI maps these onto exit codes).
struct DorthoError : std::runtime_error {
    explicit DorthoError(const std::string& what) : std::runtime_error(what) {}
};

// A terminating hypergeometric sum would divide by zero: some lower parameter
// hits a nonpositive integer before the numerator parameter truncates the sum.
struct ZeroDenominatorParameter : DorthoError {
    explicit ZeroDenominatorParameter(const std::string& what) : DorthoError(what) {}
};

// exp_nilpotent was handed a matrix whose powers never vanish.
struct NotNilpotent : DorthoError {
    explicit NotNilpotent(const std::string& what) : DorthoError(what) {}
};

// A polynomial index (j or n) lies outside the finite family for the given N.
struct IndexOutOfFamily : DorthoError {
    explicit IndexOutOfFamily(const std::string& what) : DorthoError(what) {}
};

// Matrix-route interpolation produced a polynomial of unexpected degree.
struct InterpolationDegreeMismatch : DorthoError {
    explicit InterpolationDegreeMismatch(const std::string& what) : DorthoError(what) {}
};

// Inverse-matrix reflection identity failed entrywise.
struct ReflectionMismatch : DorthoError {
    explicit ReflectionMismatch(const std::string& what) : DorthoError(what) {}
};

// An algebraic identity that must hold exactly produced a nonzero residual.
struct IdentityFailure : DorthoError {
    explicit IdentityFailure(const std::string& what) : DorthoError(what) {}
};

// A vanishing/non-vanishing pattern check found a value on the wrong side.
struct PatternViolation : DorthoError {
    explicit PatternViolation(const std::string& what) : DorthoError(what) {}
};

// Coherent-vector relations need eta != 0.
struct EtaZero : DorthoError {
    explicit EtaZero(const std::string& what) : DorthoError(what) {}
};

// Malformed rational literal or config value.
struct ParseError : DorthoError {
    explicit ParseError(const std::string& what) : DorthoError(what) {}
};

// Exact linear solve hit an inconsistent or rank-deficient system where a
// unique solution was required.
struct SingularSystem : DorthoError {
    explicit SingularSystem(const std::string& what) : DorthoError(what) {}
};

} // namespace dortho
