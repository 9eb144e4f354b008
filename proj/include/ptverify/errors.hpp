#ifndef PTVERIFY_ERRORS_HPP
#define PTVERIFY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ptverify {

/// Base class for all domain errors thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A NaN or Inf reached a public operation.
class NonFiniteError : public Error {
public:
    explicit NonFiniteError(const std::string& what) : Error(what) {}
};

/// Input matrix fails the Hermiticity predicate.
class NotHermitianError : public Error {
public:
    explicit NotHermitianError(const std::string& what) : Error(what) {}
};

/// Eigenvalue below the PSD clamp threshold.
class NegativeEigenvalueError : public Error {
public:
    explicit NegativeEigenvalueError(const std::string& what) : Error(what) {}
};

/// Positive factor of a polar decomposition is numerically singular.
class SingularFactorError : public Error {
public:
    explicit SingularFactorError(const std::string& what) : Error(what) {}
};

/// Parameters lie in the broken phase (complex-conjugate spectrum).
class BrokenPhaseError : public Error {
public:
    explicit BrokenPhaseError(const std::string& what) : Error(what) {}
};

/// Parameters lie on the phase boundary where eigenvectors coalesce.
class ExceptionalPointError : public Error {
public:
    explicit ExceptionalPointError(const std::string& what) : Error(what) {}
};

/// Post-selected state is orthogonal to the pre-selected one.
class OrthogonalPostSelectionError : public Error {
public:
    explicit OrthogonalPostSelectionError(const std::string& what) : Error(what) {}
};

/// A caller-supplied value violates a documented precondition.
class InvalidInputError : public Error {
public:
    explicit InvalidInputError(const std::string& what) : Error(what) {}
};

} // namespace ptverify

#endif
